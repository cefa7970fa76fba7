#include "vfsig/error.hpp"
#include "vfsig/frobenius.hpp"

#include <algorithm>
#include <thread>

namespace vfsig {

namespace {

// Histogram of sum(b) mod d over all b whose first coordinate lies in
// [first_begin, first_end).
std::vector<std::uint64_t> sum_histogram(unsigned num_vars, std::uint64_t range, unsigned d,
                                         std::uint64_t first_begin, std::uint64_t first_end) {
  std::vector<std::uint64_t> hist(d, 0);
  std::vector<std::uint64_t> b(num_vars, 0);
  for (std::uint64_t first = first_begin; first < first_end; ++first) {
    b.assign(num_vars, 0);
    b[0] = first;
    while (true) {
      std::uint64_t sum = 0;
      for (auto x : b) sum += x;
      ++hist[sum % d];
      std::size_t pos = num_vars;
      while (pos-- > 1) {
        if (++b[pos] < range) break;
        b[pos] = 0;
      }
      if (pos == 0 || num_vars == 1) break;
    }
  }
  return hist;
}

}  // namespace

DecompositionMultiset enumerate_oracle(const FrobeniusParams& params, const GradedClass& source,
                                       std::uint64_t max_vectors, unsigned workers) {
  if (params.root_rank() > BigInt(static_cast<unsigned long>(max_vectors)))
    throw GuardExceeded("enumeration of p^{ne} = " + to_string(params.root_rank()) +
                        " vectors exceeds the limit " + std::to_string(max_vectors));
  const unsigned n = params.context().num_vars();
  const unsigned d = params.context().degree();
  const std::uint64_t range = params.frobenius_power().get_ui();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(range)));

  std::vector<std::vector<std::uint64_t>> partial(workers);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (range + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = std::min(range, w * chunk);
      const std::uint64_t hi = std::min(range, lo + chunk);
      pool.emplace_back([&, w, lo, hi] { partial[w] = sum_histogram(n, range, d, lo, hi); });
    }
  }
  std::vector<std::uint64_t> hist(d, 0);
  for (const auto& h : partial)
    for (unsigned t = 0; t < d; ++t) hist[t] += h[t];

  const std::uint64_t power_mod_d = range % d;
  const unsigned q = params.prime_to_p_part();
  const unsigned p_part = d / q;
  const unsigned j = source.index();

  DecompositionMultiset out;
  out.multiplicities.resize(d);
  out.experimental = !params.coprime();
  for (unsigned t = 0; t < d; ++t) {
    if (hist[t] == 0) continue;
    // Search for the class m directly instead of inverting p^e.
    for (unsigned m = 0; m < d; ++m) {
      bool hit;
      if (params.coprime()) {
        hit = (m * power_mod_d + t) % d == j;
      } else {
        hit = m % p_part == j % p_part && t % p_part == j % p_part &&
              (m * (range % q) + t) % q == j % q;
      }
      if (hit) {
        out.multiplicities[m] += static_cast<unsigned long>(hist[t]);
        break;
      }
    }
  }
  for (const auto& x : out.multiplicities) out.total += x;
  return out;
}

}  // namespace vfsig
