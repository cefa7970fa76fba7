#include "vfsig/frobenius.hpp"

#include "vfsig/error.hpp"

#include <string>

namespace vfsig {

FrobeniusParams::FrobeniusParams(const VeroneseContext& ctx, unsigned prime, unsigned exponent)
    : ctx_(ctx), p_(prime), e_(exponent) {
  if (!is_prime(prime)) throw InvalidArgument("p = " + std::to_string(prime) + " is not prime");
  if (exponent < 1) throw InvalidArgument("root exponent e must be >= 1");
  q_ = ctx.degree();
  while (q_ % p_ == 0) {
    q_ /= p_;
    ++valuation_;
  }
}

std::vector<BigInt> residue_sum_counts(unsigned num_vars, unsigned modulus, const BigInt& range) {
  if (modulus == 0) throw InvalidArgument("modulus must be positive");
  const BigInt base = range / modulus;
  const std::uint64_t extra = mod_floor(range, modulus);
  std::vector<BigInt> single(modulus, base);
  for (std::uint64_t t = 0; t < extra; ++t) single[t] += 1;

  std::vector<BigInt> dist(modulus, 0);
  dist[0] = 1;
  std::vector<BigInt> next(modulus);
  for (unsigned v = 0; v < num_vars; ++v) {
    for (auto& x : next) x = 0;
    for (unsigned a = 0; a < modulus; ++a) {
      if (dist[a] == 0) continue;
      for (unsigned t = 0; t < modulus; ++t) {
        const unsigned s = (a + t) % modulus;
        next[s] += dist[a] * single[t];
      }
    }
    dist.swap(next);
  }
  return dist;
}

DecompositionMultiset decompose_roots(const FrobeniusParams& params, const GradedClass& source) {
  if (!params.coprime())
    throw InvalidArgument("gcd(p, d) != 1: use decompose_roots_general (experimental)");
  const unsigned d = params.context().degree();
  const BigInt power = params.frobenius_power();
  const auto dist = residue_sum_counts(params.context().num_vars(), d, power);
  const std::uint64_t power_mod_d = mod_floor(power, d);

  DecompositionMultiset out;
  out.multiplicities.resize(d);
  for (unsigned m = 0; m < d; ++m) {
    const std::uint64_t s = mod_floor(static_cast<std::int64_t>(source.index()) -
                                          static_cast<std::int64_t>(m * power_mod_d % d),
                                      d);
    out.multiplicities[m] = dist[s];
    out.total += dist[s];
  }
  return out;
}

DecompositionMultiset decompose_roots_general(const FrobeniusParams& params,
                                              const GradedClass& source) {
  const unsigned s = params.p_valuation();
  if (params.exponent() <= s)
    throw InvalidArgument("experimental decomposition needs e > v_p(d) = " + std::to_string(s));
  const unsigned d = params.context().degree();
  const unsigned q = params.prime_to_p_part();
  const unsigned p_part = d / q;
  const BigInt power = params.frobenius_power();
  const auto dist = residue_sum_counts(params.context().num_vars(), d, power);
  const std::uint64_t inv_power = mod_inverse(mod_floor(power, q), q);
  const unsigned j = source.index();

  DecompositionMultiset out;
  out.multiplicities.resize(d);
  out.experimental = true;
  BigInt contributing = 0;
  for (unsigned t = 0; t < d; ++t) {
    if (t % p_part != j % p_part) continue;
    contributing += dist[t];
    const std::uint64_t k_b =
        mod_floor(static_cast<std::int64_t>(j) - static_cast<std::int64_t>(t), q) * inv_power % q;
    unsigned m = j % p_part;
    while (m % q != k_b) m += p_part;
    out.multiplicities[m] += dist[t];
  }
  for (const auto& x : out.multiplicities) out.total += x;

  if (out.total != contributing || out.total * ipow(params.prime(), s) != params.root_rank())
    throw VerificationFailure(
        "paper ambiguity encountered: rank accounting of the p | d decomposition does not close "
        "(total " + to_string(out.total) + ", contributing " + to_string(contributing) + ")");
  return out;
}

BigInt splitting_number(const FrobeniusParams& params) {
  return decompose_roots(params, GradedClass(params.context(), 0))[0];
}

BigInt root_rank_remainder(const FrobeniusParams& params) {
  return BigInt(static_cast<unsigned long>(mod_floor(params.root_rank(), params.context().degree())));
}

std::pair<BigInt, BigInt> multiplicity_pinch(const FrobeniusParams& params) {
  const BigInt low = (params.root_rank() - root_rank_remainder(params)) / params.context().degree();
  return {low, low + 1};
}

}  // namespace vfsig
