#pragma once

// Test-only brute-force references. None of these call into the code paths
// they are used to check.

#include "vfsig/exactalg/polynomial.hpp"
#include "vfsig/frobenius.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace vfsig::oracle {

// Pascal's triangle in 64-bit integers.
inline std::vector<std::vector<std::uint64_t>> pascal(std::size_t rows) {
  std::vector<std::vector<std::uint64_t>> t(rows + 1);
  for (std::size_t a = 0; a <= rows; ++a) {
    t[a].assign(a + 1, 1);
    for (std::size_t b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
  }
  return t;
}

// Every exponent vector with entries <= max_exp and total degree <= max_deg.
inline std::vector<std::vector<unsigned>> exponent_box(std::size_t n, unsigned max_deg) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(n, 0);
  while (true) {
    if (std::accumulate(cur.begin(), cur.end(), 0u) <= max_deg) out.push_back(cur);
    std::size_t i = 0;
    while (i < n && ++cur[i] > max_deg) cur[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// "x_1 < ... < x_n" lex: reverse of the standard lexicographic comparison of
// exponent tuples read from x_1.
inline bool lex_less(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// Leibniz determinant over all permutations.
template <class Matrix>
Polynomial leibniz_determinant(const Matrix& m) {
  const std::size_t r = m.rows();
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial sum(m.num_vars());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Polynomial term = Polynomial::constant(m.num_vars(), inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < r; ++i) term = term * m.at(i, perm[i]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum;
}

// #{ b in [0, range)^n : sum(b) = s mod d } by full enumeration.
inline std::vector<std::uint64_t> sum_histogram(unsigned n, unsigned d, std::uint64_t range) {
  std::vector<std::uint64_t> hist(d, 0);
  std::vector<std::uint64_t> b(n, 0);
  while (true) {
    ++hist[std::accumulate(b.begin(), b.end(), std::uint64_t{0}) % d];
    std::size_t i = 0;
    while (i < n && ++b[i] == range) b[i++] = 0;
    if (i == n) break;
  }
  return hist;
}

}  // namespace vfsig::oracle
