#pragma once

#include "vfsig/exactalg/bigint.hpp"

#include <cstdint>

namespace vfsig {

// S = K[x_1, ..., x_n] and its d-th Veronese subring S^(d).
class VeroneseContext {
 public:
  VeroneseContext(unsigned num_vars, unsigned degree);

  unsigned num_vars() const { return n_; }
  unsigned degree() const { return d_; }

  bool operator==(const VeroneseContext&) const = default;

 private:
  unsigned n_;
  unsigned d_;
};

// S_[j]: elements of S whose degree is congruent to j modulo d.
class GradedClass {
 public:
  GradedClass(const VeroneseContext& ctx, unsigned index);

  unsigned index() const { return j_; }
  bool operator==(const GradedClass&) const = default;

 private:
  unsigned j_;
};

// Class k of the canonical module: degrees -n + i*d, i.e. k = (-n) mod d.
GradedClass canonical_class(const VeroneseContext& ctx);

// Number of degree-t monomials in n variables.
BigInt monomial_count(unsigned num_vars, std::uint64_t degree);

// binom(n + j - 1, n - 1): generators of S_[j] over S^(d) sit in degree j.
BigInt min_generators(const VeroneseContext& ctx, const GradedClass& cls);

// dim_K S_{j + i*d}.
BigInt hilbert_function(const VeroneseContext& ctx, const GradedClass& cls, std::uint64_t i);

}  // namespace vfsig
