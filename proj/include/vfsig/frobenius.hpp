#pragma once

#include "vfsig/exactalg/bigint.hpp"
#include "vfsig/veronese.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace vfsig {

// Prime p and root exponent e for the module of p^e-th roots over S^(d).
class FrobeniusParams {
 public:
  FrobeniusParams(const VeroneseContext& ctx, unsigned prime, unsigned exponent);

  const VeroneseContext& context() const { return ctx_; }
  unsigned prime() const { return p_; }
  unsigned exponent() const { return e_; }

  // p^e
  BigInt frobenius_power() const { return ipow(p_, e_); }
  // p^{ne}: rank of the root module and number of basis vectors b.
  BigInt root_rank() const { return ipow(p_, static_cast<std::uint64_t>(ctx_.num_vars()) * e_); }

  bool coprime() const { return valuation_ == 0; }
  // s = v_p(d) and q = d / p^s.
  unsigned p_valuation() const { return valuation_; }
  unsigned prime_to_p_part() const { return q_; }

 private:
  VeroneseContext ctx_;
  unsigned p_;
  unsigned e_;
  unsigned valuation_ = 0;
  unsigned q_ = 1;
};

// Multiplicity n_m of S_[m] in the decomposition of a root module, for
// m = 0, ..., d-1.
struct DecompositionMultiset {
  std::vector<BigInt> multiplicities;
  BigInt total;
  // Produced by the literal p | d reading; not a validated decomposition.
  bool experimental = false;

  const BigInt& operator[](std::size_t m) const { return multiplicities[m]; }
  std::size_t size() const { return multiplicities.size(); }
  bool operator==(const DecompositionMultiset&) const = default;
};

// D[s] = #{ b in [0, range)^num_vars : sum(b) = s mod modulus }, by repeated
// cyclic convolution of the one-coordinate residue counts.
std::vector<BigInt> residue_sum_counts(unsigned num_vars, unsigned modulus, const BigInt& range);

// (S_[source])^{1/p^e} = sum_m S_[m]^{n_m}. Basis vector x^{b/p^e} carries the
// copy of S_[m] with m*p^e + sum(b) = source (mod d). Requires gcd(p, d) = 1.
DecompositionMultiset decompose_roots(const FrobeniusParams& params, const GradedClass& source);

// Literal reading of the congruence system for p | d with f = v_p(d):
// vectors with sum(b) != source (mod p^s) contribute nothing, the rest add one
// copy of the CRT class m = source (mod p^s), m*p^e = source - sum(b) (mod q).
// Requires e > v_p(d). Throws VerificationFailure if the rank accounting
// (total * p^s == p^{ne}) or the contributor count does not close.
DecompositionMultiset decompose_roots_general(const FrobeniusParams& params,
                                              const GradedClass& source);

// Brute-force enumeration of all b-vectors; same contract as decompose_roots
// (or decompose_roots_general when p | d). Throws GuardExceeded when
// p^{ne} > max_vectors. Work is split over `workers` threads.
DecompositionMultiset enumerate_oracle(const FrobeniusParams& params, const GradedClass& source,
                                       std::uint64_t max_vectors = 1'000'000,
                                       unsigned workers = 1);

// a_e: multiplicity of the free class S_[0] in (S^(d))^{1/p^e}.
BigInt splitting_number(const FrobeniusParams& params);

// k_e = p^{ne} mod d.
BigInt root_rank_remainder(const FrobeniusParams& params);

// The two values {(p^{ne} - k_e)/d, (p^{ne} - k_e)/d + 1}.
std::pair<BigInt, BigInt> multiplicity_pinch(const FrobeniusParams& params);

}  // namespace vfsig
