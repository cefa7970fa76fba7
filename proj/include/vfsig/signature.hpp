#pragma once

#include "vfsig/exactalg/bigint.hpp"
#include "vfsig/frobenius.hpp"
#include "vfsig/veronese.hpp"

#include <vector>

namespace vfsig {

// e copies of S_[i] surject onto f copies of S_[k].
struct ChainLink {
  unsigned i;
  BigInt e;
  BigInt f;
};

// Links for i = 0..k, indexed by i. Built from e_k = f_k = 1 by composing the
// band-matrix surjections S_[i]^{n+i} ->> S_[i+1]^{i+1}:
// e_i = (n+i) e_{i+1}, f_i = (i+1) f_{i+1}.
struct SurjectionChain {
  unsigned n;
  unsigned d;
  unsigned k;
  std::vector<ChainLink> links;

  BigRational ratio(unsigned i) const { return make_rational(links.at(i).f, links.at(i).e); }
};

SurjectionChain surjection_chain(const VeroneseContext& ctx);

// Generator-count bound on N for the canonical root module:
// sum_{i<=k} binom(n+i-1, n-1) n_i / binom(n+k-1, n-1).
BigRational upper_bound(const FrobeniusParams& params);

// Copies of S_[k] certified by the chain: sum_{i<=k} f_i * floor(n_i / e_i).
BigInt lower_bound(const FrobeniusParams& params);

// (1/n) ceil(n/d), the common limit of both bounds.
BigRational closed_form_prop(const VeroneseContext& ctx);
// (1/d) ceil(d/n), the form stated as the main theorem.
BigRational closed_form_thm(const VeroneseContext& ctx);

// a_e / p^{ne}.
BigRational f_signature_estimate(const FrobeniusParams& params);

struct SignatureReport {
  unsigned n = 0;
  unsigned d = 0;
  unsigned p = 0;
  unsigned e = 0;
  unsigned k = 0;
  BigInt root_rank;
  BigRational upper_bound_N;
  BigInt lower_bound_N;
  BigRational upper_normalized;
  BigRational lower_normalized;
  BigRational gap_normalized;
  BigRational closed_form_prop;
  BigRational closed_form_thm;
  bool closed_forms_agree = false;
};

SignatureReport signature_report(const FrobeniusParams& params);

// One report per e = 1..e_max. Throws GuardExceeded when p^{n e_max} has
// more than max_rank_digits decimal digits.
std::vector<SignatureReport> convergence_table(const VeroneseContext& ctx, unsigned p,
                                               unsigned e_max, unsigned max_rank_digits = 60);

}  // namespace vfsig
