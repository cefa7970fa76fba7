#include "vfsig/signature.hpp"

#include "vfsig/error.hpp"

#include <string>

namespace vfsig {

namespace {

BigInt ceil_div(unsigned a, unsigned b) { return (a + b - 1) / b; }

BigRational upper_from(const VeroneseContext& ctx, unsigned k, const DecompositionMultiset& dec) {
  BigInt weighted = 0;
  for (unsigned i = 0; i <= k; ++i) weighted += min_generators(ctx, GradedClass(ctx, i)) * dec[i];
  return make_rational(weighted, min_generators(ctx, GradedClass(ctx, k)));
}

BigInt lower_from(const SurjectionChain& chain, const DecompositionMultiset& dec) {
  BigInt copies = 0;
  for (const auto& link : chain.links) copies += link.f * (dec[link.i] / link.e);
  return copies;
}

DecompositionMultiset canonical_roots(const FrobeniusParams& params) {
  return decompose_roots(params, canonical_class(params.context()));
}

}  // namespace

SurjectionChain surjection_chain(const VeroneseContext& ctx) {
  const unsigned k = canonical_class(ctx).index();
  const unsigned n = ctx.num_vars();
  SurjectionChain chain{n, ctx.degree(), k, std::vector<ChainLink>(k + 1)};
  chain.links[k] = {k, 1, 1};
  for (unsigned i = k; i-- > 0;) {
    chain.links[i] = {i, BigInt(n + i) * chain.links[i + 1].e,
                      BigInt(i + 1) * chain.links[i + 1].f};
  }
  return chain;
}

BigRational upper_bound(const FrobeniusParams& params) {
  const auto& ctx = params.context();
  return upper_from(ctx, canonical_class(ctx).index(), canonical_roots(params));
}

BigInt lower_bound(const FrobeniusParams& params) {
  return lower_from(surjection_chain(params.context()), canonical_roots(params));
}

BigRational closed_form_prop(const VeroneseContext& ctx) {
  return make_rational(ceil_div(ctx.num_vars(), ctx.degree()), ctx.num_vars());
}

BigRational closed_form_thm(const VeroneseContext& ctx) {
  return make_rational(ceil_div(ctx.degree(), ctx.num_vars()), ctx.degree());
}

BigRational f_signature_estimate(const FrobeniusParams& params) {
  return make_rational(splitting_number(params), params.root_rank());
}

SignatureReport signature_report(const FrobeniusParams& params) {
  const auto& ctx = params.context();
  const auto chain = surjection_chain(ctx);
  const auto dec = canonical_roots(params);

  SignatureReport rep;
  rep.n = ctx.num_vars();
  rep.d = ctx.degree();
  rep.p = params.prime();
  rep.e = params.exponent();
  rep.k = chain.k;
  rep.root_rank = params.root_rank();
  rep.upper_bound_N = upper_from(ctx, chain.k, dec);
  rep.lower_bound_N = lower_from(chain, dec);
  rep.upper_normalized = rep.upper_bound_N / rep.root_rank;
  rep.lower_normalized = make_rational(rep.lower_bound_N, rep.root_rank);
  rep.gap_normalized = rep.upper_normalized - rep.lower_normalized;
  rep.closed_form_prop = closed_form_prop(ctx);
  rep.closed_form_thm = closed_form_thm(ctx);
  rep.closed_forms_agree = rep.closed_form_prop == rep.closed_form_thm;
  return rep;
}

std::vector<SignatureReport> convergence_table(const VeroneseContext& ctx, unsigned p,
                                               unsigned e_max, unsigned max_rank_digits) {
  if (e_max < 1) throw InvalidArgument("e_max must be >= 1");
  const FrobeniusParams last(ctx, p, e_max);
  if (!last.coprime())
    throw InvalidArgument("signature bounds need gcd(p, d) = 1");
  if (last.root_rank() >= ipow(10, max_rank_digits))
    throw GuardExceeded("p^{n e_max} = " + to_string(last.root_rank()) + " exceeds 10^" +
                        std::to_string(max_rank_digits));
  std::vector<SignatureReport> rows;
  rows.reserve(e_max);
  for (unsigned e = 1; e <= e_max; ++e) rows.push_back(signature_report(FrobeniusParams(ctx, p, e)));
  return rows;
}

}  // namespace vfsig
