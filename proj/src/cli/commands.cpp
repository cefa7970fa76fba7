#include "vfsig/cli/commands.hpp"

#include "vfsig/determinantal.hpp"
#include "vfsig/error.hpp"
#include "vfsig/frobenius.hpp"
#include "vfsig/signature.hpp"
#include "vfsig/veronese.hpp"

#include <numeric>

namespace vfsig::cli {

namespace {

constexpr int kDecimalDigits = 8;

std::string str(const BigInt& v) { return to_string(v); }
std::string str(const BigRational& v) { return to_string(v); }
std::string dec(const BigRational& v) { return to_decimal(v, kDecimalDigits); }
std::string str(bool v) { return v ? "true" : "false"; }

nlohmann::ordered_json to_json(const std::vector<unsigned>& v) {
  auto arr = nlohmann::ordered_json::array();
  for (auto x : v) arr.push_back(x);
  return arr;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

CommandResult run_decompose(const DecomposeOptions& opts) {
  const VeroneseContext ctx(opts.n, opts.d);
  const FrobeniusParams params(ctx, opts.p, opts.e);
  const GradedClass source =
      opts.source ? GradedClass(ctx, *opts.source) : canonical_class(ctx);

  CommandResult res;
  res.command = "decompose";
  res.params = {{"n", opts.n}, {"d", opts.d}, {"p", opts.p}, {"e", opts.e},
                {"source", source.index()}};
  res.closed_forms_agree = closed_form_prop(ctx) == closed_form_thm(ctx);

  const DecompositionMultiset dec =
      params.coprime() ? decompose_roots(params, source) : decompose_roots_general(params, source);
  const auto [low, high] = multiplicity_pinch(params);

  res.records.header = {"class", "multiplicity", "pinch_low", "pinch_high", "in_pinch"};
  bool all_in_pinch = true;
  for (unsigned m = 0; m < dec.size(); ++m) {
    const bool in = dec[m] == low || dec[m] == high;
    all_in_pinch = all_in_pinch && in;
    res.records.rows.push_back({std::to_string(m), str(dec[m]), str(low), str(high), str(in)});
  }

  res.summary["canonical_class"] = canonical_class(ctx).index();
  res.summary["root_rank"] = str(params.root_rank());
  res.summary["k_e"] = str(root_rank_remainder(params));
  res.summary["total"] = str(dec.total);
  res.summary["experimental"] = dec.experimental;
  res.summary["all_in_pinch"] = all_in_pinch;
  if (dec.experimental) {
    res.notes.push_back(
        "EXPERIMENTAL: gcd(p, d) != 1; literal reading of the congruence system, not a validated "
        "decomposition");
  }
  if (opts.check_oracle) {
    const bool agrees = enumerate_oracle(params, source, opts.max_enum) == dec;
    res.summary["oracle_agrees"] = agrees;
    if (!agrees) {
      res.notes.push_back("FAILED: enumeration oracle disagrees");
      res.exit_code = 1;
    }
  }
  return res;
}

CommandResult run_signature(const SignatureOptions& opts) {
  const VeroneseContext ctx(opts.n, opts.d);
  const auto rows = convergence_table(ctx, opts.p, opts.e_max, opts.max_rank_digits);

  CommandResult res;
  res.command = "signature";
  res.params = {{"n", opts.n}, {"d", opts.d}, {"p", opts.p}, {"e_max", opts.e_max}};
  res.records.header = {"e",           "root_rank",        "upper_bound_N",   "lower_bound_N",
                        "upper_normalized", "lower_normalized", "gap_normalized"};
  res.display.header = {"e", "root_rank", "upper_bound_N", "lower_bound_N", "upper", "lower",
                        "upper~", "lower~"};
  for (const auto& r : rows) {
    res.records.rows.push_back({std::to_string(r.e), str(r.root_rank), str(r.upper_bound_N),
                                str(r.lower_bound_N), str(r.upper_normalized),
                                str(r.lower_normalized), str(r.gap_normalized)});
    res.display.rows.push_back({std::to_string(r.e), str(r.root_rank), str(r.upper_bound_N),
                                str(r.lower_bound_N), str(r.upper_normalized),
                                str(r.lower_normalized), dec(r.upper_normalized),
                                dec(r.lower_normalized)});
  }
  const auto& last = rows.back();
  res.summary["k"] = last.k;
  res.summary["closed_form_prop"] = str(last.closed_form_prop);
  res.summary["closed_form_thm"] = str(last.closed_form_thm);
  res.summary["closed_forms_agree"] = last.closed_forms_agree;
  res.summary["final_upper_minus_prop"] = str(BigRational(last.upper_normalized - last.closed_form_prop));
  res.summary["final_lower_minus_prop"] = str(BigRational(last.lower_normalized - last.closed_form_prop));
  res.closed_forms_agree = last.closed_forms_agree;
  if (!last.closed_forms_agree) {
    res.notes.push_back("closed forms disagree: (1/n)ceil(n/d) = " + str(last.closed_form_prop) +
                        ", (1/d)ceil(d/n) = " + str(last.closed_form_thm) +
                        "; the bounds converge to the first");
  }
  return res;
}

CommandResult run_verify_minors(const VerifyMinorsOptions& opts) {
  CommandResult res;
  res.command = "verify-minors";
  res.params = {{"n", opts.n}, {"r", opts.r}};

  const MinorIdealVerdict verdict = verify_minor_ideal(opts.n, opts.r, opts.max_minors);
  res.records.header = {"n", "r", "minor_count", "rank_found", "expected_rank", "holds"};
  res.records.rows.push_back({std::to_string(opts.n), std::to_string(opts.r),
                              std::to_string(verdict.minor_count),
                              std::to_string(verdict.rank_found),
                              std::to_string(verdict.expected_rank), str(verdict.holds)});
  res.summary["holds"] = verdict.holds;
  res.summary["all_homogeneous"] = verdict.all_homogeneous;
  if (!verdict.holds) {
    res.notes.push_back("FAILED: maximal minors do not span all degree-r monomials");
    res.exit_code = 1;
  }

  if (opts.certificates) {
    if (verdict.expected_rank > opts.max_minors)
      throw GuardExceeded("certificate count exceeds --max-minors");
    CertificateBuilder builder(opts.n, opts.r);
    const auto certs = builder.certify_all();
    auto list = nlohmann::ordered_json::array();
    bool all_verified = true;
    for (const auto& cert : certs) {
      const bool verified = cert.verified && expand_certificate(cert) == Polynomial::monomial(cert.target);
      all_verified = all_verified && verified;
      auto terms = nlohmann::ordered_json::array();
      for (const auto& t : cert.terms) {
        const auto c = t.coefficient.as_constant();
        std::vector<unsigned> cols(t.selection.columns().begin(), t.selection.columns().end());
        terms.push_back({{"coefficient", c ? str(*c) : t.coefficient.to_string()},
                         {"alpha", to_json(t.selection.alpha())},
                         {"columns", to_json(cols)}});
      }
      std::vector<unsigned> exps(cert.target.exponents().begin(), cert.target.exponents().end());
      list.push_back({{"target", cert.target.to_string()},
                      {"exponents", to_json(exps)},
                      {"leading_sign", cert.leading_sign},
                      {"verified", verified},
                      {"terms", std::move(terms)}});
    }
    res.certificates = nlohmann::ordered_json{{"schema_version", kSchemaVersion},
                                              {"n", opts.n},
                                              {"r", opts.r},
                                              {"certificates", std::move(list)}};
    res.summary["certificates"] = certs.size();
    res.summary["certificates_verified"] = all_verified;
    if (!all_verified) {
      res.notes.push_back("FAILED: a certificate did not expand to its target");
      res.exit_code = 1;
    }
  }
  return res;
}

CommandResult run_chain(const ChainOptions& opts) {
  const VeroneseContext ctx(opts.n, opts.d);
  const auto chain = surjection_chain(ctx);
  const BigInt top = min_generators(ctx, GradedClass(ctx, chain.k));

  CommandResult res;
  res.command = "chain";
  res.params = {{"n", opts.n}, {"d", opts.d}};
  res.closed_forms_agree = closed_form_prop(ctx) == closed_form_thm(ctx);
  res.records.header = {"i", "e_i", "f_i", "ratio", "generator_ratio", "identity_holds"};
  bool all_hold = true;
  for (const auto& link : chain.links) {
    const BigRational expected = make_rational(min_generators(ctx, GradedClass(ctx, link.i)), top);
    const bool holds = chain.ratio(link.i) == expected;
    all_hold = all_hold && holds;
    res.records.rows.push_back({std::to_string(link.i), str(link.e), str(link.f),
                                str(chain.ratio(link.i)), str(expected), str(holds)});
  }
  res.summary["k"] = chain.k;
  res.summary["identities_hold"] = all_hold;
  if (!all_hold) {
    res.notes.push_back("FAILED: chain ratio differs from the generator-count ratio");
    res.exit_code = 1;
  }
  return res;
}

CommandResult run_fsig(const FsigOptions& opts) {
  const VeroneseContext ctx(opts.n, opts.d);
  if (opts.e_max < 1) throw InvalidArgument("e must be >= 1");
  const FrobeniusParams last(ctx, opts.p, opts.e_max);
  if (!last.coprime()) throw InvalidArgument("F-signature estimate needs gcd(p, d) = 1");
  if (last.root_rank() >= ipow(10, opts.max_rank_digits))
    throw GuardExceeded("p^{n e} exceeds 10^" + std::to_string(opts.max_rank_digits));

  CommandResult res;
  res.command = "fsig";
  res.params = {{"n", opts.n}, {"d", opts.d}, {"p", opts.p}, {"e_max", opts.e_max}};
  res.closed_forms_agree = closed_form_prop(ctx) == closed_form_thm(ctx);
  res.records.header = {"e", "root_rank", "splitting_number", "estimate", "limit", "within_d_over_rank"};
  res.display.header = {"e", "root_rank", "splitting_number", "estimate", "estimate~", "limit"};
  const BigRational limit = make_rational(1, opts.d);
  for (unsigned e = 1; e <= opts.e_max; ++e) {
    const FrobeniusParams params(ctx, opts.p, e);
    const BigInt a = splitting_number(params);
    const BigRational est = make_rational(a, params.root_rank());
    const bool within = abs(BigRational(est - limit)) <= make_rational(opts.d, params.root_rank());
    res.records.rows.push_back({std::to_string(e), str(params.root_rank()), str(a), str(est),
                                str(limit), str(within)});
    res.display.rows.push_back({std::to_string(e), str(params.root_rank()), str(a), str(est),
                                dec(est), str(limit)});
  }
  return res;
}

}  // namespace vfsig::cli
