#include "vfsig/cli/commands.hpp"

#include "vfsig/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace vfsig::cli {

namespace {

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string out = "\"";
  for (char c : v) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string summary_value(const nlohmann::ordered_json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

std::string render_table(const CommandResult& res) {
  const Table& t = res.display.header.empty() ? res.records : res.display;
  std::vector<std::size_t> width(t.header.size());
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    width[c] = t.header[c].size();
    for (const auto& row : t.rows) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream os;
  os << res.command;
  for (const auto& [key, value] : res.params.items()) os << " " << key << "=" << value.dump();
  os << "\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) os << "  ";
      os << std::string(width[c] - cells[c].size(), ' ') << cells[c];
    }
    os << "\n";
  };
  line(t.header);
  for (const auto& row : t.rows) line(row);
  for (const auto& [key, value] : res.summary.items()) os << key << ": " << summary_value(value) << "\n";
  for (const auto& note : res.notes) os << note << "\n";
  return os.str();
}

std::string render_csv(const CommandResult& res) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << csv_field(cells[c]);
    os << "\n";
  };
  line(res.records.header);
  for (const auto& row : res.records.rows) line(row);
  return os.str();
}

std::string render_json(const CommandResult& res) {
  auto records = nlohmann::ordered_json::array();
  for (const auto& row : res.records.rows) {
    nlohmann::ordered_json rec = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c) rec[res.records.header[c]] = row[c];
    records.push_back(std::move(rec));
  }
  nlohmann::ordered_json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = res.command;
  doc["params"] = res.params;
  doc["results"] = {{"records", std::move(records)}, {"summary", res.summary}};
  doc["paper_flags"] = {{"closed_forms_agree", res.closed_forms_agree
                                                   ? nlohmann::ordered_json(*res.closed_forms_agree)
                                                   : nlohmann::ordered_json(nullptr)}};
  return doc.dump(2) + "\n";
}

}  // namespace

std::string render(const CommandResult& result, Format format) {
  switch (format) {
    case Format::table:
      return render_table(result);
    case Format::csv:
      return render_csv(result);
    case Format::json:
      return render_json(result);
  }
  return {};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dual F-signature of Veronese subrings: exact decompositions, bounds, and "
               "determinantal certificates"};
  app.require_subcommand(1);

  std::string format_name = "table";
  std::string out_path;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("--out", out_path, "Write output to PATH instead of stdout");
  };

  DecomposeOptions dec;
  unsigned source = 0;
  auto* decompose = app.add_subcommand("decompose", "Decompose the root module of a graded class");
  decompose->add_option("--n", dec.n, "Number of variables")->required();
  decompose->add_option("--d", dec.d, "Veronese degree")->required();
  decompose->add_option("--p", dec.p, "Prime characteristic")->required();
  decompose->add_option("--e", dec.e, "Root exponent")->required();
  auto* source_opt =
      decompose->add_option("--source", source, "Source class j (default: canonical class)");
  decompose->add_flag("--check-oracle", dec.check_oracle, "Cross-check against enumeration");
  decompose->add_option("--max-enum", dec.max_enum, "Enumeration size limit");
  add_common(decompose);

  SignatureOptions sig;
  auto* signature = app.add_subcommand("signature", "Dual F-signature bounds per e");
  signature->add_option("--n", sig.n, "Number of variables")->required();
  signature->add_option("--d", sig.d, "Veronese degree")->required();
  signature->add_option("--p", sig.p, "Prime characteristic")->required();
  signature->add_option("--e-max,--e", sig.e_max, "Largest root exponent")->required();
  signature->add_option("--max-rank-digits", sig.max_rank_digits, "Limit on digits of p^{n e}");
  add_common(signature);

  VerifyMinorsOptions vm;
  std::string cert_path;
  auto* verify = app.add_subcommand("verify-minors", "Verify I_r(M(n,r)) = (x_1..x_n)^r");
  verify->add_option("--n", vm.n, "Number of variables")->required();
  verify->add_option("--r", vm.r, "Rows of the band matrix")->required();
  verify->add_option("--max-minors", vm.max_minors, "Limit on the number of minors");
  verify->add_option("--certificates", cert_path, "Write minor certificates as JSON to PATH");
  add_common(verify);

  ChainOptions ch;
  auto* chain = app.add_subcommand("chain", "Surjection chain (e_i, f_i)");
  chain->add_option("--n", ch.n, "Number of variables")->required();
  chain->add_option("--d", ch.d, "Veronese degree")->required();
  add_common(chain);

  FsigOptions fs;
  auto* fsig = app.add_subcommand("fsig", "F-signature estimates a_e / p^{ne}");
  fsig->add_option("--n", fs.n, "Number of variables")->required();
  fsig->add_option("--d", fs.d, "Veronese degree")->required();
  fsig->add_option("--p", fs.p, "Prime characteristic")->required();
  fsig->add_option("--e-max,--e", fs.e_max, "Largest root exponent")->required();
  fsig->add_option("--max-rank-digits", fs.max_rank_digits, "Limit on digits of p^{n e}");
  add_common(fsig);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    CommandResult res;
    if (*decompose) {
      if (*source_opt) dec.source = source;
      res = run_decompose(dec);
    } else if (*signature) {
      res = run_signature(sig);
    } else if (*verify) {
      vm.certificates = !cert_path.empty();
      res = run_verify_minors(vm);
    } else if (*chain) {
      res = run_chain(ch);
    } else {
      res = run_fsig(fs);
    }

    const std::string text = render(res, parse_format(format_name));
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path);
      if (!file) throw InvalidArgument("cannot open " + out_path);
      file << text;
    }
    if (res.certificates) {
      std::ofstream file(cert_path);
      if (!file) throw InvalidArgument("cannot open " + cert_path);
      file << res.certificates->dump(2) << "\n";
    }
    return res.exit_code;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const VerificationFailure& e) {
    err << "verification FAILED: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace vfsig::cli
