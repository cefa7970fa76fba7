#pragma once

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vfsig::cli {

inline constexpr int kSchemaVersion = 1;

enum class Format { table, csv, json };

Format parse_format(std::string_view name);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

// Everything a subcommand produced, independent of the output format.
// `records` holds exact values only (integers verbatim, rationals "num/den");
// `display`, when non-empty, is the human table with advisory decimals.
struct CommandResult {
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Table records;
  Table display;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
  std::optional<bool> closed_forms_agree;
  std::vector<std::string> notes;
  // Written to --certificates when requested.
  std::optional<nlohmann::ordered_json> certificates;
  int exit_code = 0;
};

struct DecomposeOptions {
  unsigned n = 0;
  unsigned d = 0;
  unsigned p = 0;
  unsigned e = 0;
  std::optional<unsigned> source;
  bool check_oracle = false;
  std::uint64_t max_enum = 1'000'000;
};

struct SignatureOptions {
  unsigned n = 0;
  unsigned d = 0;
  unsigned p = 0;
  unsigned e_max = 0;
  unsigned max_rank_digits = 60;
};

struct VerifyMinorsOptions {
  unsigned n = 0;
  unsigned r = 0;
  std::uint64_t max_minors = 100'000;
  bool certificates = false;
};

struct ChainOptions {
  unsigned n = 0;
  unsigned d = 0;
};

struct FsigOptions {
  unsigned n = 0;
  unsigned d = 0;
  unsigned p = 0;
  unsigned e_max = 0;
  unsigned max_rank_digits = 60;
};

CommandResult run_decompose(const DecomposeOptions& opts);
CommandResult run_signature(const SignatureOptions& opts);
CommandResult run_verify_minors(const VerifyMinorsOptions& opts);
CommandResult run_chain(const ChainOptions& opts);
CommandResult run_fsig(const FsigOptions& opts);

std::string render(const CommandResult& result, Format format);

// Full command line entry point. Exit codes: 0 success, 1 verification
// failed, 2 bad input, 3 guard exceeded.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace vfsig::cli
