// octowitt: tables, decompositions, operator application and the
// verification suite from the command line.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "octowitt/diffops.hpp"
#include "octowitt/serialize.hpp"
#include "octowitt/tables.hpp"
#include "octowitt/verify.hpp"
#include "octowitt/witt.hpp"

namespace {

using octowitt::Json;

constexpr int kUsageError = 2;
constexpr int kVerifyFailed = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

std::uint64_t parse_seed(const std::string& s, const char* origin) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw UsageError(std::string(origin) + ": seed must be a non-negative integer, got '" + s + "'");
  }
  return v;
}

// --seed wins, then OCTOWITT_SEED, then the default.
std::uint64_t resolve_seed(const std::optional<std::string>& flag) {
  if (flag) return parse_seed(*flag, "--seed");
  if (const char* env = std::getenv("OCTOWITT_SEED"); env != nullptr && *env != '\0') {
    return parse_seed(env, "OCTOWITT_SEED");
  }
  return octowitt::VerifyConfig{}.seed;
}

Json frame_json(const octowitt::TwistorFrame& tw, const octowitt::HermitianFrame& hz) {
  Json twistor = Json::array();
  for (const auto& v : tw.vectors) {
    Json row = Json::array();
    for (const auto& r : v) row.push_back(octowitt::to_json(r));
    twistor.push_back(row);
  }
  Json hermitian = Json::array();
  for (const auto& z : hz.z) hermitian.push_back(octowitt::to_json(z));
  return Json{{"block", tw.block}, {"twistor", twistor}, {"hermitian", hermitian}};
}

int cmd_decompose(const std::string& input, std::optional<int> n_flag, bool json) {
  const auto coords = [&] {
    try {
      return octowitt::coordinates_from_json(parse_json(read_input(input)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const int n = n_flag.value_or(static_cast<int>(coords.size() / 8));
  if (n < 1 || coords.size() != static_cast<std::size_t>(8 * n)) {
    throw UsageError("decompose: expected 8n coordinates, got " + std::to_string(coords.size()) +
                     (n_flag ? " with --n " + std::to_string(*n_flag) : ""));
  }
  const auto dec = octowitt::witt_decompose(coords, n);
  if (json) {
    Json blocks = Json::array();
    for (int k = 0; k < n; ++k) {
      blocks.push_back(frame_json(dec.twistors[static_cast<std::size_t>(k)], dec.hermitians[static_cast<std::size_t>(k)]));
    }
    std::cout << Json{{"n", n}, {"blocks", blocks}, {"reconstruction_exact", dec.exact}}.dump(2) << '\n';
  } else {
    for (int k = 0; k < n; ++k) {
      const auto& tw = dec.twistors[static_cast<std::size_t>(k)];
      const auto& hz = dec.hermitians[static_cast<std::size_t>(k)];
      std::cout << "block " << k << '\n';
      for (int i = 0; i < 8; ++i) std::cout << "  X" << i << " = " << tw.multivector(i) << '\n';
      for (int i = 0; i < 8; ++i) std::cout << "  Z" << i << " = " << hz.z[static_cast<std::size_t>(i)] << '\n';
    }
    std::cout << "reconstruction_exact " << (dec.exact ? "true" : "false") << '\n';
  }
  return dec.exact ? 0 : kVerifyFailed;
}

int parse_index(const std::string& s, const std::string& spec) {
  int v = -1;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) throw UsageError("bad operator spec '" + spec + "'");
  return v;
}

// dirac | twistor:i[:block] | hermitian:i[:block]
octowitt::FirstOrderOperator parse_operator(const std::string& spec, int nvars) {
  if (nvars <= 0 || nvars % 8 != 0) {
    throw UsageError("apply: polynomial must have 8n variables, got " + std::to_string(nvars));
  }
  const int n = nvars / 8;
  if (spec == "dirac") return octowitt::dirac(nvars);
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.size() < 2 || parts.size() > 3 || (parts[0] != "twistor" && parts[0] != "hermitian")) {
    throw UsageError("unknown operator '" + spec + "' (expected dirac, twistor:i[:block] or hermitian:i[:block])");
  }
  const int i = parse_index(parts[1], spec);
  const int block = parts.size() == 3 ? parse_index(parts[2], spec) : 0;
  if (i < 0 || i > 7) throw UsageError("operator index must be 0..7 in '" + spec + "'");
  if (block < 0 || block >= n) throw UsageError("block out of range in '" + spec + "'");
  return parts[0] == "twistor" ? octowitt::twistor_derivative(i, block, n) : octowitt::hermitian_derivative(i, block, n);
}

int cmd_apply(const std::string& op, const std::string& input, bool json) {
  const auto p = [&] {
    try {
      return octowitt::polynomial_from_json(parse_json(read_input(input)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const auto d = parse_operator(op, p.nvars());
  if (d.dim() != p.dim()) {
    throw UsageError("apply: coefficients live in dim " + std::to_string(p.dim()) + ", operator in dim " +
                     std::to_string(d.dim()));
  }
  const auto out = octowitt::op_apply(d, p);
  if (json) {
    std::cout << octowitt::to_json(out).dump(2) << '\n';
  } else {
    std::cout << out << '\n';
  }
  return 0;
}

void print_text_report(const octowitt::VerificationReport& report, bool timings) {
  std::cout << "config n_max=" << report.config.n_max << " samples=" << report.config.samples
            << " seed=" << report.config.seed << '\n';
  for (const auto& s : report.suites) {
    std::cout << (s.failures.empty() ? "PASS " : "FAIL ") << s.name << "  checks=" << s.checks_run
              << " failures=" << s.failures.size();
    if (timings) std::cout << " ms=" << s.wall_ms;
    std::cout << '\n';
    for (const auto& f : s.failures) {
      std::cout << "  - " << f.id;
      if (!f.inputs.empty()) std::cout << "  inputs: " << f.inputs;
      std::cout << "\n      expected: " << f.expected << "\n      actual:   " << f.actual << '\n';
    }
  }
  std::cout << "total checks=" << report.total_checks() << " failures=" << report.total_failures() << '\n';
}

int cmd_verify(int n_max, int samples, const std::optional<std::string>& seed_flag, const std::string& report_path,
               bool timings, bool json) {
  if (n_max < 1) throw UsageError("verify: --n-max must be >= 1");
  if (samples < 0) throw UsageError("verify: --samples must be >= 0");
  const octowitt::VerifyConfig config{n_max, samples, resolve_seed(seed_flag)};
  const auto report = octowitt::run_verification(config);
  const std::string dumped = octowitt::report_to_json(report, timings).dump(2) + "\n";
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + report_path);
    out << dumped;
  }
  if (json) {
    std::cout << dumped;
  } else {
    print_text_report(report, timings);
  }
  return report.passed() ? 0 : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact octonionic Witt basis toolkit"};
  app.require_subcommand(1);
  const std::map<std::string, bool> formats{{"json", true}, {"text", false}};

  auto* tables = app.add_subcommand("tables", "Print an algebraic table");
  std::string kind;
  int tables_n = 1;
  bool tables_json = false;
  tables->add_option("kind", kind, "Table kind")->required()->check(CLI::IsMember(octowitt::table_kinds()));
  tables->add_option("--n", tables_n, "Number of 8-blocks")->check(CLI::PositiveNumber);
  tables->add_option("--format", tables_json, "Output format")->transform(CLI::CheckedTransformer(formats))->option_text("json|text");

  auto* decompose = app.add_subcommand("decompose", "Witt decomposition of a vector in R^{8n}");
  std::string decompose_input;
  std::optional<int> decompose_n;
  bool decompose_json = true;
  decompose->add_option("input", decompose_input, "JSON array of 8n rationals (file, or - for stdin)");
  decompose->add_option("--n", decompose_n, "Number of 8-blocks (default: length / 8)");
  decompose->add_option("--format", decompose_json, "Output format")->transform(CLI::CheckedTransformer(formats))->option_text("json|text");

  auto* verify = app.add_subcommand("verify", "Run every identity suite");
  int n_max = 2;
  int samples = 100;
  std::optional<std::string> seed;
  std::string report_path;
  bool timings = false;
  bool verify_json = false;
  verify->add_option("--n-max", n_max, "Largest block count");
  verify->add_option("--samples", samples, "Random samples per property");
  verify->add_option("--seed", seed, "PRNG seed (fallback: OCTOWITT_SEED, then 42)");
  verify->add_option("--report", report_path, "Write the JSON report here");
  verify->add_flag("--timings", timings, "Include per-suite wall times");
  verify->add_option("--format", verify_json, "Output format")->transform(CLI::CheckedTransformer(formats))->option_text("json|text");

  auto* apply = app.add_subcommand("apply", "Apply a first-order operator to a polynomial");
  std::string op;
  std::string apply_input;
  bool apply_json = true;
  apply->add_option("--op", op, "dirac | twistor:i[:block] | hermitian:i[:block]")->required();
  apply->add_option("input", apply_input, "Polynomial JSON (file, or - for stdin)");
  apply->add_option("--format", apply_json, "Output format")->transform(CLI::CheckedTransformer(formats))->option_text("json|text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (tables->parsed()) {
      std::cout << octowitt::render_table(kind, tables_n,
                                          tables_json ? octowitt::TableFormat::kJson : octowitt::TableFormat::kText);
      return 0;
    }
    if (decompose->parsed()) return cmd_decompose(decompose_input, decompose_n, decompose_json);
    if (verify->parsed()) return cmd_verify(n_max, samples, seed, report_path, timings, verify_json);
    if (apply->parsed()) return cmd_apply(op, apply_input, apply_json);
  } catch (const std::exception& e) {
    std::cerr << "octowitt: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
