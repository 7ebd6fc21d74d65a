// indet: command-line front end.
//
// Exit codes: 0 success, 1 domain error (infeasible array, failed check),
// 2 usage or parse error. Any positional text argument may be "-" to read it
// from stdin.

#include <cmath>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "indet/bench.hpp"
#include "indet/oracle.hpp"
#include "indet/prefix_graph.hpp"
#include "indet/reveng.hpp"
#include "indet/strings.hpp"
#include "indet/text.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_arg(const std::string& arg) {
  if (arg != "-") return arg;
  return std::string(std::istreambuf_iterator<char>(std::cin), {});
}

indet::FeasibleArray read_array(const std::string& arg) {
  const auto raw = indet::parse_integers(read_arg(arg));
  return indet::validate_feasible(raw);
}

// "a:b:step" or a comma-separated list.
std::vector<std::size_t> parse_lengths(const std::string& text) {
  std::vector<std::size_t> out;
  auto to_size = [&text](const std::string& s) -> std::size_t {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(s, &used);
      if (used != s.size() || v < 1) throw std::invalid_argument(s);
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw UsageError("bad --lengths value '" + text + "'");
    }
  };
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 3) throw UsageError("--lengths expects a:b:step");
    const auto first = to_size(parts[0]);
    const auto last = to_size(parts[1]);
    const auto step = to_size(parts[2]);
    for (std::size_t n = first; n <= last; n += step) out.push_back(n);
  } else {
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) out.push_back(to_size(part));
  }
  if (out.empty()) throw UsageError("--lengths selects no lengths");
  return out;
}

const char* condition_name(indet::PrefixTableCheck::Condition c) {
  using Condition = indet::PrefixTableCheck::Condition;
  switch (c) {
    case Condition::kPrefixMatch: return "(a)";
    case Condition::kMismatchNext: return "(b)";
    case Condition::kNone: break;
  }
  return "";
}

int cmd_pt(const std::string& text) {
  const auto x = indet::parse_string(read_arg(text));
  std::cout << indet::format_array(indet::compute_prefix_table(x)) << '\n';
  return kOk;
}

int cmd_infer(const std::string& array, bool with_trace) {
  const auto y = read_array(array);
  const auto g = indet::build_prefix_graph(y);
  indet::InferenceTrace events;
  const auto x = indet::infer(g, with_trace ? &events : nullptr);
  if (with_trace) {
    std::cout << indet::format_trace(events, x);
  } else {
    std::cout << indet::format_string(x) << '\n';
  }
  return kOk;
}

int cmd_check(const std::string& array) {
  const auto raw = indet::parse_integers(read_arg(array));
  try {
    indet::validate_feasible(raw);
  } catch (const indet::InfeasibleArray& e) {
    std::cout << "infeasible at i=" << e.index() << ": " << e.what() << '\n';
    return kDomainError;
  }
  std::cout << "feasible\n";
  return kOk;
}

int cmd_verify(const std::string& text, const std::string& array, bool oracle) {
  const auto x = indet::parse_string(read_arg(text));
  const auto y = read_array(array);
  const auto check = indet::verify_prefix_table(x, y);
  if (!check.ok) {
    std::cout << "fail at i=" << check.position << " condition "
              << condition_name(check.condition) << '\n';
    return kDomainError;
  }
  std::cout << "pass\n";
  if (!oracle) return kOk;

  const auto result = indet::oracle::brute_force_lex_least(y);
  if (std::holds_alternative<indet::oracle::BudgetExceeded>(result)) {
    std::cout << "oracle: budget exceeded, minimality not checked\n";
    return kDomainError;
  }
  const auto& least = std::get<indet::oracle::LexLeast>(result);
  if (least.string == x) {
    std::cout << "oracle: lex-least confirmed (alphabet " << least.alphabet_size
              << ")\n";
    return kOk;
  }
  std::cout << "oracle: not lex-least; least is " << indet::format_string(least.string)
            << " (alphabet " << least.alphabet_size << ")\n";
  return kDomainError;
}

int cmd_graph(const std::string& array, const std::string& format,
              const std::string& sign) {
  indet::GraphFormat fmt;
  indet::EdgeSign sgn;
  try {
    fmt = indet::parse_graph_format(format);
    sgn = indet::parse_edge_sign(sign);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto y = read_array(array);
  std::cout << indet::export_graph(indet::build_prefix_graph(y), fmt, sgn);
  return kOk;
}

int cmd_regular(const std::string& array, bool witness) {
  const auto y = read_array(array);
  const auto g = indet::build_prefix_graph(y);
  const auto r = indet::is_regular(g);
  if (!r.regular) {
    std::cout << "indeterminate-only (components: " << r.component_count << ")\n";
    return kOk;
  }
  std::cout << "regular\n";
  if (witness) {
    std::cout << indet::format_string(indet::regular_string_from_components(g, r))
              << '\n';
  }
  return kOk;
}

int cmd_gen(std::size_t length, std::size_t count, std::uint64_t seed) {
  if (length == 0) throw UsageError("--length must be >= 1");
  auto rng = indet::bench::rng_for_length(seed, length);
  for (std::size_t k = 0; k < count; ++k) {
    std::cout << indet::format_array(indet::bench::gen_random_feasible(length, rng))
              << '\n';
  }
  return kOk;
}

int cmd_bench(const std::string& lengths, std::size_t trials, std::uint64_t seed,
              const std::string& out_path) {
  indet::bench::BenchConfig cfg{parse_lengths(lengths), trials, seed};
  try {
    indet::bench::validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto rows = indet::bench::run_bench(cfg);
  if (out_path.empty() || out_path == "-") {
    indet::bench::write_csv(std::cout, rows);
  } else {
    indet::bench::write_csv(out_path, rows);
  }
  if (rows.size() >= 3) {
    std::cerr << "log-log slope: " << indet::bench::growth_trend(rows) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prefix tables and indeterminate-string inference"};
  app.require_subcommand(1, 1);

  std::string text, array, format = "dot", sign = "both", lengths = "10:100:10",
                           out_path;
  bool trace = false, oracle = false, witness = false;
  std::size_t length = 10, count = 1, trials = 100;
  std::uint64_t seed = 1;

  auto* pt = app.add_subcommand("pt", "Prefix table of a string");
  pt->add_option("string", text, "String, e.g. \"a {a,b} c\"")->required();

  auto* infer = app.add_subcommand("infer", "Least string with the given prefix table");
  infer->add_option("array", array, "Feasible array, e.g. \"5 0 2 1 0\"")->required();
  infer->add_flag("--trace", trace, "Print each inference step");

  auto* check = app.add_subcommand("check", "Validate a feasible array");
  check->add_option("array", array)->required();

  auto* verify = app.add_subcommand("verify", "Check that an array is a string's prefix table");
  verify->add_option("string", text)->required();
  verify->add_option("array", array)->required();
  verify->add_flag("--oracle", oracle, "Also confirm lexicographic minimality by brute force");

  auto* graph = app.add_subcommand("graph", "Export the prefix graph");
  graph->add_option("array", array)->required();
  graph->add_option("--format", format, "dot or json");
  graph->add_option("--sign", sign, "positive, negative or both");

  auto* regular = app.add_subcommand("regular", "Test whether an array is regular");
  regular->add_option("array", array)->required();
  regular->add_flag("--witness", witness, "Print a regular string when one exists");

  auto* gen = app.add_subcommand("gen", "Random feasible arrays");
  gen->add_option("--length", length)->required();
  gen->add_option("--count", count);
  gen->add_option("--seed", seed);

  auto* bench = app.add_subcommand("bench", "Time inference on random arrays (CSV)");
  bench->add_option("--lengths", lengths, "a:b:step or comma list");
  bench->add_option("--trials", trials);
  bench->add_option("--seed", seed);
  bench->add_option("--out", out_path, "CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsageError;
  }

  try {
    if (*pt) return cmd_pt(text);
    if (*infer) return cmd_infer(array, trace);
    if (*check) return cmd_check(array);
    if (*verify) return cmd_verify(text, array, oracle);
    if (*graph) return cmd_graph(array, format, sign);
    if (*regular) return cmd_regular(array, witness);
    if (*gen) return cmd_gen(length, count, seed);
    if (*bench) return cmd_bench(lengths, trials, seed, out_path);
  } catch (const indet::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const indet::InfeasibleArray& e) {
    std::cerr << "error: infeasible array at i=" << e.index() << ": " << e.what()
              << '\n';
    return kDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kUsageError;
}
