#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "kgc/cohomology.hpp"
#include "kgc/differential.hpp"
#include "kgc/json_io.hpp"
#include "kgc/tensor/bracket.hpp"
#include "kgc/tensor/chevalley.hpp"
#include "kgc/tensor/graph_operator.hpp"
#include "kgc/tensor/trace.hpp"
#include "kgc/wheels.hpp"
#include "suites.hpp"

namespace kgc::cli {

namespace {

using json = nlohmann::json;

/// Input or output problem that should end with the usage exit code.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

json read_json(const std::string& path) { return parse_json_text(read_input(path)); }

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot open output file '" + path + "'");
  file << text;
  if (!file) throw UsageError("failed writing '" + path + "'");
}

void write_json(const std::string& path, const json& j, std::ostream& out) { write_output(path, j.dump(2) + "\n", out); }

TypePolicy policy_of(const RunConfig& config) { return parse_policy(config.policy, config.max_out); }

void add_policy_flags(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--policy", config.policy, "Vertex type policy")
      ->check(CLI::IsMember({"ascending", "descending", "unrestricted"}))
      ->capture_default_str();
  cmd->add_option("--max-out", config.max_out, "Out-degree cap under the unrestricted policy")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_io_flags(CLI::App* cmd, RunConfig& config, bool with_input) {
  if (with_input) cmd->add_option("--in", config.in_path, "Input JSON file ('-' for stdin)")->required();
  cmd->add_option("--out", config.out_path, "Output file (stdout when omitted)");
}

GraphSum read_sum_or_graph(const json& j) {
  if (j.is_object() && j.contains("deb")) return GraphSum::single(graph_from_json(j));
  return sum_from_json(j);
}

std::vector<PolyVector> tensors_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("\"args\" must be an array of tensors");
  std::vector<PolyVector> out;
  for (const auto& item : j) out.push_back(polyvector_from_json(item));
  return out;
}

Coefficient entry_from_json(const json& j) {
  if (j.is_number_integer()) return Coefficient(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_coefficient(j.get<std::string>());
  throw std::invalid_argument("matrix entries must be integers or \"p/q\" strings");
}

std::vector<RationalMatrix> matrices_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("\"matrices\" must be an array");
  std::vector<RationalMatrix> out;
  for (const auto& m : j) {
    if (!m.is_array()) throw std::invalid_argument("each matrix must be a list of rows");
    RationalMatrix a;
    for (const auto& row : m) {
      if (!row.is_array()) throw std::invalid_argument("each matrix row must be a list");
      std::vector<Coefficient> r;
      for (const auto& v : row) r.push_back(entry_from_json(v));
      a.push_back(std::move(r));
    }
    out.push_back(std::move(a));
  }
  return out;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("input needs a \"") + key + "\" field");
  return j.at(key);
}

int cmd_enumerate(int n, const RunConfig& config, std::ostream& out, std::ostream& err) {
  const BasisSlice slice = enumerate_basis(n, policy_of(config), parse_isolated_mode(config.isolated));
  json reps = json::array();
  for (const auto& rep : slice.reps) reps.push_back(sum_to_json(rep));
  write_json(config.out_path, reps, out);
  std::ostream& report = config.out_path.empty() || config.out_path == "-" ? err : out;
  report << slice.dimension() << " representatives\n";
  return exit_ok;
}

int cmd_differential(const RunConfig& config, std::ostream& out) {
  const GraphSum s = sum_from_json(read_json(config.in_path));
  write_json(config.out_path, sum_to_json(checked_coboundary(s, policy_of(config))), out);
  return exit_ok;
}

int cmd_symmetrize(const RunConfig& config, std::ostream& out) {
  write_json(config.out_path, sum_to_json(symmetrize(read_sum_or_graph(read_json(config.in_path)))), out);
  return exit_ok;
}

int cmd_reduce(const RunConfig& config, std::ostream& out) {
  const GraphSum s = sum_from_json(read_json(config.in_path));
  const Reduction r = reduce_to_simple(s, policy_of(config));
  json j = reduction_to_json(r);
  json orders = json::array();
  for (const auto& word : r.orders) orders.push_back(order_to_string(word));
  j["orders"] = std::move(orders);
  write_json(config.out_path, j, out);
  return exit_ok;
}

int cmd_cohomology(int nmax, bool as_json, const RunConfig& config, std::ostream& out) {
  const TypePolicy policy = policy_of(config);
  std::ostringstream table;
  json rows = json::array();
  for (IsolatedMode mode : {IsolatedMode::Include, IsolatedMode::Exclude}) {
    table << "policy " << policy.name() << " isolated " << to_string(mode) << '\n';
    table << "n dim_basis rank_in rank_out betti\n";
    for (int n = 1; n <= nmax; ++n) {
      const CohomologyRow row = cohomology_row(n, policy, mode);
      table << row.n << ' ' << row.dim_basis << ' ' << row.rank_in << ' ' << row.rank_out << ' ' << row.betti << '\n';
      rows.push_back({{"n", row.n}, {"betti", row.betti}, {"mode", to_string(mode)}, {"policy", policy.name()},
                      {"dim_basis", row.dim_basis}, {"rank_in", row.rank_in}, {"rank_out", row.rank_out}});
    }
  }
  if (as_json) {
    write_json(config.out_path, rows, out);
  } else {
    write_output(config.out_path, table.str(), out);
  }
  return exit_ok;
}

int cmd_verify(const std::string& suite, const SuiteOptions& options, std::ostream& out) {
  const SuiteResult result = run_suite(suite, options);
  out << suite << ": " << (result.passed ? "PASS" : "FAIL") << " (" << result.checks << " checks, seed " << options.seed
      << ")\n";
  if (!result.passed) out << result.counterexample.dump() << '\n';
  return result.passed ? exit_ok : exit_failure;
}

int cmd_oracle(const std::string& op, const RunConfig& config, std::ostream& out) {
  const json input = read_json(config.in_path);
  json result;
  if (op == "nabla" || op == "schouten") {
    const auto args = tensors_from_json(field(input, "args"));
    if (args.size() != 2) throw std::invalid_argument(op + " takes two tensors");
    result = polyvector_to_json(op == "nabla" ? nabla(args[0], args[1]) : schouten(args[0], args[1]));
  } else if (op == "ascending") {
    const auto args = tensors_from_json(field(input, "args"));
    if (args.size() != 1) throw std::invalid_argument("ascending takes one tensor");
    result = {{"ascending", is_ascending_tensor(args[0])}};
  } else if (op == "cochain" || op == "chevalley") {
    const GraphSum delta = sum_from_json(field(input, "sum"));
    const auto args = tensors_from_json(field(input, "args"));
    result = polyvector_to_json(op == "cochain" ? cochain_eval(delta, args) : chevalley_coboundary_eval(delta, args));
  } else if (op == "wheel-trace") {
    const auto args = tensors_from_json(field(input, "args"));
    if (args.size() % 2 == 0) throw std::invalid_argument("wheel-trace takes an odd number of tensors");
    result = polyvector_to_json(wheel_trace_eval(static_cast<int>(args.size() / 2), args));
  } else if (op == "antisym-trace") {
    result = {{"value", format_coefficient(antisym_trace(matrices_from_json(field(input, "matrices"))))}};
  }
  write_json(config.out_path, result, out);
  return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph complex cohomology and polyvector oracle toolkit", "kgc"};
  app.require_subcommand(1);

  RunConfig config;
  int n = 0;
  int nmax = 4;
  bool as_json = false;
  std::vector<int> ks;
  std::string suite;
  std::string op;
  std::optional<int> dim;
  int length = 5;

  auto* enumerate = app.add_subcommand("enumerate", "List basis representatives of the n-vertex slice");
  enumerate->add_option("--n", n, "Vertex count")->required()->check(CLI::Range(1, 12));
  add_policy_flags(enumerate, config);
  enumerate->add_option("--isolated", config.isolated, "Isolated-vertex mode")
      ->check(CLI::IsMember({"include", "exclude"}))
      ->default_val("include");
  add_io_flags(enumerate, config, false);

  auto* differential = app.add_subcommand("differential", "Coboundary of a symmetric combination");
  add_policy_flags(differential, config);
  add_io_flags(differential, config, true);

  auto* symmetrize_cmd = app.add_subcommand("symmetrize", "Graded symmetrization of a graph or combination");
  add_io_flags(symmetrize_cmd, config, true);

  auto* wheel_cmd = app.add_subcommand("wheel", "Symmetrized cycle of length n");
  wheel_cmd->add_option("--n", n, "Cycle length")->required()->check(CLI::Range(1, 12));
  add_io_flags(wheel_cmd, config, false);

  auto* product = app.add_subcommand("wheel-product", "Symmetrized disjoint union of odd cycles");
  product->add_option("--ks", ks, "Odd, strictly increasing cycle lengths")->required()->delimiter(',');
  add_io_flags(product, config, false);

  auto* reduce = app.add_subcommand("reduce", "Remove source and mixed vertices from a cocycle's symbol");
  add_policy_flags(reduce, config);
  add_io_flags(reduce, config, true);

  auto* cohomology = app.add_subcommand("cohomology", "Betti table for n = 1..nmax in both isolated-vertex modes");
  cohomology->add_option("--n", nmax, "Largest vertex count")->check(CLI::Range(1, 6))->capture_default_str();
  cohomology->add_option("--policy", config.policy, "Vertex type policy")
      ->check(CLI::IsMember({"ascending", "descending"}))
      ->capture_default_str();
  cohomology->add_flag("--json", as_json, "Machine-readable output");
  add_io_flags(cohomology, config, false);

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  auto* verify_n = verify->add_option("--n", n, "Largest vertex count")->check(CLI::Range(1, 6));
  add_policy_flags(verify, config);
  verify->add_option("--isolated", config.isolated, "Isolated-vertex mode (both when omitted)")
      ->check(CLI::IsMember({"include", "exclude"}));
  verify->add_option("--dim", dim, "Ambient dimension")->check(CLI::PositiveNumber);
  verify->add_option("--length", length, "Number of matrices")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--trials", config.trials, "Random trials")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--seed", config.seed, "Random seed")->check(CLI::PositiveNumber)->capture_default_str();

  auto* oracle = app.add_subcommand("oracle", "Evaluate a tensor-level operation on JSON input");
  oracle->add_option("op", op, "Operation")
      ->required()
      ->check(CLI::IsMember({"nabla", "schouten", "ascending", "cochain", "chevalley", "wheel-trace", "antisym-trace"}));
  add_io_flags(oracle, config, true);

  try {
    std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*enumerate) return cmd_enumerate(n, config, out, err);
    if (*differential) return cmd_differential(config, out);
    if (*symmetrize_cmd) return cmd_symmetrize(config, out);
    if (*wheel_cmd) {
      write_json(config.out_path, sum_to_json(wheel(n)), out);
      return exit_ok;
    }
    if (*product) {
      write_json(config.out_path, sum_to_json(wheel_product(ks)), out);
      return exit_ok;
    }
    if (*reduce) return cmd_reduce(config, out);
    if (*cohomology) return cmd_cohomology(nmax, as_json, config, out);
    if (*verify) {
      SuiteOptions options;
      if (*verify_n) options.n = n;
      options.policy = policy_of(config);
      if (!config.isolated.empty()) options.mode = parse_isolated_mode(config.isolated);
      options.dim = dim;
      options.length = length;
      options.trials = config.trials;
      options.seed = config.seed;
      return cmd_verify(suite, options, out);
    }
    if (*oracle) return cmd_oracle(op, config, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_usage;
}

}  // namespace kgc::cli
