#include "suites.hpp"

#include <random>
#include <stdexcept>

#include "kgc/differential.hpp"
#include "kgc/json_io.hpp"
#include "kgc/symbol.hpp"
#include "kgc/tensor/bracket.hpp"
#include "kgc/tensor/chevalley.hpp"
#include "kgc/tensor/graph_operator.hpp"
#include "kgc/tensor/random.hpp"
#include "kgc/tensor/trace.hpp"
#include "kgc/wheels.hpp"

namespace kgc::cli {

namespace {

using json = nlohmann::json;

std::vector<IsolatedMode> modes_of(const SuiteOptions& options) {
  if (options.mode) return {*options.mode};
  return {IsolatedMode::Include, IsolatedMode::Exclude};
}

/// Records a failure; only the first counterexample is kept.
void fail(SuiteResult& result, json detail) {
  if (result.passed) result.counterexample = std::move(detail);
  result.passed = false;
}

json tensors_to_json(const std::vector<PolyVector>& args) {
  json out = json::array();
  for (const auto& a : args) out.push_back(polyvector_to_json(a));
  return out;
}

json matrices_to_json(const std::vector<RationalMatrix>& as) {
  json out = json::array();
  for (const auto& a : as) {
    json rows = json::array();
    for (const auto& row : a) {
      json r = json::array();
      for (const auto& v : row) r.push_back(format_coefficient(v));
      rows.push_back(std::move(r));
    }
    out.push_back(std::move(rows));
  }
  return out;
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Argument tuple of ascending tensors with orders drawn from lo..hi.
std::vector<PolyVector> random_args(int count, int d, int lo, int hi, std::mt19937_64& rng) {
  std::vector<PolyVector> args;
  for (int k = 0; k < count; ++k) args.push_back(random_ascending_tensor(d, uniform_int(rng, lo, hi), -1, rng));
  return args;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"d-squared", "homotopy", "schouten", "correspondence", "amitsur-levitzki", "wheels"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "d-squared") return verify_d_squared(options);
  if (name == "homotopy") return verify_homotopy(options);
  if (name == "schouten") return verify_schouten(options);
  if (name == "correspondence") return verify_correspondence(options);
  if (name == "amitsur-levitzki") return verify_amitsur_levitzki(options);
  if (name == "wheels") return verify_wheels(options);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteResult verify_d_squared(const SuiteOptions& options) {
  SuiteResult result;
  for (IsolatedMode mode : modes_of(options)) {
    for (int n = 1; n <= options.n; ++n) {
      const BasisSlice slice = enumerate_basis(n, options.policy, mode);
      for (int c = 0; c < slice.dimension(); ++c) {
        const GraphSum& rep = slice.reps[static_cast<std::size_t>(c)];
        const GraphSum dd = coboundary(coboundary(rep, options.policy), options.policy);
        ++result.checks;
        if (!dd.empty()) {
          fail(result, {{"n", n}, {"mode", to_string(mode)}, {"policy", options.policy.name()}, {"basis_element", c + 1},
                        {"rep", sum_to_json(rep)}, {"dd", sum_to_json(dd)}});
        }
      }
    }
  }
  return result;
}

SuiteResult verify_homotopy(const SuiteOptions& options) {
  SuiteResult result;
  for (int k = 2; k <= 4; ++k) {
    const SignedGraph h = homotopy(cycle_graph(k));
    ++result.checks;
    if (h.sign == 0 || !(h.graph == cycle_graph(k - 1))) {
      fail(result, {{"check", "cycle"}, {"k", k}, {"sign", h.sign}, {"image", graph_to_json(h.graph)}});
    }
  }
  for (int n = 1; n <= 4; ++n) {
    ++result.checks;
    if (homotopy(AerialGraph::empty(n)).sign != 0) fail(result, {{"check", "isolated"}, {"n", n}});
  }
  for (IsolatedMode mode : modes_of(options)) {
    for (int n = 1; n <= options.n; ++n) {
      const BasisSlice slice = enumerate_basis(n, options.policy, mode);
      for (int c = 0; c < slice.dimension(); ++c) {
        const GraphSum& rep = slice.reps[static_cast<std::size_t>(c)];
        const HomotopySides sides = homotopy_identity_sides(rep, options.policy);
        ++result.checks;
        if (!(sides.lhs == sides.rhs)) {
          fail(result, {{"check", "identity"}, {"n", n}, {"mode", to_string(mode)}, {"policy", options.policy.name()},
                        {"rep", sum_to_json(rep)}, {"lhs", sum_to_json(sides.lhs)}, {"rhs", sum_to_json(sides.rhs)}});
        }
      }
    }
  }
  return result;
}

SuiteResult verify_schouten(const SuiteOptions& options) {
  SuiteResult result;
  const int max_d = options.dim.value_or(3);
  std::mt19937_64 rng(options.seed);
  for (int t = 0; t < options.trials; ++t) {
    const int d = uniform_int(rng, 1, max_d);
    const auto args = random_args(3, d, 0, 3, rng);
    const PolyVector& a = args[0];
    const PolyVector& b = args[1];
    const PolyVector& c = args[2];
    const int da = a.degree(), db = b.degree();

    const PolyVector ab = schouten(a, b);
    const PolyVector ba = schouten(b, a);
    const Coefficient swap = (da * db) % 2 == 0 ? -1 : 1;
    ++result.checks;
    if (!(ab == swap * ba)) {
      fail(result, {{"check", "antisymmetry"}, {"seed", options.seed}, {"trial", t}, {"args", tensors_to_json(args)}});
    }

    // [a,[b,c]] = [[a,b],c] + (-1)^(deg a deg b) [b,[a,c]]
    const PolyVector lhs = schouten(a, schouten(b, c));
    const Coefficient koszul = (da * db) % 2 == 0 ? 1 : -1;
    const PolyVector rhs = schouten(ab, c) + koszul * schouten(b, schouten(a, c));
    ++result.checks;
    if (!(lhs == rhs)) {
      fail(result, {{"check", "jacobi"}, {"seed", options.seed}, {"trial", t}, {"args", tensors_to_json(args)}});
    }

    ++result.checks;
    if (!is_ascending_tensor(ab)) {
      fail(result, {{"check", "closure"}, {"seed", options.seed}, {"trial", t}, {"args", tensors_to_json({a, b})},
                    {"bracket", polyvector_to_json(ab)}});
    }
  }
  return result;
}

SuiteResult verify_correspondence(const SuiteOptions& options) {
  SuiteResult result;
  const std::vector<std::pair<std::string, GraphSum>> cases = {
      {"S(point)", symmetrize(AerialGraph::empty(1))},
      {"R1", wheel(1)},
      {"S(loop+point)", symmetrize(AerialGraph({{0}, {}}))},
      {"R3", wheel(3)},
  };
  const std::vector<int> dims = options.dim ? std::vector<int>{*options.dim} : std::vector<int>{2, 3};
  std::mt19937_64 rng(options.seed);
  for (const auto& [name, delta] : cases) {
    const GraphSum d_delta = coboundary(delta, options.policy);
    for (int d : dims) {
      for (int t = 0; t < options.trials; ++t) {
        const auto args = random_args(delta.vertex_count() + 1, d, 0, d, rng);
        const PolyVector lhs = chevalley_coboundary_eval(delta, args);
        const PolyVector rhs = cochain_eval(d_delta, args);
        ++result.checks;
        if (!(lhs == rhs)) {
          fail(result, {{"delta", name}, {"policy", options.policy.name()}, {"d", d}, {"seed", options.seed}, {"trial", t},
                        {"args", tensors_to_json(args)}, {"tensor_side", polyvector_to_json(lhs)},
                        {"graph_side", polyvector_to_json(rhs)}});
        }
      }
    }
  }
  return result;
}

SuiteResult verify_amitsur_levitzki(const SuiteOptions& options) {
  SuiteResult result;
  const int d = options.dim.value_or(2);
  const int k = options.length;
  if (d < 1 || k < 1) throw std::invalid_argument("amitsur-levitzki needs positive --dim and --length");
  // Even k always vanishes: a k-cycle is an odd permutation fixing the trace.
  const bool expect_zero = k % 2 == 0 || k > 2 * d;
  std::mt19937_64 rng(options.seed);
  bool seen_nonzero = false;
  std::vector<RationalMatrix> first;
  for (int t = 0; t < options.trials; ++t) {
    std::vector<RationalMatrix> as;
    for (int i = 0; i < k; ++i) as.push_back(random_integer_matrix(d, -3, 3, rng));
    if (t == 0) first = as;
    const Coefficient value = antisym_trace(as);
    ++result.checks;
    if (value != 0) seen_nonzero = true;
    if (expect_zero && value != 0) {
      fail(result, {{"dim", d}, {"length", k}, {"seed", options.seed}, {"trial", t}, {"matrices", matrices_to_json(as)},
                    {"value", format_coefficient(value)}});
    }
  }
  if (!expect_zero && !seen_nonzero && options.trials > 0) {
    fail(result, {{"dim", d}, {"length", k}, {"seed", options.seed}, {"expected", "nonzero in some trial"},
                  {"matrices", matrices_to_json(first)}});
  }
  return result;
}

SuiteResult verify_wheels(const SuiteOptions& options) {
  SuiteResult result;
  for (int k : {2, 4}) {
    ++result.checks;
    if (!wheel(k).empty()) fail(result, {{"check", "even wheel"}, {"k", k}, {"wheel", sum_to_json(wheel(k))}});
  }
  for (int k : {1, 3, 5}) {
    const GraphSum d_wheel = coboundary(wheel(k), options.policy);
    ++result.checks;
    if (!d_wheel.empty()) fail(result, {{"check", "odd wheel cocycle"}, {"k", k}, {"coboundary", sum_to_json(d_wheel)}});
  }
  const GraphSum r3 = wheel(3);
  std::mt19937_64 rng(options.seed);
  for (int t = 0; t < options.trials; ++t) {
    const auto args = random_args(3, 1, 1, 1, rng);
    const PolyVector value = cochain_eval(r3, args);
    ++result.checks;
    if (!value.is_zero()) {
      fail(result, {{"check", "vanishing at d=1"}, {"seed", options.seed}, {"trial", t}, {"args", tensors_to_json(args)},
                    {"value", polyvector_to_json(value)}});
    }
  }
  for (int t = 0; t < options.trials; ++t) {
    const auto args = random_args(3, 2, 1, 2, rng);
    const PolyVector by_graph = cochain_eval(r3, args);
    const PolyVector by_trace = wheel_trace_eval(1, args);
    ++result.checks;
    if (!(by_graph == by_trace)) {
      fail(result, {{"check", "dual evaluator"}, {"seed", options.seed}, {"trial", t}, {"args", tensors_to_json(args)},
                    {"graph_side", polyvector_to_json(by_graph)}, {"trace_side", polyvector_to_json(by_trace)}});
    }
  }
  return result;
}

}  // namespace kgc::cli
