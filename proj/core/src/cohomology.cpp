#include "kgc/cohomology.hpp"

#include <set>
#include <stdexcept>

#include "kgc/differential.hpp"

namespace kgc {

IsolatedMode parse_isolated_mode(const std::string& name) {
  if (name == "include") return IsolatedMode::Include;
  if (name == "exclude") return IsolatedMode::Exclude;
  throw std::invalid_argument("unknown isolated-vertex mode '" + name + "' (expected include or exclude)");
}

std::string to_string(IsolatedMode mode) { return mode == IsolatedMode::Include ? "include" : "exclude"; }

namespace {

bool has_point(const AerialGraph& g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    if (vertex_type(g, v) == VertexType{0, 0}) return true;
  }
  return false;
}

void add_orbit(BasisSlice& slice, std::set<AerialGraph>& seen, const AerialGraph& g) {
  if (!is_admissible(g, slice.policy)) return;
  if (slice.mode == IsolatedMode::Exclude && has_point(g)) return;
  const OrbitInfo info = orbit_info(g);
  if (info.is_zero || !seen.insert(info.representative).second) return;
  GraphSum rep = symmetrize(info.representative);
  if (rep.empty()) return;
  rep *= 1 / rep.coefficient(info.representative);
  slice.keys.push_back(info.representative);
  slice.reps.push_back(std::move(rep));
}

/// Non-increasing cycle lengths summing to `remaining`, none above `largest`.
void cycle_types(int remaining, int largest, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int len = std::min(remaining, largest); len >= 1; --len) {
    current.push_back(len);
    cycle_types(remaining - len, len, current, out);
    current.pop_back();
  }
}

void balanced_graphs(BasisSlice& slice, std::set<AerialGraph>& seen) {
  const int n = slice.n;
  for (int points = 0; points <= n; ++points) {
    if (points > 0 && slice.mode == IsolatedMode::Exclude) break;
    std::vector<std::vector<int>> types;
    std::vector<int> current;
    cycle_types(n - points, n - points, current, types);
    for (const auto& lengths : types) {
      std::vector<std::vector<Vertex>> deb;
      int base = 0;
      for (int len : lengths) {
        for (int v = 0; v < len; ++v) deb.push_back({base + (v + 1) % len});
        base += len;
      }
      for (int p = 0; p < points; ++p) deb.emplace_back();
      add_orbit(slice, seen, AerialGraph(std::move(deb)));
    }
  }
}

/// Every strictly increasing target list of length at most `cap`.
void target_lists(int n, int cap, int start, std::vector<Vertex>& current, std::vector<std::vector<Vertex>>& out) {
  out.push_back(current);
  if (static_cast<int>(current.size()) == cap) return;
  for (int t = start; t < n; ++t) {
    current.push_back(t);
    target_lists(n, cap, t + 1, current, out);
    current.pop_back();
  }
}

void all_graphs(BasisSlice& slice, std::set<AerialGraph>& seen) {
  const int n = slice.n;
  std::vector<std::vector<Vertex>> lists;
  std::vector<Vertex> current;
  target_lists(n, slice.policy.max_out_degree(), 0, current, lists);
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<std::vector<Vertex>> deb;
    for (std::size_t k : pick) deb.push_back(lists[k]);
    add_orbit(slice, seen, AerialGraph(std::move(deb)));
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == lists.size()) {
      pick[k] = 0;
      ++k;
    }
    if (k == pick.size()) break;
  }
}

TypePolicy widened(const TypePolicy& policy) {
  if (policy.kind() != TypePolicy::Kind::Unrestricted) return policy;
  return TypePolicy::unrestricted(policy.max_out_degree() + 1);
}

}  // namespace

BasisSlice enumerate_basis(int n, const TypePolicy& policy, IsolatedMode mode) {
  if (n < 0) throw std::invalid_argument("enumerate_basis: negative vertex count");
  BasisSlice slice;
  slice.n = n;
  slice.policy = policy;
  slice.mode = mode;
  std::set<AerialGraph> seen;
  if (policy.kind() == TypePolicy::Kind::Unrestricted) {
    all_graphs(slice, seen);
  } else {
    balanced_graphs(slice, seen);
  }
  for (int c = 0; c < slice.dimension(); ++c) slice.index[slice.keys[static_cast<std::size_t>(c)]] = c;
  return slice;
}

RationalVector express_in_basis(const BasisSlice& slice, const GraphSum& s) {
  if (s.vertex_count() != slice.n && !s.empty()) {
    throw std::invalid_argument("express_in_basis: sum on " + std::to_string(s.vertex_count()) + " vertices, slice on " +
                                std::to_string(slice.n));
  }
  RationalVector x(static_cast<std::size_t>(slice.dimension()), 0);
  if (s.empty()) return x;
  for (int c = 0; c < slice.dimension(); ++c) x[static_cast<std::size_t>(c)] = s.coefficient(slice.keys[static_cast<std::size_t>(c)]);
  if (!(from_coordinates(slice, x) == s)) {
    throw std::invalid_argument("express_in_basis: sum is not in the span of the " + std::to_string(slice.n) + "-vertex slice");
  }
  return x;
}

GraphSum from_coordinates(const BasisSlice& slice, const RationalVector& x) {
  if (static_cast<int>(x.size()) != slice.dimension()) throw std::invalid_argument("from_coordinates: wrong vector length");
  GraphSum out(slice.n);
  for (int c = 0; c < slice.dimension(); ++c) {
    if (x[static_cast<std::size_t>(c)] != 0) out += x[static_cast<std::size_t>(c)] * slice.reps[static_cast<std::size_t>(c)];
  }
  return out;
}

SparseRationalMatrix differential_matrix(const BasisSlice& source, const BasisSlice& target) {
  if (target.n != source.n + 1) throw std::invalid_argument("differential_matrix: target must have one more vertex");
  SparseRationalMatrix m(target.dimension(), source.dimension());
  for (int c = 0; c < source.dimension(); ++c) {
    const GraphSum image = coboundary(source.reps[static_cast<std::size_t>(c)], source.policy);
    RationalVector y;
    try {
      y = express_in_basis(target, image);
    } catch (const std::invalid_argument&) {
      throw std::logic_error("differential_matrix: coboundary of basis element " + std::to_string(c + 1) +
                             " leaves the target slice");
    }
    for (int r = 0; r < target.dimension(); ++r) m.set(r, c, y[static_cast<std::size_t>(r)]);
  }
  return m;
}

SparseRationalMatrix differential_matrix(int n, const TypePolicy& policy, IsolatedMode mode) {
  const BasisSlice source = enumerate_basis(n, policy, mode);
  BasisSlice target = enumerate_basis(n + 1, widened(policy), mode);
  target.policy = policy;
  return differential_matrix(source, target);
}

CohomologyRow cohomology_row(int n, const TypePolicy& policy, IsolatedMode mode) {
  if (policy.kind() == TypePolicy::Kind::Unrestricted) {
    throw std::invalid_argument("cohomology is only defined for the ascending and descending complexes");
  }
  if (n < 1) throw std::invalid_argument("cohomology_row: n must be at least 1");
  CohomologyRow row;
  row.n = n;
  row.dim_basis = enumerate_basis(n, policy, mode).dimension();
  row.rank_out = rank(differential_matrix(n, policy, mode));
  row.rank_in = n == 1 ? 0 : rank(differential_matrix(n - 1, policy, mode));
  row.betti = row.dim_basis - row.rank_out - row.rank_in;
  return row;
}

int cohomology_dim(int n, const TypePolicy& policy, IsolatedMode mode) { return cohomology_row(n, policy, mode).betti; }

bool is_cocycle(const GraphSum& delta, const TypePolicy& policy) { return coboundary(delta, policy).empty(); }

std::optional<GraphSum> coboundary_witness(const GraphSum& delta, const TypePolicy& policy, IsolatedMode mode) {
  const int n = delta.vertex_count();
  if (delta.empty()) return GraphSum(std::max(n - 1, 0));
  if (n < 2) return std::nullopt;
  const BasisSlice source = enumerate_basis(n - 1, policy, mode);
  BasisSlice target = enumerate_basis(n, widened(policy), mode);
  target.policy = policy;
  const RationalVector b = express_in_basis(target, delta);
  const auto x = solve(differential_matrix(source, target), b);
  if (!x) return std::nullopt;
  GraphSum beta = from_coordinates(source, *x);
  if (!(coboundary(beta, policy) == delta)) throw std::logic_error("coboundary_witness: solution does not reproduce the input");
  return beta;
}

}  // namespace kgc
