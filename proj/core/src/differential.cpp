#include "kgc/differential.hpp"

#include <algorithm>
#include <stdexcept>

#include "kgc/signs.hpp"

namespace kgc {

GappedGraph renumber_with_gap(const AerialGraph& g, int j) {
  const int n = g.size();
  if (j < 0 || j > n) {
    throw std::invalid_argument("gap label " + std::to_string(j) + " outside 0.." + std::to_string(n));
  }
  GappedGraph out;
  out.gap = j;
  out.labels.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) out.labels[static_cast<std::size_t>(v)] = v < j ? v : v + 1;
  out.deb.resize(static_cast<std::size_t>(n + 1));
  for (int v = 0; v < n; ++v) {
    auto& list = out.deb[static_cast<std::size_t>(out.labels[static_cast<std::size_t>(v)])];
    for (Vertex t : g.deb(v)) list.push_back(out.labels[static_cast<std::size_t>(t)]);
  }
  return out;
}

namespace {

struct InArrow {
  int source;
  int index;
};

std::vector<InArrow> in_arrows_of(const GappedGraph& gg, int i) {
  std::vector<InArrow> in;
  for (int v = 0; v < static_cast<int>(gg.deb.size()); ++v) {
    const auto& list = gg.deb[static_cast<std::size_t>(v)];
    for (int k = 0; k < static_cast<int>(list.size()); ++k) {
      if (list[static_cast<std::size_t>(k)] == i) in.push_back({v, k});
    }
  }
  return in;
}

Splitting split_gapped(const GappedGraph& gg, const std::vector<InArrow>& in, const SplitDescriptor& d) {
  const int labels = static_cast<int>(gg.deb.size());
  const int i = d.i;
  const int j = d.j;
  const auto& split_list = gg.deb[static_cast<std::size_t>(i)];
  const int ell = static_cast<int>(split_list.size());
  if (d.r < 0 || d.r > ell) throw std::invalid_argument("split: r outside 0..l");
  if (d.pos < 1 || d.pos > d.r + 1) throw std::invalid_argument("split: position outside 1..r+1");
  if (in.size() < 32 && (d.in_mask >> in.size()) != 0) throw std::invalid_argument("split: in-arrow mask too wide");

  // Where does the arrow (source, index) point after the split?
  auto retarget = [&](int source, int index, int target) {
    if (target != i) return target;
    for (std::size_t k = 0; k < in.size(); ++k) {
      if (in[k].source == source && in[k].index == index) return ((d.in_mask >> k) & 1u) ? i : j;
    }
    throw std::logic_error("split: untracked in-arrow");
  };

  std::vector<std::vector<Vertex>> deb(static_cast<std::size_t>(labels));
  for (int v = 0; v < labels; ++v) {
    if (v == i) continue;
    const auto& list = gg.deb[static_cast<std::size_t>(v)];
    for (int k = 0; k < static_cast<int>(list.size()); ++k) {
      deb[static_cast<std::size_t>(v)].push_back(retarget(v, k, list[static_cast<std::size_t>(k)]));
    }
  }
  const int keeper = d.orientation == Orientation::LowToHigh ? i : j;
  const int other = keeper == i ? j : i;
  auto& first = deb[static_cast<std::size_t>(keeper)];
  auto& rest = deb[static_cast<std::size_t>(other)];
  for (int k = 0; k < ell; ++k) {
    const int target = retarget(i, k, split_list[static_cast<std::size_t>(k)]);
    (k < d.r ? first : rest).push_back(target);
  }
  first.insert(first.begin() + (d.pos - 1), other);

  std::vector<int> q(static_cast<std::size_t>(labels));
  for (int v = 0; v < labels; ++v) q[static_cast<std::size_t>(v)] = static_cast<int>(deb[static_cast<std::size_t>(v)].size());
  long long below_j = 0;
  long long below_i = 0;
  for (int v = 0; v < j; ++v) below_j += q[static_cast<std::size_t>(v)];
  for (int v = 0; v < i; ++v) below_i += q[static_cast<std::size_t>(v)];
  const long long qi = q[static_cast<std::size_t>(i)];
  const long long qj = q[static_cast<std::size_t>(j)];
  long long exponent = qj * below_j + (qj - 1) * below_i + (d.pos - 1);
  if (d.orientation == Orientation::LowToHigh) exponent += qi * qj;

  return Splitting{d, AerialGraph(std::move(deb)), sign_of_power(exponent)};
}

void check_pair(const AerialGraph& g, int i, int j) {
  if (i < 0 || j > g.size() || i >= j) {
    throw std::invalid_argument("split pair needs 0 <= i < j <= n (got i=" + std::to_string(i) +
                                ", j=" + std::to_string(j) + ", n=" + std::to_string(g.size()) + ")");
  }
}

}  // namespace

Splitting build_splitting(const AerialGraph& g, const SplitDescriptor& d) {
  check_pair(g, d.i, d.j);
  const auto gg = renumber_with_gap(g, d.j);
  return split_gapped(gg, in_arrows_of(gg, d.i), d);
}

bool contracts_properly(const AerialGraph& split, int i, int j, Orientation orientation) {
  const auto in = split.in_degrees();
  const int out_i = split.out_degree(i);
  const int out_j = split.out_degree(j);
  const int in_i = in[static_cast<std::size_t>(i)];
  const int in_j = in[static_cast<std::size_t>(j)];
  if (std::min(out_i + in_i, out_j + in_j) > 1) return true;
  // The lone new arrow, with nothing else touching either endpoint.
  if (orientation == Orientation::LowToHigh) {
    return out_i == 1 && split.deb(i)[0] == j && in_j == 1 && in_i == 0 && out_j == 0;
  }
  return out_j == 1 && split.deb(j)[0] == i && in_i == 1 && in_j == 0 && out_i == 0;
}

std::vector<Splitting> splittings(const AerialGraph& g, int i, int j, const TypePolicy& policy) {
  check_pair(g, i, j);
  const auto gg = renumber_with_gap(g, j);
  const auto in = in_arrows_of(gg, i);
  if (in.size() >= 31) throw std::invalid_argument("split: too many in-arrows");
  const int ell = static_cast<int>(gg.deb[static_cast<std::size_t>(i)].size());
  std::vector<Splitting> out;
  for (Orientation orientation : {Orientation::HighToLow, Orientation::LowToHigh}) {
    for (unsigned mask = 0; mask < (1u << in.size()); ++mask) {
      for (int r = 0; r <= ell; ++r) {
        for (int pos = 1; pos <= r + 1; ++pos) {
          auto s = split_gapped(gg, in, SplitDescriptor{i, j, orientation, mask, r, pos});
          if (!contracts_properly(s.graph, i, j, orientation)) continue;
          if (arrow_canonicalize(s.graph).is_zero) continue;
          if (!is_admissible(s.graph, policy)) continue;
          out.push_back(std::move(s));
        }
      }
    }
  }
  return out;
}

GraphSum coboundary(const AerialGraph& g, const TypePolicy& policy) {
  const int n = g.size();
  GraphSum result(n + 1);
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i < j; ++i) {
      for (const auto& s : splittings(g, i, j, policy)) result.add_term(s.graph, -s.sign);
    }
  }
  return result;
}

GraphSum coboundary(const GraphSum& s, const TypePolicy& policy) {
  GraphSum result(s.vertex_count() + 1);
  for (const auto& [g, c] : s.terms()) result += c * coboundary(g, policy);
  return result;
}

GraphSum checked_coboundary(const GraphSum& s, const TypePolicy& policy) {
  if (!is_symmetric(s)) throw std::invalid_argument("coboundary input is not a symmetric combination");
  return coboundary(s, policy);
}

GraphSum transposed_coboundary(const GraphSum& s, const TypePolicy& policy) {
  return transpose(coboundary(transpose(s), policy));
}

}  // namespace kgc
