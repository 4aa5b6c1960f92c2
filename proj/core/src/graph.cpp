#include "kgc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "kgc/signs.hpp"

namespace kgc {

AerialGraph::AerialGraph(std::vector<std::vector<Vertex>> deb) : deb_(std::move(deb)) {
  const int n = size();
  for (const auto& list : deb_) {
    for (Vertex t : list) {
      if (t < 0 || t >= n) {
        throw std::invalid_argument("arrow target " + std::to_string(t + 1) + " outside 1.." + std::to_string(n));
      }
    }
  }
}

AerialGraph AerialGraph::empty(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  return AerialGraph(std::vector<std::vector<Vertex>>(static_cast<std::size_t>(n)));
}

int AerialGraph::in_degree(Vertex v) const {
  if (v < 0 || v >= size()) throw std::out_of_range("vertex index out of range");
  int f = 0;
  for (const auto& list : deb_) f += static_cast<int>(std::count(list.begin(), list.end(), v));
  return f;
}

std::vector<int> AerialGraph::out_degrees() const {
  std::vector<int> out;
  out.reserve(deb_.size());
  for (const auto& list : deb_) out.push_back(static_cast<int>(list.size()));
  return out;
}

std::vector<int> AerialGraph::in_degrees() const {
  std::vector<int> in(deb_.size(), 0);
  for (const auto& list : deb_) {
    for (Vertex t : list) ++in[static_cast<std::size_t>(t)];
  }
  return in;
}

int AerialGraph::arrow_count() const {
  int total = 0;
  for (const auto& list : deb_) total += static_cast<int>(list.size());
  return total;
}

std::string AerialGraph::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t v = 0; v < deb_.size(); ++v) {
    if (v) os << ',';
    os << '(';
    for (std::size_t k = 0; k < deb_[v].size(); ++k) {
      if (k) os << ',';
      os << "->" << deb_[v][k] + 1;
    }
    os << ')';
  }
  os << ')';
  return os.str();
}

VertexType vertex_type(const AerialGraph& g, Vertex v) {
  if (v < 0 || v >= g.size()) throw std::out_of_range("vertex index out of range");
  return VertexType{g.in_degree(v), g.out_degree(v)};
}

TypePolicy TypePolicy::unrestricted(int max_out) {
  if (max_out < 1) throw std::invalid_argument("unrestricted policy needs a positive out-degree cap");
  return TypePolicy(Kind::Unrestricted, max_out);
}

bool TypePolicy::accepts(VertexType t) const {
  switch (kind_) {
    case Kind::Ascending:
      return t.l > 1 ? t.f < t.l : t.f <= t.l;
    case Kind::Descending:
      return t.f > 1 ? t.f > t.l : t.f >= t.l;
    case Kind::Unrestricted:
      return true;
  }
  return false;
}

std::string TypePolicy::name() const {
  switch (kind_) {
    case Kind::Ascending:
      return "ascending";
    case Kind::Descending:
      return "descending";
    case Kind::Unrestricted:
      return "unrestricted";
  }
  return "?";
}

TypePolicy parse_policy(const std::string& name, int max_out) {
  if (name == "ascending") return TypePolicy::ascending();
  if (name == "descending") return TypePolicy::descending();
  if (name == "unrestricted") return TypePolicy::unrestricted(max_out);
  throw std::invalid_argument("unknown policy '" + name + "' (expected ascending|descending|unrestricted)");
}

bool is_admissible(const AerialGraph& g, const TypePolicy& policy) {
  if (policy.kind() == TypePolicy::Kind::Unrestricted) return true;
  const auto in = g.in_degrees();
  for (int v = 0; v < g.size(); ++v) {
    if (!policy.accepts(VertexType{in[static_cast<std::size_t>(v)], g.out_degree(v)})) return false;
  }
  return true;
}

ArrowCanonical arrow_canonicalize(const AerialGraph& g) {
  auto lists = g.lists();
  int sign = 1;
  for (auto& list : lists) {
    int s = sort_with_sign(list);
    if (s == 0) return ArrowCanonical{g, 0, true};
    sign *= s;
  }
  return ArrowCanonical{AerialGraph(std::move(lists)), sign, false};
}

int transposition_sign(std::span<const int> out, int i, int j) {
  const int n = static_cast<int>(out.size());
  if (i < 0 || j >= n || i >= j) throw std::invalid_argument("transposition_sign needs 0 <= i < j < n");
  long long middle = 0;
  for (int k = i + 1; k < j; ++k) middle += out[static_cast<std::size_t>(k)];
  const long long li = out[static_cast<std::size_t>(i)];
  const long long lj = out[static_cast<std::size_t>(j)];
  return sign_of_power(li * lj + (li + lj) * middle);
}

SignedGraph relabel(const AerialGraph& g, std::span<const int> perm) {
  const int n = g.size();
  if (static_cast<int>(perm.size()) != n || !is_permutation(perm)) {
    throw std::invalid_argument("relabel: not a permutation of the vertices");
  }
  std::vector<std::vector<Vertex>> lists(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    auto& target = lists[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])];
    target.reserve(g.deb(v).size());
    for (Vertex t : g.deb(v)) target.push_back(perm[static_cast<std::size_t>(t)]);
  }
  const auto inv = inverse_permutation(perm);
  const auto out = g.out_degrees();
  int sign = koszul_sign(out, inv);
  auto canon = arrow_canonicalize(AerialGraph(std::move(lists)));
  if (canon.is_zero) return SignedGraph{canon.graph, 0};
  return SignedGraph{std::move(canon.graph), sign * canon.sign};
}

SignedGraph transpose_signed(const AerialGraph& g) {
  const int n = g.size();
  // Global position of every arrow in the source-grouped list.
  struct Arrow {
    int position;
    Vertex source;
    Vertex target;
  };
  std::vector<Arrow> arrows;
  int position = 0;
  for (int v = 0; v < n; ++v) {
    for (Vertex t : g.deb(v)) arrows.push_back({position++, v, t});
  }
  // New list grouped by the old target, keeping the old relative order.
  std::stable_sort(arrows.begin(), arrows.end(), [](const Arrow& a, const Arrow& b) { return a.target < b.target; });
  std::vector<int> order;
  std::vector<std::vector<Vertex>> lists(static_cast<std::size_t>(n));
  for (const auto& a : arrows) {
    order.push_back(a.position);
    lists[static_cast<std::size_t>(a.target)].push_back(a.source);
  }
  int sign = permutation_parity(order);
  auto canon = arrow_canonicalize(AerialGraph(std::move(lists)));
  if (canon.is_zero) return SignedGraph{canon.graph, 0};
  return SignedGraph{std::move(canon.graph), sign * canon.sign};
}

AerialGraph transpose(const AerialGraph& g) { return transpose_signed(g).graph; }

OrbitInfo orbit_info(const AerialGraph& g) {
  const int n = g.size();
  auto canon = arrow_canonicalize(g);
  OrbitInfo info;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  if (canon.is_zero) {
    info.representative = g;
    info.to_representative = perm;
    info.sign = 0;
    info.is_zero = true;
    return info;
  }
  bool first = true;
  do {
    auto image = relabel(canon.graph, perm);
    if (image.graph == canon.graph && image.sign == -1) info.is_zero = true;
    if (first || image.graph < info.representative) {
      info.representative = image.graph;
      info.to_representative = perm;
      info.sign = image.sign * canon.sign;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return info;
}

AerialGraph graph_from_one_based(const std::vector<std::vector<int>>& deb) {
  std::vector<std::vector<Vertex>> lists;
  lists.reserve(deb.size());
  for (const auto& list : deb) {
    std::vector<Vertex> zero_based;
    for (int t : list) zero_based.push_back(t - 1);
    lists.push_back(std::move(zero_based));
  }
  return AerialGraph(std::move(lists));
}

}  // namespace kgc
