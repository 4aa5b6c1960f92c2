#include "kgc/symbol.hpp"

#include <stdexcept>
#include <tuple>

namespace kgc {

namespace {

std::tuple<int, int, int> rank_key(VertexType t) {
  switch (vertex_class(t)) {
    case VertexClass::Source:
      return {5, t.l, 0};
    case VertexClass::Mixed:
      return {4, t.l, t.f};
    case VertexClass::Simple:
      return {3, 0, 0};
    case VertexClass::Leaf:
      return {2, 0, 0};
    case VertexClass::Point:
      return {1, 0, 0};
    case VertexClass::Other:
      break;
  }
  return {0, t.l, t.f};
}

}  // namespace

VertexClass vertex_class(VertexType t) {
  if (t.f == 0 && t.l > 1) return VertexClass::Source;
  if (t.f >= 1 && t.l > t.f) return VertexClass::Mixed;
  if (t.f == 1 && t.l == 1) return VertexClass::Simple;
  if (t.f == 0 && t.l == 1) return VertexClass::Leaf;
  if (t.f == 0 && t.l == 0) return VertexClass::Point;
  return VertexClass::Other;
}

std::strong_ordering compare_vertex_types(VertexType a, VertexType b) { return rank_key(a) <=> rank_key(b); }

OrderWord graph_order(const AerialGraph& g) {
  OrderWord word;
  for (Vertex v = 0; v < g.size(); ++v) word.push_back(vertex_type(g, v));
  return word;
}

std::strong_ordering compare_orders(const OrderWord& a, const OrderWord& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compare_orders: words of different lengths");
  for (std::size_t k = 0; k < a.size(); ++k) {
    const auto c = compare_vertex_types(a[k], b[k]);
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

OrderWord sum_order(const GraphSum& s) {
  if (s.empty()) throw std::invalid_argument("order of an empty sum");
  OrderWord best;
  bool first = true;
  for (const auto& [g, c] : s.terms()) {
    OrderWord w = graph_order(g);
    if (first || compare_orders(w, best) > 0) best = std::move(w);
    first = false;
  }
  return best;
}

GraphSum order_slice(const GraphSum& s, const OrderWord& word) {
  GraphSum out(s.vertex_count());
  for (const auto& [g, c] : s.terms()) {
    if (static_cast<int>(word.size()) == g.size() && compare_orders(graph_order(g), word) == 0) out.add_term(g, c);
  }
  return out;
}

GraphSum symbol(const GraphSum& s) { return order_slice(s, sum_order(s)); }

OrderWord order_plus_simple(const OrderWord& word) {
  const VertexType simple{1, 1};
  std::size_t at = 0;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (compare_vertex_types(word[k], simple) >= 0) at = k + 1;
  }
  OrderWord out = word;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(at), simple);
  return out;
}

OrderBlocks order_blocks(const OrderWord& word) {
  for (std::size_t k = 1; k < word.size(); ++k) {
    if (compare_vertex_types(word[k - 1], word[k]) < 0) throw std::invalid_argument("order_blocks: word is not non-increasing");
  }
  auto count = [&](VertexClass c) {
    int m = 0;
    for (const auto& t : word) m += vertex_class(t) == c;
    return m;
  };
  OrderBlocks b;
  b.k0 = 1 + count(VertexClass::Source);
  b.k1 = b.k0 + count(VertexClass::Mixed);
  b.k2 = b.k1 + count(VertexClass::Simple);
  b.k3 = b.k2 + count(VertexClass::Leaf);
  return b;
}

Coefficient homotopy_coefficient(const OrderWord& word) {
  const OrderBlocks b = order_blocks(word);
  long long exponent = 0;
  for (int k = 1; k < b.k2; ++k) exponent += word[static_cast<std::size_t>(k - 1)].l;
  long long value = 0;
  for (int k = 1; k < b.k0; ++k) value += word[static_cast<std::size_t>(k - 1)].l;
  for (int k = b.k0; k < b.k1; ++k) {
    const auto& t = word[static_cast<std::size_t>(k - 1)];
    value += t.l - t.f;
  }
  return Coefficient(static_cast<long>(exponent % 2 == 0 ? value : -value));
}

bool has_non_simple(const OrderWord& word) {
  for (const auto& t : word) {
    const VertexClass c = vertex_class(t);
    if (c == VertexClass::Source || c == VertexClass::Mixed) return true;
  }
  return false;
}

std::string order_to_string(const OrderWord& word) {
  std::string s = "(";
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += ",";
    s += "(" + std::to_string(word[k].f) + "," + std::to_string(word[k].l) + ")";
  }
  return s + ")";
}

SignedGraph homotopy(const AerialGraph& g) {
  const int n = g.size();
  int i0 = -1;
  for (Vertex v = n - 1; v >= 0; --v) {
    if (vertex_type(g, v) == VertexType{1, 1}) {
      i0 = v;
      break;
    }
  }
  if (i0 < 0) return SignedGraph{AerialGraph::empty(std::max(n - 1, 0)), 0};
  const Vertex a = g.deb(i0)[0];
  if (a == i0) return SignedGraph{AerialGraph::empty(n - 1), 0};

  auto rename = [i0](Vertex v) { return v > i0 ? v - 1 : v; };
  std::vector<std::vector<Vertex>> deb;
  for (Vertex v = 0; v < n; ++v) {
    if (v == i0) continue;
    std::vector<Vertex> list;
    for (Vertex t : g.deb(v)) list.push_back(rename(t == i0 ? a : t));
    deb.push_back(std::move(list));
  }
  const ArrowCanonical c = arrow_canonicalize(AerialGraph(std::move(deb)));
  if (c.is_zero) return SignedGraph{AerialGraph::empty(n - 1), 0};
  return SignedGraph{c.graph, c.sign};
}

GraphSum homotopy(const GraphSum& s) {
  GraphSum out(std::max(s.vertex_count() - 1, 0));
  for (const auto& [g, c] : s.terms()) {
    const SignedGraph h = homotopy(g);
    if (h.sign != 0) out.add_term(h.graph, c * h.sign);
  }
  return out;
}

}  // namespace kgc
