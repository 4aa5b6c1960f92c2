#ifndef KGC_SYMBOL_HPP
#define KGC_SYMBOL_HPP

#include <compare>
#include <string>
#include <vector>

#include "kgc/graph.hpp"
#include "kgc/graph_sum.hpp"
#include "kgc/rational.hpp"

namespace kgc {

/*
 * Orders and symbols of graph combinations.
 *
 * Every vertex type (f, l) falls in one class, ranked from high to low:
 *   source  (0, l) with l > 1, ranked by l
 *   mixed   (f, l) with l > f >= 1, ranked by l then f
 *   simple  (1, 1)
 *   leaf    (0, 1)
 *   point   (0, 0)
 *   other   any remaining type (only reachable without type constraints),
 *           ranked below every point, by l then f
 * The order word of a graph lists the vertex types in label order; words of
 * equal length compare lexicographically with this ranking.
 */

enum class VertexClass { Source = 1, Mixed = 2, Simple = 3, Leaf = 4, Point = 5, Other = 6 };

VertexClass vertex_class(VertexType t);

/// Total order on vertex types described above.
std::strong_ordering compare_vertex_types(VertexType a, VertexType b);

using OrderWord = std::vector<VertexType>;

/// Vertex types in label order.
OrderWord graph_order(const AerialGraph& g);

/// Lexicographic comparison. Throws std::invalid_argument on a length mismatch.
std::strong_ordering compare_orders(const OrderWord& a, const OrderWord& b);

/// Largest order word among the terms. Throws std::invalid_argument when empty.
OrderWord sum_order(const GraphSum& s);

/// Terms whose order word equals `word`.
GraphSum order_slice(const GraphSum& s, const OrderWord& word);

/// Terms of maximal order. Throws std::invalid_argument when empty.
GraphSum symbol(const GraphSum& s);

/// Inserts one (1,1) right after the last entry ranked at least (1,1).
OrderWord order_plus_simple(const OrderWord& word);

/// 1-based block boundaries of a word in decreasing order:
/// sources occupy 1..k0-1, mixed k0..k1-1, simple k1..k2-1, leaves
/// k2..k3-1, the rest k3..n.
struct OrderBlocks {
  int k0 = 1;
  int k1 = 1;
  int k2 = 1;
  int k3 = 1;
};

/// Throws std::invalid_argument unless the word is non-increasing.
OrderBlocks order_blocks(const OrderWord& word);

/// (-1)^{l_1+...+l_{k2-1}} (sum over sources of l + sum over mixed of (l - f)).
/// Zero when the word has neither sources nor mixed vertices.
Coefficient homotopy_coefficient(const OrderWord& word);

/// True when the word has a source or mixed vertex.
bool has_non_simple(const OrderWord& word);

std::string order_to_string(const OrderWord& word);

/// Contracts the arrow leaving the last (1,1) vertex i0 into its target a,
/// re-aims the arrow arriving at i0 onto a, and drops i0 keeping the order
/// of the remaining vertices. The sign is the arrow canonicalization sign;
/// sign 0 means the result is zero (no (1,1) vertex, a self-loop at i0, or a
/// repeated arrow after re-aiming).
SignedGraph homotopy(const AerialGraph& g);

/// Linear extension; the result has one vertex less (zero for n = 0).
GraphSum homotopy(const GraphSum& s);

}  // namespace kgc

#endif  // KGC_SYMBOL_HPP
