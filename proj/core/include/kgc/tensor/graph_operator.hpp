#ifndef KGC_TENSOR_GRAPH_OPERATOR_HPP
#define KGC_TENSOR_GRAPH_OPERATOR_HPP

#include <span>
#include <vector>

#include "kgc/graph.hpp"
#include "kgc/graph_sum.hpp"
#include "kgc/tensor/polyvector.hpp"

namespace kgc {

/// Aerial graph plus legs[i] arrows from vertex i to fresh ground vertices.
/// In the compatible arrow order the legs of i follow its aerial arrows.
struct LeggedGraph {
  AerialGraph base;
  std::vector<int> legs;
};

/// Parity of moving every leg behind all aerial arrows, in closed form
/// (-1)^(sum_i m_i (l_{i+1} + ... + l_n)).
int legs_sign(const LeggedGraph& g);

/// The same sign from the explicit permutation of the arrow list.
int legs_sign_by_shuffle(const LeggedGraph& g);

/// The multidifferential operator of a legged graph in its compatible
/// order: the arrow leaving i in slot k uses index t of slot k of alpha_i,
/// each arrow landing on a vertex differentiates that vertex's component,
/// and the leg slots are wedged in vertex order. Requires
/// args[i].order() == l_i + m_i; throws std::invalid_argument otherwise.
PolyVector b_gamma(const LeggedGraph& g, std::span<const PolyVector> args);

/// C_Delta(args): legs m_i = |alpha_i| - l_i, the term vanishing when some
/// m_i < 0, weighted by legs_sign.
PolyVector cochain_eval(const AerialGraph& g, std::span<const PolyVector> args);

/// Linear extension over a graph sum.
PolyVector cochain_eval(const GraphSum& s, std::span<const PolyVector> args);

/// Total arrow count shared by all terms (0 for the empty sum); throws
/// std::invalid_argument when the terms disagree.
int uniform_arrow_count(const GraphSum& s);

}  // namespace kgc

#endif  // KGC_TENSOR_GRAPH_OPERATOR_HPP
