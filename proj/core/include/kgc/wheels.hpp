#ifndef KGC_WHEELS_HPP
#define KGC_WHEELS_HPP

#include <vector>

#include <nlohmann/json.hpp>

#include "kgc/graph.hpp"
#include "kgc/graph_sum.hpp"
#include "kgc/symbol.hpp"

namespace kgc {

/// The cycle 0 -> 1 -> ... -> k-1 -> 0; k = 1 gives a loop.
/// Throws std::invalid_argument for k < 1.
AerialGraph cycle_graph(int k);

/// Symmetrized cycle of length k. Throws std::invalid_argument for k < 1.
GraphSum wheel(int k);

/// Disjoint cycles of the given lengths on consecutive label blocks,
/// symmetrized over all vertices. Lengths must be odd and strictly
/// increasing; anything else throws std::invalid_argument.
GraphSum wheel_product(const std::vector<int>& lengths);

struct Reduction {
  GraphSum reduced;
  /// Accumulated primitive: reduced = input - coboundary(witness).
  GraphSum witness;
  int steps = 0;
  /// Order of the current combination before each step, then the final one
  /// (absent when the final combination is zero).
  std::vector<OrderWord> orders;
};

/// Removes source and mixed vertices from the symbol of a cocycle by
/// repeatedly subtracting d(-(1/a) S(h(symbol))), with a the homotopy
/// coefficient of the current order. Stops once the symbol has only simple,
/// leaf, point or other vertices, or the combination vanishes.
/// Throws std::invalid_argument if `require_cocycle` is set and the input is
/// not a cocycle under `policy`, and std::runtime_error if a step fails to
/// lower the order.
Reduction reduce_to_simple(const GraphSum& delta, const TypePolicy& policy, bool require_cocycle = true);

/// Both sides of the homotopy identity for a symmetric combination delta of
/// order O with symbol sigma:
///   lhs = h(slice of d(delta) at order O + (1,1))
///   rhs = slice of d(h(sigma)) at order O + a(O) sigma
struct HomotopySides {
  GraphSum lhs;
  GraphSum rhs;
};

/// Throws std::invalid_argument for the empty sum.
HomotopySides homotopy_identity_sides(const GraphSum& delta, const TypePolicy& policy);

/// {"reduced": <sum>, "witness": <sum>, "steps": k}
nlohmann::json reduction_to_json(const Reduction& r);

}  // namespace kgc

#endif  // KGC_WHEELS_HPP
