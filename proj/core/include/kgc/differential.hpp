#ifndef KGC_DIFFERENTIAL_HPP
#define KGC_DIFFERENTIAL_HPP

#include <vector>

#include "kgc/graph.hpp"
#include "kgc/graph_sum.hpp"

namespace kgc {

/*
 * Coboundary on symmetric graph combinations by vertex splitting.
 *
 * For a graph on n vertices and a gap label j in 0..n, the vertices are
 * renamed to the labels (0,...,j-1,j+1,...,n) in order. A vertex i < j of
 * the renamed graph is then split into the pair (i, j): one of them keeps
 * the new arrow between i and j together with the first r out-arrows of i,
 * the other keeps the remaining out-arrows; each in-arrow of i lands on i
 * or on j. The split graph lives on labels 0..n and is returned in that
 * label order (label k becomes vertex k of the result).
 */

/// Graph over the labels 0..n with label `gap` unused.
struct GappedGraph {
  int gap = 0;
  /// labels[k] is the new label of vertex k of the original graph.
  std::vector<int> labels;
  /// deb[label] = targets (as labels); deb[gap] is empty.
  std::vector<std::vector<int>> deb;
};

/// Throws std::invalid_argument unless 0 <= j <= g.size().
GappedGraph renumber_with_gap(const AerialGraph& g, int j);

enum class Orientation {
  LowToHigh,  // new arrow i -> j; i keeps it with the first r out-arrows
  HighToLow,  // new arrow j -> i; j keeps it with the first r out-arrows
};

struct SplitDescriptor {
  int i = 0;
  int j = 0;
  Orientation orientation = Orientation::LowToHigh;
  /// Bit k set: the k-th in-arrow of i (in arrow-list order) stays on i.
  unsigned in_mask = 0;
  int r = 0;
  /// 1-based position of the new arrow in its list, 1 <= pos <= r + 1.
  int pos = 1;
};

struct Splitting {
  SplitDescriptor descriptor;
  /// Split graph in label order, before arrow canonicalization.
  AerialGraph graph;
  /// Sign of the splitting term (without the overall minus of the
  /// coboundary and without canonicalization).
  int sign = 1;
};

/// Builds one split graph (no filtering). Throws on inconsistent input.
Splitting build_splitting(const AerialGraph& g, const SplitDescriptor& d);

/// Proper-contraction test on a split graph for the pair (i, j).
bool contracts_properly(const AerialGraph& split, int i, int j, Orientation orientation);

/// All properly contracting, policy-admissible splittings of vertex i of the
/// graph renumbered with gap j. Graphs are returned in label order with the
/// splitting sign; results with a repeated arrow are dropped.
std::vector<Splitting> splittings(const AerialGraph& g, int i, int j, const TypePolicy& policy);

/// The coboundary of one graph, signs included, over n + 1 vertices.
GraphSum coboundary(const AerialGraph& g, const TypePolicy& policy);

/// Linear extension to sums.
GraphSum coboundary(const GraphSum& s, const TypePolicy& policy);

/// Same as coboundary() after verifying that `s` is a symmetric combination;
/// throws std::invalid_argument otherwise.
GraphSum checked_coboundary(const GraphSum& s, const TypePolicy& policy);

/// Arrow-reversed coboundary t(d(t(s))), the operator of the descending
/// complex obtained by transposing every graph.
GraphSum transposed_coboundary(const GraphSum& s, const TypePolicy& policy);

}  // namespace kgc

#endif  // KGC_DIFFERENTIAL_HPP
