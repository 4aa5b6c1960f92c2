#ifndef KGC_COHOMOLOGY_HPP
#define KGC_COHOMOLOGY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kgc/graph.hpp"
#include "kgc/graph_sum.hpp"
#include "kgc/sparse_matrix.hpp"

namespace kgc {

/// Whether graphs with a (0,0) vertex belong to the complex.
enum class IsolatedMode { Include, Exclude };

/// Parses "include" | "exclude".
IsolatedMode parse_isolated_mode(const std::string& name);
std::string to_string(IsolatedMode mode);

/// One basis element per relabeling orbit that does not symmetrize to zero.
/// reps[c] is the symmetrization of keys[c] scaled so that keys[c] has
/// coefficient 1; keys are the smallest arrow-canonical relabelings.
struct BasisSlice {
  int n = 0;
  TypePolicy policy = TypePolicy::ascending();
  IsolatedMode mode = IsolatedMode::Include;
  std::vector<AerialGraph> keys;
  std::vector<GraphSum> reps;
  std::map<AerialGraph, int> index;

  int dimension() const { return static_cast<int>(reps.size()); }
};

/// Under Ascending and Descending every admissible graph is a disjoint union
/// of cycles and points, so orbits are enumerated by cycle type. Under
/// Unrestricted every graph with out-degrees at most policy.max_out_degree()
/// is visited. Throws std::invalid_argument for n < 0.
BasisSlice enumerate_basis(int n, const TypePolicy& policy, IsolatedMode mode);

/// Coordinates of a symmetric combination in the slice. Throws
/// std::invalid_argument when the sum is not in the span of the slice.
RationalVector express_in_basis(const BasisSlice& slice, const GraphSum& s);

GraphSum from_coordinates(const BasisSlice& slice, const RationalVector& x);

/// Matrix of the coboundary from `source` (columns) to `target` (rows).
/// Throws std::logic_error if some coboundary leaves the target span.
SparseRationalMatrix differential_matrix(const BasisSlice& source, const BasisSlice& target);

/// Matrix of the coboundary from the n-slice to the (n+1)-slice. Under
/// Unrestricted the target slice allows one more out-arrow per vertex.
SparseRationalMatrix differential_matrix(int n, const TypePolicy& policy, IsolatedMode mode);

struct CohomologyRow {
  int n = 0;
  int dim_basis = 0;
  /// Rank of the coboundary arriving at n (zero for n = 1).
  int rank_in = 0;
  /// Rank of the coboundary leaving n.
  int rank_out = 0;
  int betti = 0;
};

/// Throws std::invalid_argument for Unrestricted (the formula does not square
/// to zero there) and for n < 1.
CohomologyRow cohomology_row(int n, const TypePolicy& policy, IsolatedMode mode);
int cohomology_dim(int n, const TypePolicy& policy, IsolatedMode mode);

bool is_cocycle(const GraphSum& delta, const TypePolicy& policy);

/// Some beta with coboundary(beta) = delta, or nothing when delta is not a
/// coboundary in the given slices. The zero sum always has the zero witness.
std::optional<GraphSum> coboundary_witness(const GraphSum& delta, const TypePolicy& policy, IsolatedMode mode);

}  // namespace kgc

#endif  // KGC_COHOMOLOGY_HPP
