#ifndef KGC_GRAPH_HPP
#define KGC_GRAPH_HPP

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace kgc {

/*
 * Aerial Kontsevich graphs.
 *
 * A graph on n numbered vertices is stored as n ordered lists: deb(v) holds
 * the targets of the arrows leaving v, in their significant order. The
 * order of the lists (vertex numbering) and the order inside each list both
 * carry sign information: swapping two arrows of one list flips the sign of
 * the graph, and renumbering vertices picks up the Koszul sign of moving
 * whole lists past each other, weighted by their lengths.
 *
 * Indexing convention: vertices are 0-based everywhere in the C++ API.
 * The JSON and CLI surfaces are 1-based (see json_io.hpp).
 */

using Vertex = int;

class AerialGraph {
 public:
  AerialGraph() = default;

  /// Throws std::invalid_argument if a target lies outside 0..n-1.
  explicit AerialGraph(std::vector<std::vector<Vertex>> deb);

  /// Graph on `n` vertices with no arrows.
  static AerialGraph empty(int n);

  int size() const { return static_cast<int>(deb_.size()); }
  const std::vector<Vertex>& deb(Vertex v) const { return deb_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::vector<Vertex>>& lists() const { return deb_; }

  int out_degree(Vertex v) const { return static_cast<int>(deb(v).size()); }
  int in_degree(Vertex v) const;
  std::vector<int> out_degrees() const;
  std::vector<int> in_degrees() const;
  int arrow_count() const;

  std::string to_string() const;

  auto operator<=>(const AerialGraph&) const = default;
  bool operator==(const AerialGraph&) const = default;

 private:
  std::vector<std::vector<Vertex>> deb_;
};

/// In-degree f and out-degree l of one vertex.
struct VertexType {
  int f = 0;
  int l = 0;
  auto operator<=>(const VertexType&) const = default;
};

/// Throws std::out_of_range for a bad vertex.
VertexType vertex_type(const AerialGraph& g, Vertex v);

class TypePolicy {
 public:
  enum class Kind { Ascending, Descending, Unrestricted };

  static TypePolicy ascending() { return TypePolicy(Kind::Ascending, 0); }
  static TypePolicy descending() { return TypePolicy(Kind::Descending, 0); }
  /// `max_out` only bounds basis enumeration; every type is accepted.
  static TypePolicy unrestricted(int max_out);

  Kind kind() const { return kind_; }
  int max_out_degree() const { return max_out_; }
  bool accepts(VertexType t) const;
  std::string name() const;

  bool operator==(const TypePolicy&) const = default;

 private:
  TypePolicy(Kind k, int max_out) : kind_(k), max_out_(max_out) {}
  Kind kind_;
  int max_out_;
};

/// Parses "ascending" | "descending" | "unrestricted".
TypePolicy parse_policy(const std::string& name, int max_out = 2);

bool is_admissible(const AerialGraph& g, const TypePolicy& policy);

struct SignedGraph {
  AerialGraph graph;
  int sign = 1;
};

struct ArrowCanonical {
  AerialGraph graph;
  int sign = 1;
  bool is_zero = false;
};

/// Sorts every deb list ascending. `sign` is the parity of the combined
/// arrow permutation; `is_zero` flags a repeated target in some list.
ArrowCanonical arrow_canonicalize(const AerialGraph& g);

/// Graded sign of exchanging vertices i < j whose out-degrees are `out`.
int transposition_sign(std::span<const int> out, int i, int j);

/// Renames vertex v to perm[v]. The returned graph is arrow-canonical and the
/// sign combines the Koszul sign of moving the deb lists (weighted by their
/// lengths) with the canonicalization sign. A zero sign means the relabeled
/// graph has a repeated arrow.
SignedGraph relabel(const AerialGraph& g, std::span<const int> perm);

/// Reverses every arrow; arrow-canonical result.
AerialGraph transpose(const AerialGraph& g);

/// Reverses every arrow and reports the parity of the induced reordering of
/// the arrow list (grouped by source before, by new source after) together
/// with the canonicalization sign.
SignedGraph transpose_signed(const AerialGraph& g);

/// Orbit of a graph under graded relabeling. `representative` is the
/// lexicographically smallest arrow-canonical relabeling and
/// relabel(g, to_representative) == (representative, sign). `is_zero` is set
/// when some relabeling maps g to itself with sign -1, which makes the graded
/// symmetrization of the orbit vanish.
struct OrbitInfo {
  AerialGraph representative;
  std::vector<int> to_representative;
  int sign = 1;
  bool is_zero = false;
};

/// Brute force over all n! relabelings; intended for n <= 7.
OrbitInfo orbit_info(const AerialGraph& g);

/// Graph with one list per vertex given as 1-based targets.
AerialGraph graph_from_one_based(const std::vector<std::vector<int>>& deb);

}  // namespace kgc

#endif  // KGC_GRAPH_HPP
