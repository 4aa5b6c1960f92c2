#ifndef KGC_GRAPH_SUM_HPP
#define KGC_GRAPH_SUM_HPP

#include <map>
#include <string>

#include "kgc/graph.hpp"
#include "kgc/rational.hpp"

namespace kgc {

/*
 * Finite rational linear combination of arrow-canonical graphs sharing one
 * vertex count. Zero coefficients are never stored. Terms added through
 * add_term() are canonicalized on the way in, so keys are always
 * arrow-canonical and graphs with a repeated arrow vanish.
 */
class GraphSum {
 public:
  using Terms = std::map<AerialGraph, Coefficient>;

  explicit GraphSum(int n = 0) : n_(n) {}

  static GraphSum single(const AerialGraph& g, const Coefficient& c = 1);

  int vertex_count() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of an arrow-canonical graph (zero if absent).
  Coefficient coefficient(const AerialGraph& g) const;

  /// Adds c * g after arrow-canonicalization.
  void add_term(const AerialGraph& g, const Coefficient& c);

  GraphSum& operator+=(const GraphSum& other);
  GraphSum& operator-=(const GraphSum& other);
  GraphSum& operator*=(const Coefficient& c);

  bool operator==(const GraphSum& other) const { return n_ == other.n_ && terms_ == other.terms_; }

  std::string to_string() const;

 private:
  void accumulate(const AerialGraph& canonical, const Coefficient& c);
  void check_compatible(const GraphSum& other) const;

  int n_;
  Terms terms_;
};

GraphSum operator+(GraphSum a, const GraphSum& b);
GraphSum operator-(GraphSum a, const GraphSum& b);
GraphSum operator*(const Coefficient& c, GraphSum a);

GraphSum add(const GraphSum& a, const GraphSum& b);
GraphSum scale(const Coefficient& c, const GraphSum& a);

/// Graded symmetrization: the sum over all vertex relabelings, each weighted
/// by its relabel sign.
GraphSum symmetrize(const AerialGraph& g);
GraphSum symmetrize(const GraphSum& s);

/// Applies one relabeling to every term.
GraphSum relabel(const GraphSum& s, std::span<const int> perm);

/// True iff the coefficients obey a[relabel(g)] = sign * a[g] for every
/// relabeling.
bool is_symmetric(const GraphSum& s);

/// Reverses all arrows of every term, carrying the transpose sign.
GraphSum transpose(const GraphSum& s);

/// Splits a sum by total arrow count.
std::map<int, GraphSum> split_by_arrow_count(const GraphSum& s);

}  // namespace kgc

#endif  // KGC_GRAPH_SUM_HPP
