#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "kgc/graph.hpp"
#include "kgc/graph_sum.hpp"
#include "kgc/json_io.hpp"
#include "kgc/rational.hpp"

using namespace kgc;

namespace {

AerialGraph g1(const std::vector<std::vector<int>>& deb) { return graph_from_one_based(deb); }

int inversion_parity(const std::vector<int>& v) {
  int parity = 0;
  for (std::size_t a = 0; a < v.size(); ++a) {
    for (std::size_t b = a + 1; b < v.size(); ++b) parity ^= v[a] > v[b] ? 1 : 0;
  }
  return parity;
}

/// Relabeling computed from scratch: Koszul sign of the block move weighted
/// by out-degrees, then the parity of sorting every renamed deb list.
SignedGraph relabel_oracle(const AerialGraph& g, const std::vector<int>& perm) {
  const int n = g.size();
  int parity = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (perm[a] > perm[b]) parity ^= (g.out_degree(a) * g.out_degree(b)) & 1;
    }
  }
  std::vector<std::vector<int>> deb(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<int> renamed;
    for (int t : g.deb(v)) renamed.push_back(perm[t]);
    parity ^= inversion_parity(renamed);
    std::sort(renamed.begin(), renamed.end());
    if (std::adjacent_find(renamed.begin(), renamed.end()) != renamed.end()) return {AerialGraph(), 0};
    deb[static_cast<std::size_t>(perm[v])] = renamed;
  }
  return {AerialGraph(deb), parity ? -1 : 1};
}

/// Sum over all n! relabelings using the oracle above.
GraphSum symmetrize_oracle(const AerialGraph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.size()));
  std::iota(perm.begin(), perm.end(), 0);
  GraphSum out(g.size());
  do {
    const SignedGraph r = relabel_oracle(g, perm);
    if (r.sign != 0) out.add_term(r.graph, r.sign);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<AerialGraph> sample_graphs() {
  return {g1({{2}, {3}, {1}}), g1({{2, 3}, {3}, {}}), g1({{1}, {1, 3}, {2}}), g1({{2}, {1}, {4}, {3}}),
          g1({{2, 4}, {}, {1}, {3}}), g1({{1}, {}, {2, 3}})};
}

}  // namespace

TEST_CASE("coefficients parse and format as reduced fractions") {
  CHECK(format_coefficient(parse_coefficient("6/4")) == "3/2");
  CHECK(format_coefficient(parse_coefficient("-2")) == "-2/1");
  CHECK(format_coefficient(parse_coefficient("0/5")) == "0/1");
  CHECK_THROWS_AS(parse_coefficient("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_coefficient("abc"), std::invalid_argument);
}

TEST_CASE("vertex_type counts in- and out-arrows") {
  CHECK(vertex_type(g1({{2}, {3}, {1}}), 0) == VertexType{1, 1});
  CHECK(vertex_type(g1({{1}}), 0) == VertexType{1, 1});
  CHECK(vertex_type(AerialGraph({{1, 1}, {}}), 1) == VertexType{2, 0});
  CHECK_THROWS_AS(vertex_type(g1({{1}}), 1), std::out_of_range);
}

TEST_CASE("is_admissible under each policy") {
  const AerialGraph wheel3 = g1({{2}, {3}, {1}});
  CHECK(is_admissible(wheel3, TypePolicy::ascending()));
  // vertex 1 has type (2,2)
  const AerialGraph two_two = g1({{2, 3}, {1}, {1}});
  CHECK(vertex_type(two_two, 0) == VertexType{2, 2});
  CHECK_FALSE(is_admissible(two_two, TypePolicy::ascending()));
  CHECK(is_admissible(two_two, TypePolicy::unrestricted(2)));

  CHECK(TypePolicy::ascending().accepts({0, 2}));
  CHECK(TypePolicy::ascending().accepts({1, 1}));
  CHECK_FALSE(TypePolicy::ascending().accepts({1, 0}));
  CHECK(TypePolicy::descending().accepts({2, 0}));
  CHECK(TypePolicy::descending().accepts({1, 1}));
  CHECK_FALSE(TypePolicy::descending().accepts({0, 1}));
  CHECK_FALSE(TypePolicy::descending().accepts({2, 2}));
  CHECK_THROWS_AS(parse_policy("sideways"), std::invalid_argument);
}

TEST_CASE("arrow_canonicalize sorts lists and kills repeated arrows") {
  const ArrowCanonical c = arrow_canonicalize(g1({{3, 2}, {}, {}}));
  CHECK(c.graph == g1({{2, 3}, {}, {}}));
  CHECK(c.sign == -1);
  CHECK_FALSE(c.is_zero);

  CHECK(arrow_canonicalize(g1({{2, 2}, {}})).is_zero);

  const AerialGraph sorted = g1({{2, 3}, {1}, {}});
  CHECK(arrow_canonicalize(sorted).graph == sorted);
  CHECK(arrow_canonicalize(sorted).sign == 1);
}

TEST_CASE("arrow_canonicalize is idempotent and tracks arrow permutations") {
  std::mt19937_64 rng(5);
  for (const AerialGraph& g : sample_graphs()) {
    const ArrowCanonical once = arrow_canonicalize(g);
    const ArrowCanonical twice = arrow_canonicalize(once.graph);
    CHECK(twice.graph == once.graph);
    CHECK(twice.sign == 1);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::vector<int>> deb = g.lists();
      int parity = 0;
      for (auto& list : deb) {
        std::vector<int> order(list.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        parity ^= inversion_parity(order);
        std::vector<int> shuffled;
        for (int k : order) shuffled.push_back(list[static_cast<std::size_t>(k)]);
        list = shuffled;
      }
      const ArrowCanonical c = arrow_canonicalize(AerialGraph(deb));
      CHECK(c.graph == once.graph);
      CHECK(c.sign == (parity ? -1 : 1) * once.sign);
    }
  }
}

TEST_CASE("transposition_sign follows the graded formula") {
  const std::vector<int> a = {1, 1};
  CHECK(transposition_sign(a, 0, 1) == -1);
  const std::vector<int> b = {0, 5};
  CHECK(transposition_sign(b, 0, 1) == 1);
  const std::vector<int> c = {1, 2, 1};
  CHECK(transposition_sign(c, 0, 2) == -1);
}

TEST_CASE("relabel examples") {
  const AerialGraph wheel3 = g1({{2}, {3}, {1}});
  const std::vector<int> id = {0, 1, 2};
  CHECK(relabel(wheel3, id).graph == wheel3);
  CHECK(relabel(wheel3, id).sign == 1);

  const std::vector<int> rotate = {1, 2, 0};
  CHECK(relabel(wheel3, rotate).graph == wheel3);
  CHECK(relabel(wheel3, rotate).sign == 1);

  const AerialGraph two_cycle = g1({{2}, {1}});
  const std::vector<int> swap = {1, 0};
  CHECK(relabel(two_cycle, swap).graph == two_cycle);
  CHECK(relabel(two_cycle, swap).sign == -1);
}

TEST_CASE("relabel agrees with an independent sign computation and is a group action") {
  for (const AerialGraph& g : sample_graphs()) {
    const int n = g.size();
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::iota(pi.begin(), pi.end(), 0);
    do {
      const SignedGraph direct = relabel(g, pi);
      const SignedGraph oracle = relabel_oracle(g, pi);
      REQUIRE(direct.sign == oracle.sign);
      if (oracle.sign != 0) CHECK(direct.graph == oracle.graph);

      std::vector<int> rho(static_cast<std::size_t>(n));
      std::iota(rho.begin(), rho.end(), 0);
      do {
        // relabel by pi o rho = relabel by rho, then by pi
        std::vector<int> composed(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) composed[static_cast<std::size_t>(v)] = pi[static_cast<std::size_t>(rho[static_cast<std::size_t>(v)])];
        const SignedGraph first = relabel(g, rho);
        const SignedGraph second = relabel(first.graph, pi);
        const SignedGraph whole = relabel(g, composed);
        CHECK(whole.graph == second.graph);
        CHECK(whole.sign == first.sign * second.sign);
      } while (std::next_permutation(rho.begin(), rho.end()));
    } while (std::next_permutation(pi.begin(), pi.end()));
  }
}

TEST_CASE("symmetrize examples") {
  const AerialGraph delta = g1({{2}, {3}, {1}});
  const AerialGraph delta_prime = g1({{3}, {1}, {2}});
  GraphSum expected(3);
  expected.add_term(delta, 3);
  expected.add_term(delta_prime, -3);
  CHECK(symmetrize(delta) == expected);

  CHECK(symmetrize(g1({{2}, {1}})).empty());
  CHECK(symmetrize(g1({{1}})) == GraphSum::single(g1({{1}})));
}

TEST_CASE("symmetrize matches the brute-force sum and is relabeling invariant") {
  for (const AerialGraph& g : sample_graphs()) {
    const GraphSum s = symmetrize(g);
    CHECK(s == symmetrize_oracle(g));
    CHECK(is_symmetric(s));
    std::vector<int> pi(static_cast<std::size_t>(g.size()));
    std::iota(pi.begin(), pi.end(), 0);
    do {
      CHECK(relabel(s, pi) == s);
    } while (std::next_permutation(pi.begin(), pi.end()));
  }
  CHECK_FALSE(is_symmetric(GraphSum::single(g1({{2}, {3}, {1}}))));
}

TEST_CASE("even cycles symmetrize to zero") {
  CHECK(symmetrize(g1({{2}, {1}})).empty());
  CHECK(symmetrize(g1({{2}, {3}, {4}, {1}})).empty());
}

TEST_CASE("transpose reverses arrows") {
  CHECK(transpose(g1({{1}})) == g1({{1}}));
  CHECK(transpose(g1({{2}, {3}, {1}})) == g1({{3}, {1}, {2}}));
  CHECK(transpose(g1({{2}, {}})) == g1({{}, {1}}));
}

TEST_CASE("sum arithmetic") {
  const GraphSum r3 = symmetrize(g1({{2}, {3}, {1}}));
  CHECK((r3 + Coefficient(-1) * r3).empty());

  const GraphSum one = GraphSum::single(g1({{2}, {3}, {1}}));
  CHECK(scale(3, one).coefficient(g1({{2}, {3}, {1}})) == 3);

  const GraphSum other = GraphSum::single(g1({{3}, {1}, {2}}), 2);
  const GraphSum both = add(one, other);
  CHECK(both.size() == 2);
  CHECK(both.coefficient(g1({{3}, {1}, {2}})) == 2);

  CHECK_THROWS_AS(add(one, GraphSum::single(g1({{1}}))), std::invalid_argument);
}

TEST_CASE("add_term stores arrow-canonical keys with the sign absorbed") {
  GraphSum s(3);
  s.add_term(g1({{3, 2}, {}, {}}), 1);
  CHECK(s.coefficient(g1({{2, 3}, {}, {}})) == -1);
  s.add_term(g1({{2, 2}, {}, {}}), 5);
  CHECK(s.size() == 1);
}

TEST_CASE("ascending graphs are balanced unions of cycles and points") {
  // Every admissible graph with out-degrees up to 3 has f = l <= 1 everywhere.
  for (int n = 1; n <= 3; ++n) {
    std::vector<std::vector<int>> lists;
    for (int mask = 0; mask < (1 << n); ++mask) {
      std::vector<int> list;
      for (int t = 0; t < n; ++t) {
        if (mask & (1 << t)) list.push_back(t);
      }
      lists.push_back(list);
    }
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    int admissible = 0;
    while (true) {
      std::vector<std::vector<int>> deb;
      for (std::size_t k : pick) deb.push_back(lists[k]);
      const AerialGraph g(deb);
      if (is_admissible(g, TypePolicy::ascending())) {
        ++admissible;
        for (int v = 0; v < n; ++v) {
          const VertexType t = vertex_type(g, v);
          CHECK(t.f == t.l);
          CHECK(t.l <= 1);
        }
      }
      std::size_t k = 0;
      while (k < pick.size() && ++pick[k] == lists.size()) pick[k++] = 0;
      if (k == pick.size()) break;
    }
    CHECK(admissible > 0);
  }
}

TEST_CASE("JSON round trip uses 1-based vertices") {
  const AerialGraph g = g1({{2, 3}, {1}, {}});
  const nlohmann::json j = graph_to_json(g);
  CHECK(j.at("deb").at(0) == nlohmann::json::array({2, 3}));
  CHECK(graph_from_json(j) == g);

  const GraphSum r3 = symmetrize(g1({{2}, {3}, {1}}));
  CHECK(sum_from_json(sum_to_json(r3)) == r3);
  CHECK(sum_from_json(sum_to_json(GraphSum(4))) == GraphSum(4));
}

TEST_CASE("JSON readers reject malformed input") {
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n": 2, "deb": [[3], []]})")), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"n": 2, "deb": [[1]]})")), std::invalid_argument);
  CHECK_THROWS_AS(sum_from_json(nlohmann::json::parse(
                      R"({"terms": [{"coeff": "1/1", "graph": {"n": 1, "deb": [[1]]}},
                                    {"coeff": "1/1", "graph": {"n": 2, "deb": [[2], []]}}]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_json_text("{nope"), std::invalid_argument);
}
