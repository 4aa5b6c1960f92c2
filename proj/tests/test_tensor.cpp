#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "kgc/graph_sum.hpp"
#include "kgc/tensor/bracket.hpp"
#include "kgc/tensor/chevalley.hpp"
#include "kgc/tensor/graph_operator.hpp"
#include "kgc/tensor/random.hpp"
#include "kgc/tensor/trace.hpp"
#include "kgc/wheels.hpp"

using namespace kgc;

namespace {

Polynomial poly(int d, const std::vector<std::pair<Monomial, Coefficient>>& terms) {
  Polynomial p(d);
  for (const auto& [m, c] : terms) p.add_term(m, c);
  return p;
}

PolyVector tensor(int d, int p, const std::vector<std::pair<std::vector<int>, Polynomial>>& comps) {
  PolyVector v(d, p);
  for (const auto& [idx, c] : comps) v.add_wedge(idx, c);
  return v;
}

Polynomial x(int d, int k) { return Polynomial::variable(d, k); }
Polynomial one(int d) { return Polynomial::constant(d, 1); }

/// Sorts a tuple, returning 0 on a repeat and the permutation sign otherwise.
int sort_sign(std::vector<int>& t) {
  int sign = 1;
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = a + 1; b < t.size(); ++b) {
      if (t[a] == t[b]) return 0;
      if (t[a] > t[b]) sign = -sign;
    }
  }
  std::sort(t.begin(), t.end());
  return sign;
}

/// Antisymmetric component alpha^t = sign(t) comps[sort t] times `scale`.
Polynomial entry(const PolyVector& alpha, std::vector<int> t, const Coefficient& scale) {
  const int s = sort_sign(t);
  if (s == 0) return Polynomial(alpha.dimension());
  return Coefficient(s) * scale * alpha.component(t);
}

/// Accumulates c * e_{w_1} ^ ... ^ e_{w_k} into a map keyed by sorted tuples.
void add_wedge_oracle(std::map<std::vector<int>, Polynomial>& acc, std::vector<int> w, const Polynomial& c, int d) {
  const int s = sort_sign(w);
  if (s == 0 || c.is_zero()) return;
  auto it = acc.try_emplace(w, d).first;
  it->second += Coefficient(s) * c;
}

PolyVector from_oracle(int d, int p, const std::map<std::vector<int>, Polynomial>& acc) {
  PolyVector v(d, p);
  for (const auto& [k, c] : acc) {
    if (!c.is_zero()) v.add_wedge(k, c);
  }
  return v;
}

/// Calls f(t) for every tuple t in {0..d-1}^len.
template <class F>
void for_each_tuple(int d, int len, F&& f) {
  std::vector<int> t(static_cast<std::size_t>(len), 0);
  while (true) {
    f(t);
    int k = 0;
    while (k < len && ++t[static_cast<std::size_t>(k)] == d) t[static_cast<std::size_t>(k++)] = 0;
    if (k == len) return;
  }
}

Coefficient factorial(int n) {
  Coefficient f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Literal double sum for nabla with 1/p! full components.
PolyVector nabla_oracle(const PolyVector& alpha, const PolyVector& beta) {
  const int d = alpha.dimension(), k = alpha.order(), l = beta.order();
  std::map<std::vector<int>, Polynomial> acc;
  if (k == 0) return PolyVector(d, l - 1 < 0 ? 0 : l - 1);
  for_each_tuple(d, k, [&](const std::vector<int>& i) {
    const Polynomial a = entry(alpha, i, 1 / factorial(k));
    if (a.is_zero()) return;
    for_each_tuple(d, l, [&](const std::vector<int>& j) {
      const Polynomial b = entry(beta, j, 1 / factorial(l));
      if (b.is_zero()) return;
      for (int r = 0; r < k; ++r) {
        std::vector<int> w;
        for (int s = 0; s < k; ++s) {
          if (s != r) w.push_back(i[static_cast<std::size_t>(s)]);
        }
        w.insert(w.end(), j.begin(), j.end());
        const Coefficient sign = r % 2 == 0 ? 1 : -1;
        add_wedge_oracle(acc, w, sign * (a * b.derivative(i[static_cast<std::size_t>(r)])), d);
      }
    });
  });
  return from_oracle(d, k + l - 1, acc);
}

std::vector<PolyVector> random_tensors(int count, int d, int max_order, std::mt19937_64& rng) {
  std::vector<PolyVector> out;
  for (int k = 0; k < count; ++k) out.push_back(random_ascending_tensor(d, static_cast<int>(rng() % static_cast<unsigned>(max_order + 1)), -1, rng));
  return out;
}

RationalMatrix matrix(const std::vector<std::vector<int>>& rows) {
  RationalMatrix m;
  for (const auto& r : rows) {
    std::vector<Coefficient> row;
    for (int v : r) row.emplace_back(v);
    m.push_back(row);
  }
  return m;
}

/// Sum over all permutations of sign * tr(product), computed directly.
Coefficient antisym_trace_oracle(const std::vector<RationalMatrix>& as) {
  const std::size_t k = as.size(), d = as[0].size();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Coefficient total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
    }
    RationalMatrix p = as[static_cast<std::size_t>(perm[0])];
    for (std::size_t s = 1; s < k; ++s) {
      const RationalMatrix& m = as[static_cast<std::size_t>(perm[s])];
      RationalMatrix q(d, std::vector<Coefficient>(d, 0));
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          for (std::size_t c = 0; c < d; ++c) q[a][b] += p[a][c] * m[c][b];
        }
      }
      p = q;
    }
    Coefficient tr = 0;
    for (std::size_t a = 0; a < d; ++a) tr += p[a][a];
    total += inversions % 2 == 0 ? tr : Coefficient(-tr);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("polynomial basics") {
  const Polynomial p = poly(2, {{{2, 1}, 3}, {{0, 0}, -1}});
  CHECK(p.derivative(0) == poly(2, {{{1, 1}, 6}}));
  CHECK(p.derivative(1) == poly(2, {{{2, 0}, 3}}));
  CHECK_FALSE(p.is_homogeneous());
  CHECK(poly(2, {{{1, 1}, 1}, {{2, 0}, 2}}).degree() == 2);
  CHECK((x(2, 0) * x(2, 1)) == poly(2, {{{1, 1}, 1}}));
  CHECK_THROWS_AS(x(2, 0) + x(3, 0), std::invalid_argument);
}

TEST_CASE("polyvector components are antisymmetric") {
  PolyVector v(3, 2);
  v.add_wedge({2, 0}, x(3, 1));
  CHECK(v.component({0, 2}) == Coefficient(-1) * x(3, 1));
  CHECK(v.full_component({2, 0}) == Coefficient(1, 2) * x(3, 1));
  v.add_wedge({1, 1}, one(3));
  CHECK(v.components().size() == 1);
  const PolyVector back = polyvector_from_json(polyvector_to_json(v));
  CHECK(back == v);
  CHECK(polyvector_to_json(v).at("comps").at(0).at("idx") == nlohmann::json::array({1, 3}));
}

TEST_CASE("nabla examples") {
  const int d = 2;
  const PolyVector d1 = tensor(d, 1, {{{0}, one(d)}});
  const PolyVector d2 = tensor(d, 1, {{{1}, one(d)}});
  CHECK(nabla(d1, tensor(d, 1, {{{1}, x(d, 0)}})) == d2);
  CHECK(nabla(tensor(d, 1, {{{0}, x(d, 0)}}), d2).is_zero());

  // two r-terms: (1/2)(x2 d2 - x1 d1) each
  const PolyVector d12 = tensor(d, 2, {{{0, 1}, one(d)}});
  const PolyVector f = PolyVector::function(x(d, 0) * x(d, 1));
  CHECK(nabla(d12, f) == tensor(d, 1, {{{1}, x(d, 1)}, {{0}, Coefficient(-1) * x(d, 0)}}));
  CHECK_THROWS_AS(nabla(d1, PolyVector(3, 1)), std::invalid_argument);
}

TEST_CASE("nabla agrees with the literal all-tuples sum") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const auto args = random_tensors(2, d, 3, rng);
    CHECK(nabla(args[0], args[1]) == nabla_oracle(args[0], args[1]));
  }
}

TEST_CASE("schouten examples") {
  const int d = 2;
  const PolyVector d1 = tensor(d, 1, {{{0}, one(d)}});
  CHECK(schouten(d1, tensor(d, 1, {{{0}, x(d, 0)}})) == d1);
  CHECK(schouten(d1, tensor(d, 1, {{{1}, one(d)}})).is_zero());
  // vector fields: the Lie bracket X(Y) - Y(X)
  const PolyVector lhs = schouten(tensor(d, 1, {{{0}, x(d, 1)}}), tensor(d, 1, {{{1}, x(d, 0)}}));
  CHECK(lhs == tensor(d, 1, {{{1}, x(d, 1)}, {{0}, Coefficient(-1) * x(d, 0)}}));
}

TEST_CASE("schouten graded identities on random tensors") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const auto t = random_tensors(3, d, 3, rng);
    const int da = t[0].degree(), db = t[1].degree();
    const Coefficient koszul = (da * db) % 2 == 0 ? 1 : -1;
    const PolyVector ab = schouten(t[0], t[1]);
    CHECK(ab == Coefficient(-1) * koszul * schouten(t[1], t[0]));
    CHECK(schouten(t[0], schouten(t[1], t[2])) == schouten(ab, t[2]) + koszul * schouten(t[1], schouten(t[0], t[2])));
    const Coefficient q_swap = (t[0].order() * t[1].order()) % 2 == 0 ? 1 : -1;
    CHECK(q_bracket(t[0], t[1]) == q_swap * q_bracket(t[1], t[0]));
    CHECK(is_ascending_tensor(ab));
  }
}

TEST_CASE("is_ascending_tensor") {
  const int d = 2;
  CHECK(is_ascending_tensor(tensor(d, 1, {{{0}, x(d, 0)}})));
  CHECK_FALSE(is_ascending_tensor(tensor(d, 2, {{{0, 1}, x(d, 0) * x(d, 1)}})));
  CHECK(is_ascending_tensor(tensor(d, 2, {{{0, 1}, one(d)}})));
  CHECK_THROWS_AS(is_ascending_tensor(tensor(d, 1, {{{0}, x(d, 0) + one(d)}})), std::domain_error);
}

TEST_CASE("graded_signature") {
  const std::vector<int> swap = {1, 0};
  CHECK(graded_signature(std::vector<int>{2, 2}, swap) == 1);
  CHECK(graded_signature(std::vector<int>{1, 3}, swap) == -1);
  CHECK(graded_signature(std::vector<int>{1, 2}, swap) == 1);
  CHECK(graded_signature(std::vector<int>{1, 1, 1}, std::vector<int>{1, 2, 0}) == 1);
}

TEST_CASE("legs_sign") {
  CHECK(legs_sign(LeggedGraph{graph_from_one_based({{2}, {1}}), {0, 0}}) == 1);
  CHECK(legs_sign(LeggedGraph{graph_from_one_based({{1}}), {3}}) == 1);
  CHECK(legs_sign(LeggedGraph{graph_from_one_based({{2}, {1}}), {1, 0}}) == -1);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    std::vector<std::vector<int>> deb(static_cast<std::size_t>(n));
    std::vector<int> legs;
    for (auto& list : deb) {
      const int l = static_cast<int>(rng() % 3);
      for (int k = 0; k < l; ++k) list.push_back(static_cast<int>(rng() % static_cast<unsigned>(n)));
      legs.push_back(static_cast<int>(rng() % 3));
    }
    const LeggedGraph g{AerialGraph(deb), legs};
    CHECK(legs_sign(g) == legs_sign_by_shuffle(g));
  }
}

TEST_CASE("b_gamma reproduces the three-vertex bidifferential example") {
  // arrows 1->2, 1->3, 1->foot, 3->2, 3->foot; orders 3, 0, 2
  const LeggedGraph gamma{AerialGraph({{1, 2}, {}, {1}}), {1, 0, 1}};
  for (int d : {2, 3}) {
    PolyVector a1(d, 3);
    if (d == 3) a1.add_wedge({0, 1, 2}, Coefficient(2) * x(d, 2) + Coefficient(-1) * x(d, 0));
    const Polynomial f = x(d, 0) * x(d, 0) * x(d, 1) + Coefficient(3) * x(d, 1) * x(d, d - 1) * x(d, 0);
    const PolyVector a2 = PolyVector::function(f);
    PolyVector a3(d, 2);
    a3.add_wedge({0, 1}, x(d, 1) * x(d, 0));
    a3.add_wedge({1, d - 1}, Coefficient(5) * x(d, 0) * x(d, 0));
    const std::vector<PolyVector> args = {a1, a2, a3};

    std::map<std::vector<int>, Polynomial> acc;
    for_each_tuple(d, 5, [&](const std::vector<int>& t) {
      const Polynomial e1 = entry(a1, {t[0], t[1], t[2]}, 1);
      if (e1.is_zero()) return;
      const Polynomial e2 = f.derivative(t[0]).derivative(t[3]);
      const Polynomial e3 = entry(a3, {t[3], t[4]}, 1).derivative(t[1]);
      add_wedge_oracle(acc, {t[2], t[4]}, e1 * e2 * e3, d);
    });
    const PolyVector expected = from_oracle(d, 2, acc);
    const PolyVector got = b_gamma(gamma, args);
    CHECK(got == expected);
    if (d == 3) CHECK_FALSE(got.is_zero());

    // swapping the two aerial arrows of vertex 1 flips the sign
    const LeggedGraph swapped{AerialGraph({{2, 1}, {}, {1}}), {1, 0, 1}};
    CHECK(b_gamma(swapped, args) == Coefficient(-1) * got);
  }
  CHECK_THROWS_AS(b_gamma(gamma, std::vector<PolyVector>{PolyVector(2, 2), PolyVector(2, 0), PolyVector(2, 2)}),
                  std::invalid_argument);
}

TEST_CASE("b_gamma of a lone vertex with one leg is the identity") {
  const PolyVector v = tensor(2, 1, {{{0}, x(2, 1)}, {{1}, Coefficient(3) * x(2, 0)}});
  CHECK(b_gamma(LeggedGraph{AerialGraph::empty(1), {1}}, std::vector<PolyVector>{v}) == v);
  CHECK(cochain_eval(symmetrize(AerialGraph::empty(1)), std::vector<PolyVector>{v}) == v);
}

TEST_CASE("cochain of the 3-cycle matches the explicit triple sum") {
  // Legs of vertex i come from slots 2..k_i of alpha_i; the leg wedge of a
  // vertex with m legs is normalized by 1/m!.
  const AerialGraph delta({{1}, {2}, {0}});
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 12; ++trial) {
    const int d = 2 + trial % 2;
    std::vector<PolyVector> args;
    std::vector<int> k;
    for (int i = 0; i < 3; ++i) {
      k.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(d)));
      args.push_back(random_ascending_tensor(d, k.back(), -1, rng));
    }
    const int total = k[0] + k[1] + k[2];
    const Coefficient norm = 1 / (factorial(k[0] - 1) * factorial(k[1] - 1) * factorial(k[2] - 1));
    const Coefficient sign = (k[1] - 1) % 2 == 0 ? 1 : -1;
    std::map<std::vector<int>, Polynomial> acc;
    for_each_tuple(d, total, [&](const std::vector<int>& t) {
      const auto slice = [&](int from, int len) { return std::vector<int>(t.begin() + from, t.begin() + from + len); };
      const int s2 = k[0], s3 = k[0] + k[1];
      const Polynomial e1 = entry(args[0], slice(0, k[0]), 1).derivative(t[static_cast<std::size_t>(s3)]);
      if (e1.is_zero()) return;
      const Polynomial e2 = entry(args[1], slice(s2, k[1]), 1).derivative(t[0]);
      const Polynomial e3 = entry(args[2], slice(s3, k[2]), 1).derivative(t[static_cast<std::size_t>(s2)]);
      std::vector<int> legs;
      for (int a = 1; a < k[0]; ++a) legs.push_back(t[static_cast<std::size_t>(a)]);
      for (int a = s2 + 1; a < s3; ++a) legs.push_back(t[static_cast<std::size_t>(a)]);
      for (int a = s3 + 1; a < total; ++a) legs.push_back(t[static_cast<std::size_t>(a)]);
      add_wedge_oracle(acc, legs, sign * norm * (e1 * e2 * e3), d);
    });
    CHECK(cochain_eval(delta, args) == from_oracle(d, total - 3, acc));
  }
}

TEST_CASE("cochain of a symmetrization is the graded symmetrization of the cochain") {
  const AerialGraph delta({{1}, {2}, {0}});
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 12; ++trial) {
    const int d = 2 + trial % 2;
    const auto args = random_tensors(3, d, d, rng);
    std::vector<int> orders;
    for (const auto& a : args) orders.push_back(a.order());
    std::vector<int> perm = {0, 1, 2};
    PolyVector expected(d, std::max(orders[0] + orders[1] + orders[2] - 3, 0));
    bool any = false;
    do {
      std::vector<PolyVector> permuted;
      for (int p : perm) permuted.push_back(args[static_cast<std::size_t>(p)]);
      const PolyVector term = cochain_eval(delta, permuted);
      if (term.is_zero()) continue;
      const Coefficient s = graded_signature(orders, perm);
      expected = any ? expected + s * term : s * term;
      any = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    const PolyVector got = cochain_eval(wheel(3), args);
    if (!any) {
      CHECK(got.is_zero());
    } else {
      CHECK(got == expected);
    }
  }
}

TEST_CASE("cochain vanishes when an argument has too few slots") {
  const std::vector<PolyVector> args = {PolyVector::function(x(2, 0)), tensor(2, 1, {{{0}, one(2)}}),
                                        tensor(2, 1, {{{1}, one(2)}})};
  CHECK(cochain_eval(wheel(3), args).is_zero());
  CHECK(cochain_eval(GraphSum(3), args).is_zero());
}

TEST_CASE("linear vector fields reduce the 3-wheel to an antisymmetrized trace") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 2;
    std::vector<RationalMatrix> as;
    std::vector<PolyVector> args;
    for (int k = 0; k < 3; ++k) {
      as.push_back(random_integer_matrix(d, -3, 3, rng));
      PolyVector xi(d, 1);
      for (int a = 0; a < d; ++a) {
        Polynomial c(d);
        for (int b = 0; b < d; ++b) c += as.back()[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] * x(d, b);
        xi.add_wedge({a}, c);
      }
      args.push_back(xi);
    }
    // sum_sigma sign tr(A_s1 A_s3 A_s2) = -antisym_trace
    const PolyVector got = cochain_eval(wheel(3), args);
    CHECK(got == PolyVector::function(Polynomial::constant(d, -antisym_trace(as))));
    CHECK(wheel_trace_eval(1, args) == got);
  }
}

TEST_CASE("wheel trace evaluation agrees with the graph cochain") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 2;
    std::vector<PolyVector> args;
    for (int k = 0; k < 3; ++k) args.push_back(random_ascending_tensor(d, 1 + static_cast<int>(rng() % static_cast<unsigned>(d)), -1, rng));
    CHECK(wheel_trace_eval(1, args) == cochain_eval(wheel(3), args));
  }
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<PolyVector> args;
    for (int k = 0; k < 3; ++k) args.push_back(random_ascending_tensor(1, 1, -1, rng));
    CHECK(wheel_trace_eval(1, args).is_zero());
    CHECK(cochain_eval(wheel(3), args).is_zero());
  }
}

TEST_CASE("antisymmetrized traces") {
  CHECK(antisym_trace(std::vector<RationalMatrix>{matrix({{2}}), matrix({{3}}), matrix({{5}})}) == 0);

  const std::vector<RationalMatrix> e = {matrix({{0, 1}, {0, 0}}), matrix({{0, 0}, {1, 0}}), matrix({{1, 0}, {0, 0}})};
  const Coefficient value = antisym_trace(e);
  CHECK(value != 0);
  CHECK(value == antisym_trace_oracle(e));

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<RationalMatrix> five;
    for (int k = 0; k < 5; ++k) five.push_back(random_integer_matrix(2, -3, 3, rng));
    CHECK(antisym_trace(five) == 0);
    std::vector<RationalMatrix> three(five.begin(), five.begin() + 3);
    CHECK(antisym_trace(three) == antisym_trace_oracle(three));
  }
  CHECK_THROWS_AS(antisym_trace(std::vector<RationalMatrix>{matrix({{1}}), matrix({{1, 0}, {0, 1}})}), std::invalid_argument);
}

TEST_CASE("random ascending tensors") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const PolyVector v = random_ascending_tensor(1, 1, -1, seed);
    CHECK(v.order() == 1);
    for (const auto& [key, c] : v.components()) CHECK(c.degree() <= 1);
    CHECK(is_ascending_tensor(v));

    const PolyVector w = random_ascending_tensor(3, 2, -1, seed);
    for (const auto& [key, c] : w.components()) CHECK(c.degree() <= 1);
    CHECK(random_ascending_tensor(3, 2, -1, seed) == w);
  }
}

TEST_CASE("chevalley coboundary examples") {
  const int d = 2;
  const std::vector<PolyVector> args = {tensor(d, 1, {{{0}, x(d, 1)}}), tensor(d, 2, {{{0, 1}, x(d, 0)}})};
  CHECK(chevalley_coboundary_eval(GraphSum(1), args).is_zero());

  // one-vertex point: the three sums collapse to nabla_a b + (-1)^(|a||b|) nabla_b a
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = random_tensors(2, 2 + trial % 2, 3, rng);
    const Coefficient e = (t[0].order() * t[1].order()) % 2 == 0 ? 1 : -1;
    const PolyVector expected = nabla(t[0], t[1]) + e * nabla(t[1], t[0]);
    CHECK(chevalley_coboundary_eval(symmetrize(AerialGraph::empty(1)), t) == expected);
  }
  CHECK_THROWS_AS(chevalley_coboundary_eval(wheel(1), std::vector<PolyVector>{args[0]}), std::invalid_argument);
}

TEST_CASE("chevalley coboundary squares to zero on graph cochains") {
  std::mt19937_64 rng(61);
  for (const GraphSum& delta : {symmetrize(AerialGraph::empty(1)), wheel(1)}) {
    const int degree = uniform_arrow_count(delta);
    const Cochain c = graph_cochain(delta);
    const Cochain dc = [&](std::span<const PolyVector> a) { return chevalley_coboundary(c, degree, a); };
    for (int trial = 0; trial < 6; ++trial) {
      const auto t = random_tensors(delta.vertex_count() + 2, 2, 2, rng);
      CHECK(chevalley_coboundary(dc, degree + 1, t).is_zero());
    }
  }
}
