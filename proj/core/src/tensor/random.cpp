#include "kgc/tensor/random.hpp"

#include <algorithm>
#include <stdexcept>

namespace kgc {

namespace {

/// Every exponent vector of total degree q in d variables.
void monomials_of_degree(int d, int q, Monomial& current, int k, std::vector<Monomial>& out) {
  if (k == d - 1) {
    current[static_cast<std::size_t>(k)] = q;
    out.push_back(current);
    return;
  }
  for (int e = q; e >= 0; --e) {
    current[static_cast<std::size_t>(k)] = e;
    monomials_of_degree(d, q - e, current, k + 1, out);
  }
}

/// Strictly increasing p-subsets of 0..d-1.
void index_keys(int d, int p, int start, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == p) {
    out.push_back(current);
    return;
  }
  for (int i = start; i < d; ++i) {
    current.push_back(i);
    index_keys(d, p, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

PolyVector random_ascending_tensor(int d, int p, int maxq, std::mt19937_64& rng) {
  if (d < 1 || p < 0) throw std::invalid_argument("random_ascending_tensor: need d >= 1 and p >= 0");
  int q_max = p > 1 ? p - 1 : p;
  if (maxq >= 0) q_max = std::min(q_max, maxq);
  const int q = std::uniform_int_distribution<int>(0, q_max)(rng);

  std::vector<Monomial> monomials;
  Monomial scratch(static_cast<std::size_t>(d), 0);
  monomials_of_degree(d, q, scratch, 0, monomials);
  std::vector<std::vector<int>> keys;
  std::vector<int> current;
  index_keys(d, p, 0, current, keys);

  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> value(1, 3);
  PolyVector alpha(d, p);
  for (const auto& key : keys) {
    Polynomial c(d);
    for (const auto& m : monomials) {
      if (coin(rng) == 0) continue;
      const int v = value(rng);
      c.add_term(m, coin(rng) ? v : -v);
    }
    alpha.add_wedge(key, c);
  }
  if (alpha.is_zero() && !keys.empty()) {
    const auto& key = keys[std::uniform_int_distribution<std::size_t>(0, keys.size() - 1)(rng)];
    const auto& m = monomials[std::uniform_int_distribution<std::size_t>(0, monomials.size() - 1)(rng)];
    alpha.add_wedge(key, Polynomial::monomial(m, value(rng)));
  }
  return alpha;
}

PolyVector random_ascending_tensor(int d, int p, int maxq, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_ascending_tensor(d, p, maxq, rng);
}

RationalMatrix random_integer_matrix(int d, int lo, int hi, std::mt19937_64& rng) {
  if (d < 1 || lo > hi) throw std::invalid_argument("random_integer_matrix: bad size or range");
  std::uniform_int_distribution<int> entry(lo, hi);
  RationalMatrix a(static_cast<std::size_t>(d), std::vector<Coefficient>(static_cast<std::size_t>(d), 0));
  for (auto& row : a) {
    for (auto& x : row) x = entry(rng);
  }
  return a;
}

}  // namespace kgc
