#include "kgc/tensor/graph_operator.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "kgc/signs.hpp"

namespace kgc {

int legs_sign(const LeggedGraph& g) {
  const int n = g.base.size();
  long long exponent = 0;
  long long later = 0;
  for (int i = n - 1; i >= 0; --i) {
    exponent += static_cast<long long>(g.legs[static_cast<std::size_t>(i)]) * later;
    later += g.base.out_degree(i);
  }
  return sign_of_power(exponent);
}

int legs_sign_by_shuffle(const LeggedGraph& g) {
  const int n = g.base.size();
  // Number the arrows by their place in the shuffled list (aerial first),
  // then read them off in the compatible order.
  std::vector<int> aerial_start(static_cast<std::size_t>(n));
  std::vector<int> leg_start(static_cast<std::size_t>(n));
  int next = 0;
  for (int i = 0; i < n; ++i) {
    aerial_start[static_cast<std::size_t>(i)] = next;
    next += g.base.out_degree(i);
  }
  for (int i = 0; i < n; ++i) {
    leg_start[static_cast<std::size_t>(i)] = next;
    next += g.legs[static_cast<std::size_t>(i)];
  }
  std::vector<int> compatible;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < g.base.out_degree(i); ++k) compatible.push_back(aerial_start[static_cast<std::size_t>(i)] + k);
    for (int k = 0; k < g.legs[static_cast<std::size_t>(i)]; ++k) compatible.push_back(leg_start[static_cast<std::size_t>(i)] + k);
  }
  return permutation_parity(compatible);
}

namespace {

struct Choice {
  std::vector<int> tuple;
  int key_index;
  int sign;
};

/// Every ordering of every nonzero key of `alpha`, with its parity.
std::vector<Choice> full_choices(const PolyVector& alpha) {
  std::vector<Choice> out;
  int key_index = 0;
  for (const auto& [key, poly] : alpha.components()) {
    std::vector<int> order(key.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      Choice c;
      c.key_index = key_index;
      c.sign = permutation_parity(order);
      for (int o : order) c.tuple.push_back(key[static_cast<std::size_t>(o)]);
      out.push_back(std::move(c));
    } while (std::next_permutation(order.begin(), order.end()));
    ++key_index;
  }
  return out;
}

Coefficient factorial(int k) {
  Coefficient f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

PolyVector b_gamma(const LeggedGraph& g, std::span<const PolyVector> args) {
  const int n = g.base.size();
  if (static_cast<int>(args.size()) != n || static_cast<int>(g.legs.size()) != n) {
    throw std::invalid_argument("b_gamma: need one argument and one leg count per vertex");
  }
  if (n == 0) throw std::invalid_argument("b_gamma: empty graph");
  const int d = args[0].dimension();
  int total_legs = 0;
  for (int i = 0; i < n; ++i) {
    const auto& alpha = args[static_cast<std::size_t>(i)];
    if (alpha.dimension() != d) throw std::invalid_argument("b_gamma: arguments over different dimensions");
    const int need = g.base.out_degree(i) + g.legs[static_cast<std::size_t>(i)];
    if (g.legs[static_cast<std::size_t>(i)] < 0 || alpha.order() != need) {
      throw std::invalid_argument("b_gamma: argument " + std::to_string(i + 1) + " has order " +
                                  std::to_string(alpha.order()) + ", graph needs " + std::to_string(need));
    }
    total_legs += g.legs[static_cast<std::size_t>(i)];
  }
  PolyVector out(d, total_legs);

  std::vector<std::vector<Choice>> choices;
  std::vector<std::vector<const Polynomial*>> keyed;
  Coefficient normalization = 1;
  for (int i = 0; i < n; ++i) {
    const auto& alpha = args[static_cast<std::size_t>(i)];
    if (alpha.is_zero()) return out;
    choices.push_back(full_choices(alpha));
    std::vector<const Polynomial*> polys;
    for (const auto& [key, poly] : alpha.components()) polys.push_back(&poly);
    keyed.push_back(std::move(polys));
    normalization /= factorial(g.legs[static_cast<std::size_t>(i)]);
  }

  // Incoming arrows per vertex as (source, slot).
  std::vector<std::vector<std::pair<int, int>>> incoming(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto& list = g.base.deb(v);
    for (int k = 0; k < static_cast<int>(list.size()); ++k) incoming[static_cast<std::size_t>(list[static_cast<std::size_t>(k)])].push_back({v, k});
  }

  std::map<std::tuple<int, int, std::vector<int>>, Polynomial> derivative_cache;
  auto differentiated = [&](int v, int key_index, std::vector<int> directions) -> const Polynomial& {
    std::sort(directions.begin(), directions.end());
    auto cache_key = std::make_tuple(v, key_index, directions);
    auto it = derivative_cache.find(cache_key);
    if (it != derivative_cache.end()) return it->second;
    Polynomial p = *keyed[static_cast<std::size_t>(v)][static_cast<std::size_t>(key_index)];
    for (int t : directions) {
      if (p.is_zero()) break;
      p = p.derivative(t);
    }
    return derivative_cache.emplace(std::move(cache_key), std::move(p)).first->second;
  };

  std::vector<int> pick(static_cast<std::size_t>(n), 0);
  while (true) {
    Polynomial product = Polynomial::constant(d, normalization);
    int sign = 1;
    for (int v = 0; v < n && !product.is_zero(); ++v) {
      const auto& c = choices[static_cast<std::size_t>(v)][static_cast<std::size_t>(pick[static_cast<std::size_t>(v)])];
      sign *= c.sign;
      std::vector<int> directions;
      for (const auto& [source, slot] : incoming[static_cast<std::size_t>(v)]) {
        const auto& sc = choices[static_cast<std::size_t>(source)][static_cast<std::size_t>(pick[static_cast<std::size_t>(source)])];
        directions.push_back(sc.tuple[static_cast<std::size_t>(slot)]);
      }
      const Polynomial& factor = differentiated(v, c.key_index, std::move(directions));
      product = product * factor;
    }
    if (!product.is_zero()) {
      std::vector<int> wedge;
      for (int v = 0; v < n; ++v) {
        const auto& c = choices[static_cast<std::size_t>(v)][static_cast<std::size_t>(pick[static_cast<std::size_t>(v)])];
        wedge.insert(wedge.end(), c.tuple.begin() + g.base.out_degree(v), c.tuple.end());
      }
      if (sign < 0) product *= -1;
      out.add_wedge(wedge, product);
    }
    int v = 0;
    while (v < n && ++pick[static_cast<std::size_t>(v)] == static_cast<int>(choices[static_cast<std::size_t>(v)].size())) {
      pick[static_cast<std::size_t>(v)] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return out;
}

PolyVector cochain_eval(const AerialGraph& g, std::span<const PolyVector> args) {
  const int n = g.size();
  if (static_cast<int>(args.size()) != n) {
    throw std::invalid_argument("cochain_eval: graph has " + std::to_string(n) + " vertices but " +
                                std::to_string(args.size()) + " arguments were given");
  }
  const int d = n ? args[0].dimension() : 0;
  LeggedGraph legged{g, std::vector<int>(static_cast<std::size_t>(n))};
  bool vanishes = false;
  for (int i = 0; i < n; ++i) {
    const auto& alpha = args[static_cast<std::size_t>(i)];
    if (alpha.dimension() != d) throw std::invalid_argument("cochain_eval: arguments over different dimensions");
    const int m = alpha.order() - g.out_degree(i);
    if (m < 0) vanishes = true;
    legged.legs[static_cast<std::size_t>(i)] = m;
  }
  if (vanishes) return PolyVector(d, 0);
  PolyVector value = b_gamma(legged, args);
  if (legs_sign(legged) < 0) value *= -1;
  return value;
}

PolyVector cochain_eval(const GraphSum& s, std::span<const PolyVector> args) {
  if (static_cast<int>(args.size()) != s.vertex_count()) {
    throw std::invalid_argument("cochain_eval: sum has " + std::to_string(s.vertex_count()) + " vertices but " +
                                std::to_string(args.size()) + " arguments were given");
  }
  PolyVector out(args.empty() ? 0 : args[0].dimension(), 0);
  for (const auto& [g, c] : s.terms()) out += c * cochain_eval(g, args);
  return out;
}

int uniform_arrow_count(const GraphSum& s) {
  int count = -1;
  for (const auto& [g, c] : s.terms()) {
    const int L = g.arrow_count();
    if (count >= 0 && L != count) throw std::invalid_argument("graph sum mixes arrow counts");
    count = L;
  }
  return std::max(count, 0);
}

}  // namespace kgc
