#include "kgc/tensor/chevalley.hpp"

#include <stdexcept>

#include "kgc/signs.hpp"
#include "kgc/tensor/bracket.hpp"
#include "kgc/tensor/graph_operator.hpp"

namespace kgc {

PolyVector chevalley_coboundary(const Cochain& c, int cochain_degree, std::span<const PolyVector> args) {
  const int count = static_cast<int>(args.size());
  if (count == 0) throw std::invalid_argument("chevalley_coboundary: no arguments");
  const int d = args[0].dimension();
  std::vector<int> orders;
  for (const auto& a : args) {
    if (a.dimension() != d) throw std::invalid_argument("chevalley_coboundary: arguments over different dimensions");
    orders.push_back(a.order());
  }
  const long long deg_c = cochain_degree;
  PolyVector out(d, 0);

  for (int i = 0; i < count; ++i) {
    std::vector<PolyVector> rest;
    std::vector<int> rest_index;
    for (int k = 0; k < count; ++k) {
      if (k == i) continue;
      rest.push_back(args[static_cast<std::size_t>(k)]);
      rest_index.push_back(k);
    }
    const PolyVector value = c(rest);
    const PolyVector& alpha = args[static_cast<std::size_t>(i)];

    std::vector<int> front{i};
    front.insert(front.end(), rest_index.begin(), rest_index.end());
    const int s1 = koszul_sign(orders, front) * sign_of_power(deg_c * (orders[static_cast<std::size_t>(i)] - 1));
    out += Coefficient(s1) * nabla(alpha, value);

    std::vector<int> back = rest_index;
    back.push_back(i);
    const int s2 = koszul_sign(orders, back) * sign_of_power(deg_c);
    out += Coefficient(s2) * nabla(value, alpha);
  }

  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      if (i == j) continue;
      std::vector<int> order{i, j};
      std::vector<PolyVector> inner{nabla(args[static_cast<std::size_t>(i)], args[static_cast<std::size_t>(j)])};
      for (int k = 0; k < count; ++k) {
        if (k == i || k == j) continue;
        order.push_back(k);
        inner.push_back(args[static_cast<std::size_t>(k)]);
      }
      const int s3 = koszul_sign(orders, order);
      out -= Coefficient(s3) * c(inner);
    }
  }
  return out;
}

Cochain graph_cochain(const GraphSum& delta) {
  return [delta](std::span<const PolyVector> args) { return cochain_eval(delta, args); };
}

PolyVector chevalley_coboundary_eval(const GraphSum& delta, std::span<const PolyVector> args) {
  if (static_cast<int>(args.size()) != delta.vertex_count() + 1) {
    throw std::invalid_argument("chevalley_coboundary_eval: a sum on " + std::to_string(delta.vertex_count()) +
                                " vertices needs " + std::to_string(delta.vertex_count() + 1) + " arguments");
  }
  return chevalley_coboundary(graph_cochain(delta), uniform_arrow_count(delta), args);
}

}  // namespace kgc
