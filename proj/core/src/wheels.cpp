#include "kgc/wheels.hpp"

#include <stdexcept>
#include <string>

#include "kgc/differential.hpp"
#include "kgc/json_io.hpp"

namespace kgc {

AerialGraph cycle_graph(int k) {
  if (k < 1) throw std::invalid_argument("cycle length must be at least 1, got " + std::to_string(k));
  std::vector<std::vector<Vertex>> deb(static_cast<std::size_t>(k));
  for (int v = 0; v < k; ++v) deb[static_cast<std::size_t>(v)] = {(v + 1) % k};
  return AerialGraph(std::move(deb));
}

GraphSum wheel(int k) { return symmetrize(cycle_graph(k)); }

GraphSum wheel_product(const std::vector<int>& lengths) {
  if (lengths.empty()) throw std::invalid_argument("wheel_product: no lengths");
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    if (lengths[k] < 1 || lengths[k] % 2 == 0) {
      throw std::invalid_argument("wheel_product: lengths must be odd and positive, got " + std::to_string(lengths[k]));
    }
    if (k > 0 && lengths[k] <= lengths[k - 1]) {
      throw std::invalid_argument("wheel_product: lengths must be strictly increasing");
    }
  }
  std::vector<std::vector<Vertex>> deb;
  int base = 0;
  for (int len : lengths) {
    for (int v = 0; v < len; ++v) deb.push_back({base + (v + 1) % len});
    base += len;
  }
  return symmetrize(AerialGraph(std::move(deb)));
}

Reduction reduce_to_simple(const GraphSum& delta, const TypePolicy& policy, bool require_cocycle) {
  if (require_cocycle && !coboundary(delta, policy).empty()) throw std::invalid_argument("reduce_to_simple: input is not a cocycle");
  Reduction out{delta, GraphSum(std::max(delta.vertex_count() - 1, 0)), 0, {}};
  while (!out.reduced.empty()) {
    const OrderWord word = sum_order(out.reduced);
    out.orders.push_back(word);
    if (!has_non_simple(word)) break;
    const Coefficient a = homotopy_coefficient(word);
    const GraphSum beta = (Coefficient(-1) / a) * symmetrize(homotopy(symbol(out.reduced)));
    GraphSum next = out.reduced - coboundary(beta, policy);
    if (!next.empty() && compare_orders(sum_order(next), word) >= 0) {
      throw std::runtime_error("reduce_to_simple: order did not decrease from " + order_to_string(word));
    }
    out.reduced = std::move(next);
    out.witness += beta;
    ++out.steps;
  }
  return out;
}

HomotopySides homotopy_identity_sides(const GraphSum& delta, const TypePolicy& policy) {
  if (delta.empty()) throw std::invalid_argument("homotopy_identity_sides: empty combination");
  const OrderWord word = sum_order(delta);
  const GraphSum sigma = symbol(delta);
  HomotopySides out{homotopy(order_slice(coboundary(delta, policy), order_plus_simple(word))), GraphSum(delta.vertex_count())};
  const GraphSum h_sigma = homotopy(sigma);
  if (!h_sigma.empty()) out.rhs = order_slice(coboundary(h_sigma, policy), word);
  out.rhs += homotopy_coefficient(word) * sigma;
  return out;
}

nlohmann::json reduction_to_json(const Reduction& r) {
  return {{"reduced", sum_to_json(r.reduced)}, {"witness", sum_to_json(r.witness)}, {"steps", r.steps}};
}

}  // namespace kgc
