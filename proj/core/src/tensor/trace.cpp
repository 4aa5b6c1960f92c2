#include "kgc/tensor/trace.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kgc/signs.hpp"

namespace kgc {

namespace {

std::size_t checked_size(std::span<const RationalMatrix> as) {
  if (as.empty()) throw std::invalid_argument("trace of an empty product");
  const std::size_t d = as[0].size();
  for (const auto& a : as) {
    if (a.size() != d) throw std::invalid_argument("matrices of different sizes");
    for (const auto& row : a) {
      if (row.size() != d) throw std::invalid_argument("matrix is not square");
    }
  }
  return d;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t d = a.size();
  RationalMatrix c(d, std::vector<Coefficient>(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b, int dim) {
  const std::size_t d = a.size();
  PolyMatrix c(d, std::vector<Polynomial>(d, Polynomial(dim)));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return c;
}

/// A vector field obtained from one argument with its leg slots frozen.
struct FrozenField {
  std::vector<int> legs;
  PolyMatrix jacobian;
};

/// All ordered choices of distinct leg indices for which the Jacobian of
/// xi^a = alpha^{a, legs} does not vanish. The frozen slot is contracted as an
/// interior product, so components carry 1/m! rather than 1/p!.
std::vector<FrozenField> frozen_fields(const PolyVector& alpha) {
  const int d = alpha.dimension();
  const int m = alpha.order() - 1;
  std::vector<FrozenField> out;
  if (m < 0) return out;
  std::vector<int> legs(static_cast<std::size_t>(m), 0);
  while (true) {
    std::vector<int> sorted = legs;
    if (sort_with_sign(sorted) != 0) {
      FrozenField field{legs, PolyMatrix(static_cast<std::size_t>(d), std::vector<Polynomial>(static_cast<std::size_t>(d), Polynomial(d)))};
      bool nonzero = false;
      for (int a = 0; a < d; ++a) {
        std::vector<int> tuple{a};
        tuple.insert(tuple.end(), legs.begin(), legs.end());
        const Polynomial xi = Coefficient(m + 1) * alpha.full_component(tuple);
        if (xi.is_zero()) continue;
        for (int b = 0; b < d; ++b) {
          field.jacobian[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = xi.derivative(b);
          nonzero = nonzero || !field.jacobian[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].is_zero();
        }
      }
      if (nonzero) out.push_back(std::move(field));
    }
    int k = 0;
    while (k < m && ++legs[static_cast<std::size_t>(k)] == d) {
      legs[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == m) break;
  }
  return out;
}

}  // namespace

Coefficient trace_of_product(std::span<const RationalMatrix> as) {
  const std::size_t d = checked_size(as);
  RationalMatrix product = as[0];
  for (std::size_t k = 1; k < as.size(); ++k) product = multiply(product, as[k]);
  Coefficient tr = 0;
  for (std::size_t i = 0; i < d; ++i) tr += product[i][i];
  return tr;
}

Coefficient antisym_trace(std::span<const RationalMatrix> as) {
  checked_size(as);
  std::vector<int> perm(as.size());
  std::iota(perm.begin(), perm.end(), 0);
  Coefficient total = 0;
  std::vector<RationalMatrix> ordered(as.size());
  do {
    for (std::size_t k = 0; k < perm.size(); ++k) ordered[k] = as[static_cast<std::size_t>(perm[k])];
    const Coefficient tr = trace_of_product(ordered);
    if (permutation_parity(perm) > 0) {
      total += tr;
    } else {
      total -= tr;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

PolyVector cycle_trace_eval(std::span<const PolyVector> args) {
  const int count = static_cast<int>(args.size());
  if (count == 0) throw std::invalid_argument("cycle_trace_eval: no arguments");
  const int d = args[0].dimension();
  std::vector<int> orders;
  std::vector<int> legs;
  int total_legs = 0;
  for (const auto& a : args) {
    if (a.dimension() != d) throw std::invalid_argument("cycle_trace_eval: arguments over different dimensions");
    orders.push_back(a.order());
    legs.push_back(a.order() - 1);
    total_legs += a.order() - 1;
  }
  if (std::any_of(legs.begin(), legs.end(), [](int m) { return m < 0; })) return PolyVector(d, 0);
  PolyVector out(d, total_legs);

  std::vector<std::vector<FrozenField>> fields;
  for (const auto& a : args) {
    fields.push_back(frozen_fields(a));
    if (fields.back().empty()) return out;
  }

  // Per relabeling sigma (vertex k of the cycle carries argument sigma[k]):
  // Koszul sign of the arguments, the legs sign of the relabeled cycle, and
  // the sign that restores the wedge of leg slots to argument order.
  std::vector<int> sigma(static_cast<std::size_t>(count));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::pair<std::vector<int>, int>> relabelings;
  do {
    long long legs_exponent = 0;
    for (int k = 0; k < count; ++k) {
      legs_exponent += static_cast<long long>(legs[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])]) * (count - 1 - k);
    }
    const int sign = koszul_sign(orders, sigma) * sign_of_power(legs_exponent) * koszul_sign(legs, sigma);
    relabelings.emplace_back(sigma, sign);
  } while (std::next_permutation(sigma.begin(), sigma.end()));

  std::vector<std::size_t> pick(static_cast<std::size_t>(count), 0);
  while (true) {
    Polynomial coefficient(d);
    for (const auto& [order, sign] : relabelings) {
      // tr(J(xi_{sigma(N)}) ... J(xi_{sigma(1)}))
      PolyMatrix product = fields[static_cast<std::size_t>(order.back())][pick[static_cast<std::size_t>(order.back())]].jacobian;
      for (int k = count - 2; k >= 0; --k) {
        const int arg = order[static_cast<std::size_t>(k)];
        product = multiply(product, fields[static_cast<std::size_t>(arg)][pick[static_cast<std::size_t>(arg)]].jacobian, d);
      }
      Polynomial tr(d);
      for (int a = 0; a < d; ++a) tr += product[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)];
      if (sign > 0) {
        coefficient += tr;
      } else {
        coefficient -= tr;
      }
    }
    if (!coefficient.is_zero()) {
      std::vector<int> wedge;
      for (int k = 0; k < count; ++k) {
        const auto& l = fields[static_cast<std::size_t>(k)][pick[static_cast<std::size_t>(k)]].legs;
        wedge.insert(wedge.end(), l.begin(), l.end());
      }
      out.add_wedge(wedge, coefficient);
    }
    int k = 0;
    while (k < count && ++pick[static_cast<std::size_t>(k)] == fields[static_cast<std::size_t>(k)].size()) {
      pick[static_cast<std::size_t>(k)] = 0;
      ++k;
    }
    if (k == count) break;
  }
  return out;
}

PolyVector wheel_trace_eval(int p, std::span<const PolyVector> args) {
  if (p < 0) throw std::invalid_argument("wheel_trace_eval: negative p");
  if (static_cast<int>(args.size()) != 2 * p + 1) {
    throw std::invalid_argument("wheel_trace_eval: need 2p+1 = " + std::to_string(2 * p + 1) + " arguments");
  }
  return cycle_trace_eval(args);
}

}  // namespace kgc
