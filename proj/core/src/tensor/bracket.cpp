#include "kgc/tensor/bracket.hpp"

#include <algorithm>
#include <stdexcept>

#include "kgc/signs.hpp"

namespace kgc {

PolyVector nabla(const PolyVector& alpha, const PolyVector& beta) {
  if (alpha.dimension() != beta.dimension()) throw std::invalid_argument("nabla: tensors over different dimensions");
  const int k = alpha.order();
  const int l = beta.order();
  PolyVector out(alpha.dimension(), std::max(k + l - 1, 0));
  if (k == 0) return out;
  // The full-component sum over all index tuples of alpha collapses onto the
  // sorted keys: both the components and the remaining wedge are
  // antisymmetric, and the k! orderings cancel the 1/k! normalization.
  for (const auto& [ikey, a] : alpha.components()) {
    for (int r = 0; r < k; ++r) {
      std::vector<int> rest;
      rest.reserve(static_cast<std::size_t>(k + l - 1));
      for (int s = 0; s < k; ++s) {
        if (s != r) rest.push_back(ikey[static_cast<std::size_t>(s)]);
      }
      const Coefficient sign = (r % 2 == 0) ? 1 : -1;
      for (const auto& [jkey, b] : beta.components()) {
        Polynomial db = b.derivative(ikey[static_cast<std::size_t>(r)]);
        if (db.is_zero()) continue;
        std::vector<int> tuple = rest;
        tuple.insert(tuple.end(), jkey.begin(), jkey.end());
        out.add_wedge(tuple, sign * (a * db));
      }
    }
  }
  return out;
}

PolyVector schouten(const PolyVector& alpha, const PolyVector& beta) {
  const long long da = alpha.degree();
  const long long db = beta.degree();
  PolyVector out = Coefficient(sign_of_power(da)) * nabla(alpha, beta);
  out -= Coefficient(sign_of_power((da + 1) * db)) * nabla(beta, alpha);
  return out;
}

PolyVector q_bracket(const PolyVector& alpha, const PolyVector& beta) {
  const long long oa = alpha.order();
  const long long ob = beta.order();
  PolyVector out = nabla(alpha, beta);
  out += Coefficient(sign_of_power(oa * ob)) * nabla(beta, alpha);
  return out;
}

bool is_ascending_tensor(const PolyVector& alpha) {
  int q = -1;
  for (const auto& [key, poly] : alpha.components()) {
    if (!poly.is_homogeneous()) throw std::domain_error("tensor coefficients are not homogeneous");
    const int degree = poly.degree();
    if (q >= 0 && degree != q) throw std::domain_error("tensor coefficients have different degrees");
    q = degree;
  }
  if (q < 0) return true;
  const int p = alpha.order();
  return p > 1 ? q < p : q <= p;
}

int graded_signature(std::span<const int> orders, std::span<const int> perm) {
  if (!is_permutation(perm) || perm.size() != orders.size()) {
    throw std::invalid_argument("graded_signature: not a permutation of the symbols");
  }
  return koszul_sign(orders, perm);
}

}  // namespace kgc
