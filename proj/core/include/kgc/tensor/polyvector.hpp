#ifndef KGC_TENSOR_POLYVECTOR_HPP
#define KGC_TENSOR_POLYVECTOR_HPP

#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "kgc/tensor/polynomial.hpp"

namespace kgc {

/*
 * Antisymmetric contravariant p-tensor on R^d with polynomial coefficients,
 *
 *   alpha = sum over i_1 < ... < i_p of comps[(i_1..i_p)] d_{i_1} ^ ... ^ d_{i_p}.
 *
 * Index tuples are 0-based inside the library (1-based in JSON).
 *
 * The bracket and graph formulas sum over all index tuples, so they use the
 * full antisymmetric components
 *
 *   alpha^{t_1..t_p} = sign(t) * comps[sort(t)] / p!,
 *
 * which make sum_t alpha^t d_{t_1} ^ ... ^ d_{t_p} reproduce alpha. Every
 * wedge of basis vectors produced by a formula is folded back onto the
 * sorted key by add_wedge(), which is the single place where wedge signs
 * are taken.
 */
class PolyVector {
 public:
  using Key = std::vector<int>;
  using Components = std::map<Key, Polynomial>;

  PolyVector(int d = 0, int p = 0);

  /// The 0-tensor (function) f.
  static PolyVector function(const Polynomial& f);

  int dimension() const { return d_; }
  int order() const { return p_; }
  /// deg = p - 1 (the Lie grading of the Schouten bracket).
  int degree() const { return p_ - 1; }
  const Components& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }

  /// Coefficient on a strictly increasing key (zero if absent).
  Polynomial component(const Key& sorted) const;

  /// Adds c * d_{t_1} ^ ... ^ d_{t_p} for an arbitrary tuple t; a repeated
  /// index contributes nothing.
  void add_wedge(const std::vector<int>& tuple, const Polynomial& c);

  /// alpha^{t} as described above.
  Polynomial full_component(const std::vector<int>& tuple) const;

  PolyVector& operator+=(const PolyVector& other);
  PolyVector& operator-=(const PolyVector& other);
  PolyVector& operator*=(const Coefficient& c);

  /// Zero tensors compare equal whatever their nominal order.
  bool operator==(const PolyVector& other) const;

  std::string to_string() const;

 private:
  void check_compatible(const PolyVector& other) const;

  int d_;
  int p_;
  Components comps_;
};

PolyVector operator+(PolyVector a, const PolyVector& b);
PolyVector operator-(PolyVector a, const PolyVector& b);
PolyVector operator*(const Coefficient& c, PolyVector a);

/// {"d": 2, "p": 1, "comps": [{"idx": [1], "poly": [{"exp": [1,0], "coeff": "1/1"}]}]}
nlohmann::json polyvector_to_json(const PolyVector& v);
PolyVector polyvector_from_json(const nlohmann::json& j);

}  // namespace kgc

#endif  // KGC_TENSOR_POLYVECTOR_HPP
