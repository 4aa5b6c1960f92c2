#ifndef KGC_TENSOR_POLYNOMIAL_HPP
#define KGC_TENSOR_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "kgc/rational.hpp"

namespace kgc {

/// Exponent vector (e_1, ..., e_d) of x^1..x^d.
using Monomial = std::vector<int>;

/// Polynomial in d variables with exact rational coefficients. Zero
/// coefficients are never stored.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Coefficient>;

  explicit Polynomial(int d = 0) : d_(d) {}

  static Polynomial constant(int d, const Coefficient& c);
  /// The coordinate function x^(k+1) (k is 0-based).
  static Polynomial variable(int d, int k);
  static Polynomial monomial(const Monomial& exponents, const Coefficient& c);

  int dimension() const { return d_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& exponents, const Coefficient& c);

  /// Partial derivative along x^(k+1).
  Polynomial derivative(int k) const;

  bool is_homogeneous() const;
  /// Total degree of the leading terms; -1 for the zero polynomial.
  int degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Coefficient& c);

  bool operator==(const Polynomial& other) const { return d_ == other.d_ && terms_ == other.terms_; }

  std::string to_string() const;

 private:
  void check_dimension(const Polynomial& other) const;

  int d_;
  Terms terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Coefficient& c, Polynomial a);

}  // namespace kgc

#endif  // KGC_TENSOR_POLYNOMIAL_HPP
