#include "kgc/tensor/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kgc {

Polynomial Polynomial::constant(int d, const Coefficient& c) {
  Polynomial p(d);
  p.add_term(Monomial(static_cast<std::size_t>(d), 0), c);
  return p;
}

Polynomial Polynomial::variable(int d, int k) {
  if (k < 0 || k >= d) throw std::out_of_range("variable index out of range");
  Monomial m(static_cast<std::size_t>(d), 0);
  m[static_cast<std::size_t>(k)] = 1;
  return monomial(m, 1);
}

Polynomial Polynomial::monomial(const Monomial& exponents, const Coefficient& c) {
  Polynomial p(static_cast<int>(exponents.size()));
  p.add_term(exponents, c);
  return p;
}

void Polynomial::add_term(const Monomial& exponents, const Coefficient& c) {
  if (static_cast<int>(exponents.size()) != d_) throw std::invalid_argument("monomial has the wrong number of variables");
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("negative exponent");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(int k) const {
  if (k < 0 || k >= d_) throw std::out_of_range("derivative index out of range");
  Polynomial out(d_);
  for (const auto& [m, c] : terms_) {
    const int e = m[static_cast<std::size_t>(k)];
    if (e == 0) continue;
    Monomial lowered = m;
    --lowered[static_cast<std::size_t>(k)];
    out.terms_.emplace(std::move(lowered), c * e);
  }
  return out;
}

bool Polynomial::is_homogeneous() const {
  int degree = -1;
  for (const auto& [m, c] : terms_) {
    const int total = std::accumulate(m.begin(), m.end(), 0);
    if (degree >= 0 && total != degree) return false;
    degree = total;
  }
  return true;
}

int Polynomial::degree() const {
  int degree = -1;
  for (const auto& [m, c] : terms_) degree = std::max(degree, std::accumulate(m.begin(), m.end(), 0));
  return degree;
}

void Polynomial::check_dimension(const Polynomial& other) const {
  if (d_ != other.d_) throw std::invalid_argument("polynomials over different numbers of variables");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_dimension(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Coefficient& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_coefficient(c);
    for (std::size_t k = 0; k < m.size(); ++k) {
      if (m[k] == 0) continue;
      os << "*x" << k + 1;
      if (m[k] > 1) os << "^" << m[k];
    }
  }
  return os.str();
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(const Coefficient& c, Polynomial a) { return a *= c; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("polynomials over different numbers of variables");
  Polynomial out(a.dimension());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      Monomial m = ma;
      for (std::size_t k = 0; k < m.size(); ++k) m[k] += mb[k];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

}  // namespace kgc
