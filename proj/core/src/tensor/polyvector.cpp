#include "kgc/tensor/polyvector.hpp"

#include <sstream>
#include <stdexcept>

#include "kgc/signs.hpp"

namespace kgc {

namespace {

Coefficient factorial(int k) {
  Coefficient f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

PolyVector::PolyVector(int d, int p) : d_(d), p_(p) {
  if (d < 0 || p < 0) throw std::invalid_argument("negative tensor dimension or order");
}

PolyVector PolyVector::function(const Polynomial& f) {
  PolyVector v(f.dimension(), 0);
  v.add_wedge({}, f);
  return v;
}

Polynomial PolyVector::component(const Key& sorted) const {
  auto it = comps_.find(sorted);
  return it == comps_.end() ? Polynomial(d_) : it->second;
}

void PolyVector::add_wedge(const std::vector<int>& tuple, const Polynomial& c) {
  if (static_cast<int>(tuple.size()) != p_) throw std::invalid_argument("wedge of the wrong order");
  if (c.dimension() != d_) throw std::invalid_argument("coefficient over the wrong number of variables");
  for (int t : tuple) {
    if (t < 0 || t >= d_) throw std::out_of_range("tensor index out of range");
  }
  if (c.is_zero()) return;
  Key key = tuple;
  const int sign = sort_with_sign(key);
  if (sign == 0) return;
  auto [it, inserted] = comps_.try_emplace(key, Polynomial(d_));
  if (sign > 0) {
    it->second += c;
  } else {
    it->second -= c;
  }
  if (it->second.is_zero()) comps_.erase(it);
}

Polynomial PolyVector::full_component(const std::vector<int>& tuple) const {
  Key key = tuple;
  const int sign = sort_with_sign(key);
  if (sign == 0) return Polynomial(d_);
  auto it = comps_.find(key);
  if (it == comps_.end()) return Polynomial(d_);
  Coefficient scale = Coefficient(sign) / factorial(p_);
  return scale * it->second;
}

void PolyVector::check_compatible(const PolyVector& other) const {
  if (d_ != other.d_) throw std::invalid_argument("tensors over different dimensions");
  if (p_ != other.p_ && !is_zero() && !other.is_zero()) {
    throw std::invalid_argument("adding tensors of different orders");
  }
}

PolyVector& PolyVector::operator+=(const PolyVector& other) {
  check_compatible(other);
  if (other.is_zero()) return *this;
  if (is_zero()) p_ = other.p_;
  for (const auto& [key, c] : other.comps_) add_wedge(key, c);
  return *this;
}

PolyVector& PolyVector::operator-=(const PolyVector& other) {
  check_compatible(other);
  if (other.is_zero()) return *this;
  if (is_zero()) p_ = other.p_;
  for (const auto& [key, c] : other.comps_) add_wedge(key, Coefficient(-1) * c);
  return *this;
}

PolyVector& PolyVector::operator*=(const Coefficient& c) {
  if (c == 0) {
    comps_.clear();
    return *this;
  }
  for (auto& [key, poly] : comps_) poly *= c;
  return *this;
}

bool PolyVector::operator==(const PolyVector& other) const {
  if (d_ != other.d_) return false;
  if (is_zero() && other.is_zero()) return true;
  return p_ == other.p_ && comps_ == other.comps_;
}

std::string PolyVector::to_string() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : comps_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")";
    for (std::size_t k = 0; k < key.size(); ++k) os << (k ? "^d" : " d") << key[k] + 1;
  }
  return os.str();
}

PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
PolyVector operator-(PolyVector a, const PolyVector& b) { return a -= b; }
PolyVector operator*(const Coefficient& c, PolyVector a) { return a *= c; }

nlohmann::json polyvector_to_json(const PolyVector& v) {
  using nlohmann::json;
  json comps = json::array();
  for (const auto& [key, poly] : v.components()) {
    json idx = json::array();
    for (int t : key) idx.push_back(t + 1);
    json terms = json::array();
    for (const auto& [m, c] : poly.terms()) terms.push_back(json{{"exp", m}, {"coeff", format_coefficient(c)}});
    comps.push_back(json{{"idx", std::move(idx)}, {"poly", std::move(terms)}});
  }
  return json{{"d", v.dimension()}, {"p", v.order()}, {"comps", std::move(comps)}};
}

PolyVector polyvector_from_json(const nlohmann::json& j) {
  auto fail = [](const std::string& what) { throw std::invalid_argument("polyvector JSON: " + what); };
  if (!j.is_object()) fail("expected an object");
  for (const char* key : {"d", "p", "comps"}) {
    if (!j.contains(key)) fail(std::string("missing field '") + key + "'");
  }
  if (!j.at("d").is_number_integer() || !j.at("p").is_number_integer()) fail("'d' and 'p' must be integers");
  const int d = j.at("d").get<int>();
  const int p = j.at("p").get<int>();
  if (d < 1 || p < 0) fail("need d >= 1 and p >= 0");
  PolyVector v(d, p);
  if (!j.at("comps").is_array()) fail("'comps' must be an array");
  for (const auto& comp : j.at("comps")) {
    if (!comp.is_object() || !comp.contains("idx") || !comp.contains("poly")) fail("component needs 'idx' and 'poly'");
    std::vector<int> tuple;
    for (const auto& t : comp.at("idx")) {
      if (!t.is_number_integer()) fail("indices must be integers");
      const int index = t.get<int>();
      if (index < 1 || index > d) fail("index " + std::to_string(index) + " outside 1.." + std::to_string(d));
      tuple.push_back(index - 1);
    }
    if (static_cast<int>(tuple.size()) != p) fail("index tuple of the wrong length");
    Polynomial poly(d);
    for (const auto& term : comp.at("poly")) {
      if (!term.is_object() || !term.contains("exp") || !term.contains("coeff")) fail("term needs 'exp' and 'coeff'");
      Monomial m;
      for (const auto& e : term.at("exp")) {
        if (!e.is_number_integer() || e.get<int>() < 0) fail("exponents must be nonnegative integers");
        m.push_back(e.get<int>());
      }
      if (static_cast<int>(m.size()) != d) fail("exponent vector of the wrong length");
      const auto& coeff = term.at("coeff");
      if (!coeff.is_string()) fail("coefficients must be strings like \"p/q\"");
      poly.add_term(m, parse_coefficient(coeff.get<std::string>()));
    }
    v.add_wedge(tuple, poly);
  }
  return v;
}

}  // namespace kgc
