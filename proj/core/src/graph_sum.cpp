#include "kgc/graph_sum.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kgc {

GraphSum GraphSum::single(const AerialGraph& g, const Coefficient& c) {
  GraphSum s(g.size());
  s.add_term(g, c);
  return s;
}

Coefficient GraphSum::coefficient(const AerialGraph& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Coefficient(0) : it->second;
}

void GraphSum::accumulate(const AerialGraph& canonical, const Coefficient& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(canonical, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void GraphSum::add_term(const AerialGraph& g, const Coefficient& c) {
  if (g.size() != n_) {
    throw std::invalid_argument("graph with " + std::to_string(g.size()) + " vertices added to a sum over " +
                                std::to_string(n_));
  }
  auto canon = arrow_canonicalize(g);
  if (canon.is_zero) return;
  accumulate(canon.graph, canon.sign == 1 ? c : Coefficient(-c));
}

void GraphSum::check_compatible(const GraphSum& other) const {
  if (n_ != other.n_) {
    throw std::invalid_argument("graph sums over different vertex counts (" + std::to_string(n_) + " vs " +
                                std::to_string(other.n_) + ")");
  }
}

GraphSum& GraphSum::operator+=(const GraphSum& other) {
  check_compatible(other);
  for (const auto& [g, c] : other.terms_) accumulate(g, c);
  return *this;
}

GraphSum& GraphSum::operator-=(const GraphSum& other) {
  check_compatible(other);
  for (const auto& [g, c] : other.terms_) accumulate(g, -c);
  return *this;
}

GraphSum& GraphSum::operator*=(const Coefficient& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, coeff] : terms_) coeff *= c;
  return *this;
}

std::string GraphSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << format_coefficient(c) << "*" << g.to_string();
  }
  return os.str();
}

GraphSum operator+(GraphSum a, const GraphSum& b) { return a += b; }
GraphSum operator-(GraphSum a, const GraphSum& b) { return a -= b; }
GraphSum operator*(const Coefficient& c, GraphSum a) { return a *= c; }

GraphSum add(const GraphSum& a, const GraphSum& b) { return a + b; }
GraphSum scale(const Coefficient& c, const GraphSum& a) { return c * a; }

GraphSum symmetrize(const AerialGraph& g) {
  const int n = g.size();
  GraphSum result(n);
  auto canon = arrow_canonicalize(g);
  if (canon.is_zero) return result;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    auto image = relabel(canon.graph, perm);
    result.add_term(image.graph, image.sign * canon.sign);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

GraphSum symmetrize(const GraphSum& s) {
  GraphSum result(s.vertex_count());
  for (const auto& [g, c] : s.terms()) result += c * symmetrize(g);
  return result;
}

GraphSum relabel(const GraphSum& s, std::span<const int> perm) {
  GraphSum result(s.vertex_count());
  for (const auto& [g, c] : s.terms()) {
    auto image = relabel(g, perm);
    if (image.sign != 0) result.add_term(image.graph, image.sign * c);
  }
  return result;
}

bool is_symmetric(const GraphSum& s) {
  const int n = s.vertex_count();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (const auto& [g, c] : s.terms()) {
      auto image = relabel(g, perm);
      if (s.coefficient(image.graph) != image.sign * c) return false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

GraphSum transpose(const GraphSum& s) {
  GraphSum result(s.vertex_count());
  for (const auto& [g, c] : s.terms()) {
    auto t = transpose_signed(g);
    if (t.sign != 0) result.add_term(t.graph, t.sign * c);
  }
  return result;
}

std::map<int, GraphSum> split_by_arrow_count(const GraphSum& s) {
  std::map<int, GraphSum> parts;
  for (const auto& [g, c] : s.terms()) {
    auto [it, inserted] = parts.try_emplace(g.arrow_count(), s.vertex_count());
    it->second.add_term(g, c);
  }
  return parts;
}

}  // namespace kgc
