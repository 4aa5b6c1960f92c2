#ifndef KGC_TENSOR_BRACKET_HPP
#define KGC_TENSOR_BRACKET_HPP

#include <span>

#include "kgc/tensor/polyvector.hpp"

namespace kgc {

/// nabla_alpha beta: contract one index of alpha against a derivative of
/// beta, summed over the position r of that index with sign (-1)^(r-1).
/// The result has order |alpha| + |beta| - 1 (zero when alpha is a function).
PolyVector nabla(const PolyVector& alpha, const PolyVector& beta);

/// [a, b]_S = (-1)^deg(a) nabla_a b - (-1)^((deg(a)+1) deg(b)) nabla_b a.
PolyVector schouten(const PolyVector& alpha, const PolyVector& beta);

/// Q(a, b) = (-1)^deg(a) [a, b]_S = nabla_a b + (-1)^(|a||b|) nabla_b a,
/// graded symmetric for the order grading |a| = p.
PolyVector q_bracket(const PolyVector& alpha, const PolyVector& beta);

/// Homogeneous coefficients of degree q with q < p if p > 1 and q <= p if
/// p <= 1. The zero tensor counts as ascending. Throws std::domain_error on
/// non-homogeneous coefficients.
bool is_ascending_tensor(const PolyVector& alpha);

/// Koszul sign of reordering symbols with the given orders: position k of
/// the new sequence holds the original symbol perm[k].
int graded_signature(std::span<const int> orders, std::span<const int> perm);

}  // namespace kgc

#endif  // KGC_TENSOR_BRACKET_HPP
