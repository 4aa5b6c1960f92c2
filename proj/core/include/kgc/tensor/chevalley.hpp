#ifndef KGC_TENSOR_CHEVALLEY_HPP
#define KGC_TENSOR_CHEVALLEY_HPP

#include <functional>
#include <span>

#include "kgc/graph_sum.hpp"
#include "kgc/tensor/polyvector.hpp"

namespace kgc {

/// An n-linear cochain on polyvector fields, symmetric for the order grading.
using Cochain = std::function<PolyVector(std::span<const PolyVector>)>;

/// Coboundary of the symmetrized Chevalley complex evaluated on
/// args = (alpha_0, ..., alpha_n):
///
///   sum_i  eps(i, 0..^i..n) (-1)^(|C|(|alpha_i|-1)) nabla_{alpha_i} C(..^i..)
///        + (-1)^|C| eps(0..^i..n, i) nabla_{C(..^i..)} alpha_i
///   - sum_{i != j} eps(i, j, 0..^i..^j..n) C(nabla_{alpha_i} alpha_j, ..^i..^j..)
///
/// where eps is the Koszul sign for the orders |alpha| and |C| is the
/// cochain degree parity given by `cochain_degree`.
PolyVector chevalley_coboundary(const Cochain& c, int cochain_degree, std::span<const PolyVector> args);

/// The cochain C_delta of a graph sum. Its degree is the common arrow count.
Cochain graph_cochain(const GraphSum& delta);

/// chevalley_coboundary(C_delta) on n + 1 arguments for delta on n vertices.
PolyVector chevalley_coboundary_eval(const GraphSum& delta, std::span<const PolyVector> args);

}  // namespace kgc

#endif  // KGC_TENSOR_CHEVALLEY_HPP
