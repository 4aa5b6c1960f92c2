#ifndef KGC_TENSOR_TRACE_HPP
#define KGC_TENSOR_TRACE_HPP

#include <span>
#include <vector>

#include "kgc/rational.hpp"
#include "kgc/tensor/polyvector.hpp"

namespace kgc {

/// Dense square matrix, row-major.
using RationalMatrix = std::vector<std::vector<Coefficient>>;

/// tr(A_1 A_2 ... A_k). Throws std::invalid_argument on mismatched sizes.
Coefficient trace_of_product(std::span<const RationalMatrix> as);

/// sum over pi in S_k of sign(pi) tr(A_pi(1) ... A_pi(k)).
Coefficient antisym_trace(std::span<const RationalMatrix> as);

/// Evaluates the symmetrized wheel of length N = 2p+1 on N tensors through
/// Jacobian traces: for fixed leg indices every argument alpha_k becomes the
/// vector field xi_k = sum_u alpha_k^{u,L_k} d_u, and each relabeling of the
/// wheel contributes tr(J(xi_last) ... J(xi_first)) with J(xi)_{ab} = d_b xi^a.
/// This route never builds a graph; it must agree with
/// cochain_eval(wheel(N), args).
PolyVector wheel_trace_eval(int p, std::span<const PolyVector> args);

/// Same evaluation for a cycle of any length N >= 1.
PolyVector cycle_trace_eval(std::span<const PolyVector> args);

}  // namespace kgc

#endif  // KGC_TENSOR_TRACE_HPP
