#ifndef KGC_TENSOR_RANDOM_HPP
#define KGC_TENSOR_RANDOM_HPP

#include <cstdint>
#include <random>

#include "kgc/tensor/polyvector.hpp"
#include "kgc/tensor/trace.hpp"

namespace kgc {

/// Random ascending p-tensor on R^d: one homogeneous degree q drawn from
/// 0..min(maxq, q_max) with q_max = p-1 for p > 1 and p otherwise (maxq < 0
/// means no extra cap), then small nonzero integer coefficients on a random
/// subset of the monomials of degree q. Deterministic in the generator state.
PolyVector random_ascending_tensor(int d, int p, int maxq, std::mt19937_64& rng);

/// Seeded convenience overload: same seed, same tensor.
PolyVector random_ascending_tensor(int d, int p, int maxq, std::uint64_t seed);

/// d x d matrix with integer entries drawn uniformly from lo..hi.
RationalMatrix random_integer_matrix(int d, int lo, int hi, std::mt19937_64& rng);

}  // namespace kgc

#endif  // KGC_TENSOR_RANDOM_HPP
