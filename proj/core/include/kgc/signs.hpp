#ifndef KGC_SIGNS_HPP
#define KGC_SIGNS_HPP

#include <span>
#include <vector>

namespace kgc {

/// Sign (+1/-1) of a permutation given in one-line notation over 0..k-1.
int permutation_parity(std::span<const int> perm);

/// Koszul sign of reordering graded symbols.
///
/// `degrees[a]` is the degree of the a-th symbol in the original order and
/// `order[k]` names the original symbol that ends up at position k. Each pair
/// of symbols whose relative order is inverted contributes
/// (-1)^(deg_a * deg_b).
int koszul_sign(std::span<const int> degrees, std::span<const int> order);

/// Sorts `values` ascending in place and returns the parity of the sorting
/// permutation. Returns 0 when two entries are equal (the antisymmetric
/// quantity indexed by `values` vanishes).
int sort_with_sign(std::vector<int>& values);

/// Returns true iff `perm` is a bijection of 0..k-1.
bool is_permutation(std::span<const int> perm);

std::vector<int> inverse_permutation(std::span<const int> perm);

inline int sign_of_power(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace kgc

#endif  // KGC_SIGNS_HPP
