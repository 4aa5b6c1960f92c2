#include "kgc/signs.hpp"

#include <stdexcept>

namespace kgc {

int permutation_parity(std::span<const int> perm) {
  // Cycle decomposition: a cycle of length c contributes c-1 transpositions.
  std::vector<char> seen(perm.size(), 0);
  int transpositions = 0;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t k = start; !seen[k]; k = static_cast<std::size_t>(perm[k])) {
      seen[k] = 1;
      ++len;
    }
    transpositions += static_cast<int>(len) - 1;
  }
  return sign_of_power(transpositions);
}

int koszul_sign(std::span<const int> degrees, std::span<const int> order) {
  if (degrees.size() != order.size()) throw std::invalid_argument("koszul_sign: size mismatch");
  long long exponent = 0;
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      if (order[a] > order[b]) {
        exponent += static_cast<long long>(degrees[static_cast<std::size_t>(order[a])] % 2) *
                    (degrees[static_cast<std::size_t>(order[b])] % 2);
      }
    }
  }
  return sign_of_power(exponent);
}

int sort_with_sign(std::vector<int>& values) {
  int sign = 1;
  // Insertion sort; lists here are short.
  for (std::size_t i = 1; i < values.size(); ++i) {
    for (std::size_t k = i; k > 0 && values[k - 1] >= values[k]; --k) {
      if (values[k - 1] == values[k]) return 0;
      std::swap(values[k - 1], values[k]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i - 1] == values[i]) return 0;
  }
  return sign;
}

bool is_permutation(std::span<const int> perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 0 || static_cast<std::size_t>(v) >= perm.size() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

std::vector<int> inverse_permutation(std::span<const int> perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  return inv;
}

}  // namespace kgc
