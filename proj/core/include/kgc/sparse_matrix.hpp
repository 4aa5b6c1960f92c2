#ifndef KGC_SPARSE_MATRIX_HPP
#define KGC_SPARSE_MATRIX_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kgc/rational.hpp"

namespace kgc {

using RationalVector = std::vector<Coefficient>;

/// Exact sparse matrix over the rationals; zeros are never stored.
/// Indices are 0-based in the API and 1-based in the text format.
class SparseRationalMatrix {
 public:
  using Entries = std::map<std::pair<int, int>, Coefficient>;

  /// Throws std::invalid_argument on negative dimensions.
  SparseRationalMatrix(int rows = 0, int cols = 0);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Entries& entries() const { return entries_; }
  std::size_t nonzeros() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  /// Throws std::out_of_range for indices outside the matrix.
  Coefficient at(int r, int c) const;
  void set(int r, int c, const Coefficient& v);
  void add(int r, int c, const Coefficient& v);

  SparseRationalMatrix transposed() const;

  bool operator==(const SparseRationalMatrix& other) const = default;

 private:
  void check(int r, int c) const;

  int rows_;
  int cols_;
  Entries entries_;
};

/// Throws std::invalid_argument on a dimension mismatch.
RationalVector multiply(const SparseRationalMatrix& m, const RationalVector& x);
SparseRationalMatrix multiply(const SparseRationalMatrix& a, const SparseRationalMatrix& b);

/// Exact rank by fraction-free elimination on integer rows.
int rank(const SparseRationalMatrix& m);

/// Basis of the right null space, one vector per free column of the
/// reduced row echelon form.
std::vector<RationalVector> kernel_basis(const SparseRationalMatrix& m);

/// Some x with m x = b (free variables set to zero), or nothing when the
/// system is inconsistent. Throws std::invalid_argument if b has the wrong
/// length.
std::optional<RationalVector> solve(const SparseRationalMatrix& m, const RationalVector& b);

/// Coordinate text: "rows cols nnz" then one "row col p/q" line per entry.
void write_matrix_text(std::ostream& out, const SparseRationalMatrix& m);
std::string matrix_to_text(const SparseRationalMatrix& m);

/// Throws std::invalid_argument on malformed input.
SparseRationalMatrix read_matrix_text(std::istream& in);
SparseRationalMatrix matrix_from_text(const std::string& text);

}  // namespace kgc

#endif  // KGC_SPARSE_MATRIX_HPP
