#include "kgc/sparse_matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kgc {

SparseRationalMatrix::SparseRationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be non-negative");
}

void SparseRationalMatrix::check(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw std::out_of_range("entry (" + std::to_string(r) + "," + std::to_string(c) + ") outside " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

Coefficient SparseRationalMatrix::at(int r, int c) const {
  check(r, c);
  auto it = entries_.find({r, c});
  return it == entries_.end() ? Coefficient(0) : it->second;
}

void SparseRationalMatrix::set(int r, int c, const Coefficient& v) {
  check(r, c);
  if (v == 0) {
    entries_.erase({r, c});
  } else {
    entries_[{r, c}] = v;
  }
}

void SparseRationalMatrix::add(int r, int c, const Coefficient& v) {
  check(r, c);
  if (v == 0) return;
  auto [it, inserted] = entries_.try_emplace({r, c}, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

SparseRationalMatrix SparseRationalMatrix::transposed() const {
  SparseRationalMatrix t(cols_, rows_);
  for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
  return t;
}

RationalVector multiply(const SparseRationalMatrix& m, const RationalVector& x) {
  if (static_cast<int>(x.size()) != m.cols()) throw std::invalid_argument("multiply: vector length differs from column count");
  RationalVector y(static_cast<std::size_t>(m.rows()), 0);
  for (const auto& [rc, v] : m.entries()) y[static_cast<std::size_t>(rc.first)] += v * x[static_cast<std::size_t>(rc.second)];
  return y;
}

SparseRationalMatrix multiply(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimensions differ");
  std::vector<std::vector<std::pair<int, Coefficient>>> b_rows(static_cast<std::size_t>(b.rows()));
  for (const auto& [rc, v] : b.entries()) b_rows[static_cast<std::size_t>(rc.first)].emplace_back(rc.second, v);
  SparseRationalMatrix c(a.rows(), b.cols());
  for (const auto& [rc, v] : a.entries()) {
    for (const auto& [col, w] : b_rows[static_cast<std::size_t>(rc.second)]) c.add(rc.first, col, v * w);
  }
  return c;
}

namespace {

using IntegerRow = std::map<int, mpz_class>;
using RationalRow = std::map<int, Coefficient>;

std::vector<RationalRow> rational_rows(const SparseRationalMatrix& m) {
  std::vector<RationalRow> rows(static_cast<std::size_t>(m.rows()));
  for (const auto& [rc, v] : m.entries()) rows[static_cast<std::size_t>(rc.first)][rc.second] = v;
  return rows;
}

/// Divides out the content so entries stay as small as possible.
void make_primitive(IntegerRow& row) {
  mpz_class g = 0;
  for (const auto& [c, v] : row) g = gcd(g, v);
  if (g > 1) {
    for (auto& [c, v] : row) v /= g;
  }
}

IntegerRow integer_row(const RationalRow& row) {
  mpz_class l = 1;
  for (const auto& [c, v] : row) l = lcm(l, mpz_class(v.get_den()));
  IntegerRow out;
  for (const auto& [c, v] : row) out[c] = v.get_num() * (l / v.get_den());
  make_primitive(out);
  return out;
}

/// Magnitude used to prefer small pivots.
mpz_class pivot_size(const Coefficient& v) { return abs(v.get_num()) * v.get_den(); }

/// In-place Gauss-Jordan elimination on the first `pivot_limit` columns.
/// Returns the pivot columns; row k of the result has its pivot (equal to 1)
/// at pivot_cols[k], and rows past the pivots only hold entries in columns
/// at or beyond pivot_limit.
std::vector<int> reduce(std::vector<RationalRow>& rows, int pivot_limit) {
  std::vector<int> pivot_cols;
  std::size_t next = 0;
  for (int c = 0; c < pivot_limit && next < rows.size(); ++c) {
    std::size_t best = rows.size();
    for (std::size_t r = next; r < rows.size(); ++r) {
      auto it = rows[r].find(c);
      if (it == rows[r].end()) continue;
      if (best == rows.size() || pivot_size(it->second) < pivot_size(rows[best].at(c))) best = r;
    }
    if (best == rows.size()) continue;
    std::swap(rows[next], rows[best]);
    RationalRow& p = rows[next];
    const Coefficient inv = 1 / p.at(c);
    for (auto& [col, v] : p) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == next) continue;
      auto it = rows[r].find(c);
      if (it == rows[r].end()) continue;
      const Coefficient factor = it->second;
      for (const auto& [col, v] : p) {
        Coefficient& target = rows[r][col];
        target -= factor * v;
        if (target == 0) rows[r].erase(col);
      }
    }
    pivot_cols.push_back(c);
    ++next;
  }
  return pivot_cols;
}

}  // namespace

int rank(const SparseRationalMatrix& m) {
  std::vector<IntegerRow> rows;
  for (const auto& row : rational_rows(m)) {
    if (!row.empty()) rows.push_back(integer_row(row));
  }
  int r = 0;
  while (!rows.empty()) {
    int lead = m.cols();
    for (const auto& row : rows) lead = std::min(lead, row.begin()->first);
    std::size_t pivot = rows.size();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (rows[k].begin()->first != lead) continue;
      if (pivot == rows.size() || abs(rows[k].begin()->second) < abs(rows[pivot].begin()->second)) pivot = k;
    }
    const IntegerRow p = std::move(rows[pivot]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
    const mpz_class pv = p.begin()->second;
    std::vector<IntegerRow> kept;
    for (auto& row : rows) {
      if (row.begin()->first == lead) {
        const mpz_class rv = row.begin()->second;
        IntegerRow combined;
        for (const auto& [c, v] : row) combined[c] = pv * v;
        for (const auto& [c, v] : p) {
          mpz_class& target = combined[c];
          target -= rv * v;
          if (target == 0) combined.erase(c);
        }
        if (combined.empty()) continue;
        make_primitive(combined);
        kept.push_back(std::move(combined));
      } else {
        kept.push_back(std::move(row));
      }
    }
    rows = std::move(kept);
    ++r;
  }
  return r;
}

std::vector<RationalVector> kernel_basis(const SparseRationalMatrix& m) {
  auto rows = rational_rows(m);
  const std::vector<int> pivots = reduce(rows, m.cols());
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<RationalVector> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RationalVector v(static_cast<std::size_t>(m.cols()), 0);
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      auto it = rows[k].find(f);
      if (it != rows[k].end()) v[static_cast<std::size_t>(pivots[k])] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const SparseRationalMatrix& m, const RationalVector& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::invalid_argument("solve: right-hand side length differs from row count");
  auto rows = rational_rows(m);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (b[r] != 0) rows[r][m.cols()] = b[r];
  }
  const std::vector<int> pivots = reduce(rows, m.cols());
  for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
    if (!rows[r].empty()) return std::nullopt;
  }
  RationalVector x(static_cast<std::size_t>(m.cols()), 0);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    auto it = rows[k].find(m.cols());
    if (it != rows[k].end()) x[static_cast<std::size_t>(pivots[k])] = it->second;
  }
  return x;
}

void write_matrix_text(std::ostream& out, const SparseRationalMatrix& m) {
  out << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
  for (const auto& [rc, v] : m.entries()) out << rc.first + 1 << ' ' << rc.second + 1 << ' ' << format_coefficient(v) << '\n';
}

std::string matrix_to_text(const SparseRationalMatrix& m) {
  std::ostringstream out;
  write_matrix_text(out, m);
  return out.str();
}

SparseRationalMatrix read_matrix_text(std::istream& in) {
  long long rows = 0, cols = 0, nnz = 0;
  if (!(in >> rows >> cols >> nnz) || rows < 0 || cols < 0 || nnz < 0) {
    throw std::invalid_argument("matrix text: expected header 'rows cols nnz'");
  }
  SparseRationalMatrix m(static_cast<int>(rows), static_cast<int>(cols));
  for (long long k = 0; k < nnz; ++k) {
    long long r = 0, c = 0;
    std::string value;
    if (!(in >> r >> c >> value)) throw std::invalid_argument("matrix text: entry " + std::to_string(k + 1) + " is incomplete");
    if (r < 1 || r > rows || c < 1 || c > cols) {
      throw std::invalid_argument("matrix text: entry " + std::to_string(k + 1) + " has an index out of range");
    }
    if (m.entries().count({static_cast<int>(r - 1), static_cast<int>(c - 1)})) {
      throw std::invalid_argument("matrix text: duplicate entry at " + std::to_string(r) + " " + std::to_string(c));
    }
    m.set(static_cast<int>(r - 1), static_cast<int>(c - 1), parse_coefficient(value));
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("matrix text: more entries than announced");
  return m;
}

SparseRationalMatrix matrix_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_matrix_text(in);
}

}  // namespace kgc
