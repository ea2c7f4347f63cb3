#include "twistk/matrix.hpp"

#include <sstream>

#include "twistk/error.hpp"

namespace twistk {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::scalar(std::size_t n, const Int& c) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : a_)
    if (x != 0) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  check_internal(cols_ == rhs.rows_, "matrix product dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& v = (*this)(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += v * rhs(k, j);
    }
  return out;
}

IntVec IntMatrix::apply(const IntVec& x) const {
  check_internal(x.size() == cols_, "matrix-vector dimension mismatch");
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0) out[i] += (*this)(i, j) * x[j];
  return out;
}

IntMatrix IntMatrix::hstack(const IntMatrix& right) const {
  check_internal(rows_ == right.rows_ || cols_ == 0 || right.cols_ == 0,
                 "hstack row mismatch");
  std::size_t rows = std::max(rows_, right.rows_);
  if (cols_ > 0 && right.cols_ > 0)
    check_internal(rows_ == right.rows_, "hstack row mismatch");
  IntMatrix out(rows, cols_ + right.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < right.rows_; ++i)
    for (std::size_t j = 0; j < right.cols_; ++j)
      out(i, cols_ + j) = right(i, j);
  return out;
}

IntMatrix IntMatrix::column_range(std::size_t first, std::size_t last) const {
  check_internal(first <= last && last <= cols_, "column range out of bounds");
  IntMatrix out(rows_, last - first);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = first; j < last; ++j) out(i, j - first) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::row_range(std::size_t first, std::size_t last) const {
  check_internal(first <= last && last <= rows_, "row range out of bounds");
  IntMatrix out(last - first, cols_);
  for (std::size_t i = first; i < last; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i - first, j) = (*this)(i, j);
  return out;
}

IntVec IntMatrix::column(std::size_t j) const {
  check_internal(j < cols_, "column index out of bounds");
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < cols_; ++k) (*this)(dst, k) += c * (*this)(src, k);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
  if (c == 0) return;
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, dst) += c * (*this)(k, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

IntVec vec_add(const IntVec& a, const IntVec& b) {
  check_internal(a.size() == b.size(), "vector sum dimension mismatch");
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  check_internal(a.size() == b.size(), "vector difference dimension mismatch");
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVec vec_scale(const Int& c, const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

bool vec_is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

Int mod_floor(const Int& a, const Int& n) {
  check_internal(n >= 1, "modulus must be positive");
  Int r = a % n;
  if (r < 0) r += n;
  return r;
}

IntVec vec_mod(const IntVec& v, const Int& n) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = mod_floor(v[i], n);
  return out;
}

// Bareiss fraction-free elimination with row pivoting.
Int determinant(IntMatrix a) {
  check_internal(a.rows() == a.cols(), "determinant needs a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

IntMatrix parse_matrix_text(const std::string& text) {
  std::vector<IntVec> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    IntVec row;
    std::string tok;
    while (ls >> tok) {
      try {
        row.emplace_back(tok);
      } catch (const std::exception&) {
        throw ValidationError("matrix entry is not an integer: '" + tok + "'");
      }
    }
    if (row.empty()) continue;
    if (!rows.empty())
      require(row.size() == rows.front().size(),
              "matrix rows have inconsistent lengths");
    rows.push_back(std::move(row));
  }
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::string matrix_to_text(const IntMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace twistk
