#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace twistk {

using Int = boost::multiprecision::cpp_int;
using IntVec = std::vector<Int>;

// Dense row-major matrix over arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix scalar(std::size_t n, const Int& c);  // c * identity

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  bool operator==(const IntMatrix&) const = default;

  bool is_zero() const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntVec apply(const IntVec& x) const;  // A * x

  IntMatrix hstack(const IntMatrix& right) const;              // [A | B]
  IntMatrix column_range(std::size_t first, std::size_t last) const;
  IntMatrix row_range(std::size_t first, std::size_t last) const;
  IntVec column(std::size_t j) const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntVec vec_add(const IntVec& a, const IntVec& b);
IntVec vec_sub(const IntVec& a, const IntVec& b);
IntVec vec_scale(const Int& c, const IntVec& v);
bool vec_is_zero(const IntVec& v);
Int mod_floor(const Int& a, const Int& n);      // representative in [0, n)
IntVec vec_mod(const IntVec& v, const Int& n);

// Exact determinant of a square matrix (fraction-free elimination).
Int determinant(IntMatrix a);

// One whitespace-separated row per nonempty line.
IntMatrix parse_matrix_text(const std::string& text);
std::string matrix_to_text(const IntMatrix& m);

}  // namespace twistk
