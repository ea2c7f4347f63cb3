#include "twistk/snf.hpp"

#include <algorithm>

#include "twistk/error.hpp"

namespace twistk {
namespace {

// Elementary operations applied to D with the transforms kept in sync:
// D = U * A * V stays true after every call.
struct Worker {
  IntMatrix D, U, Uinv, V, Vinv;

  explicit Worker(const IntMatrix& a)
      : D(a),
        U(IntMatrix::identity(a.rows())),
        Uinv(IntMatrix::identity(a.rows())),
        V(IntMatrix::identity(a.cols())),
        Vinv(IntMatrix::identity(a.cols())) {}

  void row_swap(std::size_t i, std::size_t j) {
    D.swap_rows(i, j);
    U.swap_rows(i, j);
    Uinv.swap_cols(i, j);
  }
  // row_dst += c * row_src
  void row_add(std::size_t dst, std::size_t src, const Int& c) {
    D.add_row_multiple(dst, src, c);
    U.add_row_multiple(dst, src, c);
    Uinv.add_col_multiple(src, dst, -c);
  }
  void row_negate(std::size_t i) {
    D.negate_row(i);
    U.negate_row(i);
    Uinv.negate_col(i);
  }
  void col_swap(std::size_t i, std::size_t j) {
    D.swap_cols(i, j);
    V.swap_cols(i, j);
    Vinv.swap_rows(i, j);
  }
  // col_dst += c * col_src
  void col_add(std::size_t dst, std::size_t src, const Int& c) {
    D.add_col_multiple(dst, src, c);
    V.add_col_multiple(dst, src, c);
    Vinv.add_row_multiple(src, dst, -c);
  }

  // Smallest nonzero |entry| in the submatrix D[s:, s:]; false if all zero.
  bool find_pivot(std::size_t s, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Int best;
    for (std::size_t i = s; i < D.rows(); ++i)
      for (std::size_t j = s; j < D.cols(); ++j) {
        if (D(i, j) == 0) continue;
        Int v = abs(D(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
        }
      }
    return found;
  }
};

}  // namespace

IntVec SmithDecomposition::invariant_factors() const {
  IntVec out;
  const std::size_t n = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (D(i, i) != 0) out.push_back(D(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  Worker w(a);
  const std::size_t m = a.rows(), n = a.cols();
  const std::size_t steps = std::min(m, n);

  for (std::size_t s = 0; s < steps; ++s) {
    std::size_t pi = s, pj = s;
    if (!w.find_pivot(s, pi, pj)) break;  // remaining submatrix is zero

    // Guard against a pivoting logic bug looping forever; the minimal-pivot
    // strategy strictly shrinks |pivot| or clears a line each round.
    std::size_t rounds = 0;
    while (true) {
      check_internal(++rounds < 100000 * (m + n + 2),
                     "smith normal form failed to converge");
      w.row_swap(s, pi);
      w.col_swap(s, pj);

      bool clean = true;
      for (std::size_t i = s + 1; i < m; ++i) {
        if (w.D(i, s) == 0) continue;
        Int q = w.D(i, s) / w.D(s, s);
        w.row_add(i, s, -q);
        if (w.D(i, s) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < n; ++j) {
        if (w.D(s, j) == 0) continue;
        Int q = w.D(s, j) / w.D(s, s);
        w.col_add(j, s, -q);
        if (w.D(s, j) != 0) clean = false;
      }
      if (!clean) {
        w.find_pivot(s, pi, pj);
        continue;
      }

      // Pivot is lone in its row and column; force it to divide the rest of
      // the submatrix so the diagonal comes out as a divisor chain.
      bool divides = true;
      for (std::size_t i = s + 1; i < m && divides; ++i)
        for (std::size_t j = s + 1; j < n && divides; ++j)
          if (w.D(i, j) % w.D(s, s) != 0) {
            w.row_add(s, i, 1);
            divides = false;
          }
      if (divides) break;
      w.find_pivot(s, pi, pj);
    }
    if (w.D(s, s) < 0) w.row_negate(s);
  }

  SmithDecomposition out;
  out.D = std::move(w.D);
  out.U = std::move(w.U);
  out.Uinv = std::move(w.Uinv);
  out.V = std::move(w.V);
  out.Vinv = std::move(w.Vinv);
  out.rank = out.invariant_factors().size();
  return out;
}

std::optional<IntVec> solve_presolved(const SmithDecomposition& s, const IntVec& b) {
  const std::size_t m = s.D.rows(), n = s.D.cols();
  check_internal(b.size() == m, "solve: right-hand side dimension mismatch");
  IntVec c = s.U.apply(b);
  IntVec y(n);
  const std::size_t k = std::min(m, n);
  for (std::size_t i = 0; i < k; ++i) {
    const Int& d = s.D(i, i);
    if (d == 0) continue;
    if (c[i] % d != 0) return std::nullopt;
    y[i] = c[i] / d;
    c[i] = 0;
  }
  // All rows not matched by a nonzero pivot must be consistent.
  for (std::size_t i = 0; i < m; ++i)
    if (c[i] != 0) return std::nullopt;
  return s.V.apply(y);
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
  require(b.size() == a.rows(), "solve: right-hand side dimension mismatch");
  return solve_presolved(smith_normal_form(a), b);
}

std::optional<IntVec> solve_mod(const IntMatrix& a, const IntVec& b, const Int& n) {
  require(n >= 2, "modulus must be at least 2");
  require(b.size() == a.rows(), "solve: right-hand side dimension mismatch");
  IntMatrix aug = a.hstack(IntMatrix::scalar(a.rows(), n));
  auto sol = solve_integer(aug, b);
  if (!sol) return std::nullopt;
  IntVec x(sol->begin(), sol->begin() + a.cols());
  return vec_mod(x, n);
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  return s.V.column_range(s.rank, a.cols());
}

std::optional<IntMatrix> solve_matrix(const IntMatrix& a, const IntMatrix& b) {
  check_internal(a.rows() == b.rows() || b.cols() == 0,
                 "solve_matrix dimension mismatch");
  SmithDecomposition s = smith_normal_form(a);
  IntMatrix x(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto col = solve_presolved(s, b.column(j));
    if (!col) return std::nullopt;
    for (std::size_t i = 0; i < a.cols(); ++i) x(i, j) = (*col)[i];
  }
  return x;
}

}  // namespace twistk
