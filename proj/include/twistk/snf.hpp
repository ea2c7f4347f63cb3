#pragma once

#include <optional>

#include "twistk/matrix.hpp"

namespace twistk {

// Smith normal form D = U * A * V with U, V unimodular and D diagonal with
// nonnegative entries d1 | d2 | ... | dr followed by zeros. Uinv and Vinv are
// the inverse transforms, tracked alongside for kernel/solve work.
struct SmithDecomposition {
  IntMatrix U, Uinv, D, V, Vinv;
  std::size_t rank = 0;

  IntVec invariant_factors() const;  // the nonzero diagonal entries
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Solve A x = b over Z given a precomputed decomposition of A.
std::optional<IntVec> solve_presolved(const SmithDecomposition& s, const IntVec& b);

// Solve A x = b over Z; nullopt is a definite "no integer solution".
std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b);

// Solve A x = b (mod n), n >= 2, via the integer system [A | n*I].
std::optional<IntVec> solve_mod(const IntMatrix& a, const IntVec& b, const Int& n);

// Columns form a lattice basis of ker(A) over Z (saturated: any integer
// kernel vector is an integer combination of them).
IntMatrix kernel_basis(const IntMatrix& a);

// Solve A X = B column by column; nullopt if any column has no solution.
std::optional<IntMatrix> solve_matrix(const IntMatrix& a, const IntMatrix& b);

}  // namespace twistk
