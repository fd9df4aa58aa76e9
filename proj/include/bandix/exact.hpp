#pragma once

#include <cstddef>

#include "bandix/band_matrix.hpp"
#include "bandix/op_counter.hpp"
#include "bandix/rational.hpp"
#include "bandix/rational_function.hpp"

namespace bandix {

struct ExactSolveResult {
    Vector<Rational> x;
    std::size_t pivot_substitutions = 0;
    OpCounter ops;  // scalar operations over rational functions
    double wall_seconds = 0.0;
};

/// Exact solve of a pentadiagonal system; only nonsingularity is required.
///
/// Elimination runs over rational functions in one indeterminate t. Each pivot
/// that vanishes identically is replaced by t, and the solution is the limit
/// t -> 0, which exists because the matrix is nonsingular. Throws
/// SingularMatrix when the exact determinant is zero.
ExactSolveResult exact_solve_spdm(const PentaMatrix<Rational>& a, ConstView<Rational> b);

/// Tridiagonal counterpart of exact_solve_spdm, built on the Thomas sweep.
ExactSolveResult exact_solve_stdm(const TriMatrix<Rational>& t, ConstView<Rational> b);

/// Exact determinant in O(N) operations: product of the band-elimination pivots
/// with the same zero-pivot substitution, evaluated at t = 0.
Rational exact_det_band(const PentaMatrix<Rational>& a, OpCounter& ops);
Rational exact_det_band(const TriMatrix<Rational>& t, OpCounter& ops);
Rational exact_det_band(const PentaMatrix<Rational>& a);
Rational exact_det_band(const TriMatrix<Rational>& t);

/// Lossless conversion of float data into exact rationals.
PentaMatrix<Rational> to_exact(const PentaMatrix<double>& a);
TriMatrix<Rational> to_exact(const TriMatrix<double>& t);
Vector<Rational> to_exact(ConstView<double> v);

/// Correctly rounded conversion back to floats.
PentaMatrix<double> to_float(const PentaMatrix<Rational>& a);
TriMatrix<double> to_float(const TriMatrix<Rational>& t);
Vector<double> to_float(ConstView<Rational> v);

}  // namespace bandix
