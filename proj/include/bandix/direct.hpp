#pragma once

#include <cstddef>

#include "bandix/band_lu.hpp"
#include "bandix/solve_report.hpp"

namespace bandix {

namespace detail {

template <Field S>
double residual_norm_of(const PentaMatrix<S>& a, ConstView<S> x, ConstView<S> b) {
    if constexpr (OrderedField<S>) {
        const auto r = residual(a, x, b);
        return to_double(inf_norm<S>(r));
    } else {
        return 0.0;
    }
}

template <Field S>
double residual_norm_of(const TriMatrix<S>& t, ConstView<S> x, ConstView<S> b) {
    if constexpr (OrderedField<S>) {
        const auto r = residual(t, x, b);
        return to_double(inf_norm<S>(r));
    } else {
        return 0.0;
    }
}

}  // namespace detail

/// Banded LU + forward/backward substitution, 19N-29 operations.
template <Field S>
SolveReport<S> solve_npdm(const PentaMatrix<S>& a, ConstView<S> b) {
    detail::require_length("solve_npdm b", a.n(), b.size());
    SolveReport<S> rep;
    Stopwatch clock;
    const auto lu = lu_penta(a, rep.ops);
    const auto y = forward_sub(lu, b, rep.ops);
    rep.x = backward_sub(lu, ConstView<S>(y), rep.ops);
    rep.wall_seconds = clock.seconds();
    rep.residual_inf = detail::residual_norm_of(a, ConstView<S>(rep.x), b);
    return rep;
}

/// Gaussian elimination that skips the second-subdiagonal work of every row
/// whose input entry there is a structural zero.
///
/// Pivots are inverted once and reused by the row multipliers and by the back
/// substitution. Cost: 13N - 15 + 7 K_sub, with K_sub the number of rows
/// holding a nonzero second-subdiagonal entry. The second superdiagonal is
/// carried through the elimination unconditionally.
template <Field S>
SolveReport<S> solve_mnpdm(const PentaMatrix<S>& a, ConstView<S> rhs) {
    const std::size_t n = a.n();
    detail::require_length("solve_mnpdm b", n, rhs.size());
    SolveReport<S> rep;
    auto& ops = rep.ops;
    Stopwatch clock;

    const auto e = a.sub2();
    const auto d = a.sup2();
    Vector<S> sub(a.sub1().begin(), a.sub1().end());
    Vector<S> piv(a.main().begin(), a.main().end());
    Vector<S> sup(a.sup1().begin(), a.sup1().end());
    Vector<S> f(rhs.begin(), rhs.end());
    Vector<S> inv(n);

    for (std::size_t i = 0; i < n; ++i) {
        if (i >= 2 && !is_zero(e[i - 2])) {
            const S m = e[i - 2] * inv[i - 2];
            sub[i - 1] = sub[i - 1] - m * sup[i - 2];
            piv[i] = piv[i] - m * d[i - 2];
            f[i] = f[i] - m * f[i - 2];
            ops.mul();
            ops.axpy(3);
        }
        if (i >= 1) {
            const S m = sub[i - 1] * inv[i - 1];
            piv[i] = piv[i] - m * sup[i - 1];
            f[i] = f[i] - m * f[i - 1];
            ops.mul();
            ops.axpy(2);
            if (i + 1 < n) {
                sup[i] = sup[i] - m * d[i - 1];
                ops.axpy();
            }
        }
        if (is_zero(piv[i])) {
            throw ZeroPivot(i);
        }
        inv[i] = S(1) / piv[i];
        ops.div();
    }

    Vector<S>& x = rep.x;
    x.assign(n, S(0));
    x[n - 1] = f[n - 1] * inv[n - 1];
    x[n - 2] = (f[n - 2] - sup[n - 2] * x[n - 1]) * inv[n - 2];
    ops.mul(2);
    ops.axpy();
    for (std::size_t k = n - 2; k-- > 0;) {
        x[k] = (f[k] - sup[k] * x[k + 1] - d[k] * x[k + 2]) * inv[k];
        ops.axpy(2);
        ops.mul();
    }
    rep.wall_seconds = clock.seconds();
    rep.residual_inf = detail::residual_norm_of(a, ConstView<S>(rep.x), rhs);
    return rep;
}

/// Thomas sweep in coefficient form x_i = alpha_i x_{i+1} + beta_i; 9N-8 operations.
///
/// The denominators b_i + a_i alpha_{i-1} are the LU pivots; `on_zero_pivot`
/// decides what happens when one vanishes exactly. `pivots`, if given,
/// receives them.
template <Field S, class ZeroPivotPolicy = ThrowOnZeroPivot<S>>
Vector<S> thomas(const TriMatrix<S>& t, ConstView<S> rhs, OpCounter& ops,
                 ZeroPivotPolicy&& on_zero_pivot = {}, Vector<S>* pivots = nullptr) {
    const std::size_t n = t.n();
    detail::require_length("thomas rhs", n, rhs.size());
    const auto a = t.sub1();
    const auto b = t.main();
    const auto c = t.sup1();
    Vector<S> alpha(n - 1);
    Vector<S> beta(n);
    if (pivots != nullptr) {
        pivots->assign(n, S(0));
    }

    auto checked = [&](S p, std::size_t i) {
        if (is_zero(p)) {
            p = on_zero_pivot(i);
        }
        if (pivots != nullptr) {
            (*pivots)[i] = p;
        }
        return p;
    };

    {
        const S den = checked(b[0], 0);
        alpha[0] = -c[0] / den;
        beta[0] = rhs[0] / den;
        ops.sub();
        ops.div(2);
    }
    for (std::size_t i = 1; i < n; ++i) {
        const S den = checked(b[i] + a[i - 1] * alpha[i - 1], i);
        ops.mul();
        ops.add();
        if (i + 1 < n) {
            alpha[i] = -c[i] / den;
            ops.sub();
            ops.div();
        }
        beta[i] = (rhs[i] - a[i - 1] * beta[i - 1]) / den;
        ops.axpy();
        ops.div();
    }

    Vector<S> x(n);
    x[n - 1] = beta[n - 1];
    for (std::size_t k = n - 1; k-- > 0;) {
        x[k] = alpha[k] * x[k + 1] + beta[k];
        ops.mul();
        ops.add();
    }
    return x;
}

template <Field S>
SolveReport<S> solve_ntdm(const TriMatrix<S>& t, ConstView<S> b) {
    detail::require_length("solve_ntdm b", t.n(), b.size());
    SolveReport<S> rep;
    Stopwatch clock;
    rep.x = thomas(t, b, rep.ops);
    rep.wall_seconds = clock.seconds();
    rep.residual_inf = detail::residual_norm_of(t, ConstView<S>(rep.x), b);
    return rep;
}

template <Field S>
struct TriReduction {
    TriMatrix<S> matrix;
    Vector<S> rhs;
    OpCounter ops;
};

/// Row-reduces a pentadiagonal system to an equivalent tridiagonal one.
///
/// Second-subdiagonal entries are eliminated in ascending row order against
/// row i-1, then second-superdiagonal entries in descending order against row
/// i+1, so every step only reads rows that are already reduced. Rows whose
/// outer entries are zero are left alone. At most 9 operations per eliminated
/// lower entry and 7 per upper entry.
template <Field S>
TriReduction<S> pd_to_td(const PentaMatrix<S>& a, ConstView<S> rhs) {
    const std::size_t n = a.n();
    detail::require_length("pd_to_td b", n, rhs.size());
    const auto e = a.sub2();
    const auto d = a.sup2();
    Vector<S> sub(a.sub1().begin(), a.sub1().end());
    Vector<S> dia(a.main().begin(), a.main().end());
    Vector<S> sup(a.sup1().begin(), a.sup1().end());
    Vector<S> f(rhs.begin(), rhs.end());
    OpCounter ops;

    for (std::size_t i = 2; i < n; ++i) {
        if (is_zero(e[i - 2])) {
            continue;
        }
        // row i-1 holds A(i-1, i-2) in sub[i-2]
        const S& p = sub[i - 2];
        if (is_zero(p)) {
            throw ReductionPivotZero(i);
        }
        const S m = e[i - 2] / p;
        sub[i - 1] = sub[i - 1] - m * dia[i - 1];
        dia[i] = dia[i] - m * sup[i - 1];
        f[i] = f[i] - m * f[i - 1];
        ops.div();
        ops.axpy(3);
        if (i + 1 < n) {
            sup[i] = sup[i] - m * d[i - 1];
            ops.axpy();
        }
    }
    for (std::size_t i = n - 2; i-- > 0;) {
        if (is_zero(d[i])) {
            continue;
        }
        // row i+1 holds A(i+1, i+2) in sup[i+1]
        const S& p = sup[i + 1];
        if (is_zero(p)) {
            throw ReductionPivotZero(i);
        }
        const S m = d[i] / p;
        dia[i] = dia[i] - m * sub[i];
        sup[i] = sup[i] - m * dia[i + 1];
        f[i] = f[i] - m * f[i + 1];
        ops.div();
        ops.axpy(3);
    }
    return TriReduction<S>{TriMatrix<S>(std::move(sub), std::move(dia), std::move(sup)),
                           std::move(f), ops};
}

/// pd_to_td followed by the Thomas sweep.
template <Field S>
SolveReport<S> solve_pd2td_ntdm(const PentaMatrix<S>& a, ConstView<S> b) {
    SolveReport<S> rep;
    Stopwatch clock;
    auto red = pd_to_td(a, b);
    rep.ops = red.ops;
    rep.x = thomas(red.matrix, ConstView<S>(red.rhs), rep.ops);
    rep.wall_seconds = clock.seconds();
    rep.residual_inf = detail::residual_norm_of(a, ConstView<S>(rep.x), b);
    return rep;
}

}  // namespace bandix
