#pragma once

#include <cstddef>

#include "bandix/band_ops.hpp"

namespace bandix {

/// Default zero-pivot policy of the numerical solvers: give up.
template <class S>
struct ThrowOnZeroPivot {
    [[noreturn]] S operator()(std::size_t row) const { throw ZeroPivot(row); }
};

/// Doolittle LU of a pentadiagonal matrix without pivoting.
///
/// L is unit lower with offsets -1, -2 and U carries offsets 0, +1, +2; on a
/// contiguous band there is no fill, so L U = A. Costs 10N-17 operations.
/// `on_zero_pivot(i)` is consulted when u_main[i] vanishes exactly and must
/// either throw or return the value to continue with.
template <Field S, class ZeroPivotPolicy = ThrowOnZeroPivot<S>>
BandFactors<S> lu_penta(const PentaMatrix<S>& a, OpCounter& ops,
                        ZeroPivotPolicy&& on_zero_pivot = {}) {
    const std::size_t n = a.n();
    const auto e = a.sub2();
    const auto l = a.sub1();
    const auto d = a.main();
    const auto c = a.sup1();
    const auto f = a.sup2();

    BandFactors<S> lu{Vector<S>(n - 1), Vector<S>(n - 2), Vector<S>(n), Vector<S>(n - 1),
                      Vector<S>(f.begin(), f.end())};
    auto& l1 = lu.l_sub1;
    auto& l2 = lu.l_sub2;
    auto& u0 = lu.u_main;
    auto& u1 = lu.u_sup1;
    const auto& u2 = lu.u_sup2;

    auto pivot = [&](std::size_t i) {
        if (is_zero(u0[i])) {
            u0[i] = on_zero_pivot(i);
        }
    };

    u0[0] = d[0];
    u1[0] = c[0];
    pivot(0);

    l1[0] = l[0] / u0[0];
    u0[1] = d[1] - l1[0] * u1[0];
    u1[1] = c[1] - l1[0] * u2[0];
    ops.div();
    ops.axpy(2);
    pivot(1);

    for (std::size_t i = 2; i < n; ++i) {
        l2[i - 2] = e[i - 2] / u0[i - 2];
        l1[i - 1] = (l[i - 1] - l2[i - 2] * u1[i - 2]) / u0[i - 1];
        u0[i] = d[i] - l1[i - 1] * u1[i - 1] - l2[i - 2] * u2[i - 2];
        ops.div(2);
        ops.axpy(3);
        if (i + 1 < n) {
            u1[i] = c[i] - l1[i - 1] * u2[i - 1];
            ops.axpy();
        }
        pivot(i);
    }
    return lu;
}

template <Field S>
BandFactors<S> lu_penta(const PentaMatrix<S>& a) {
    OpCounter ops;
    return lu_penta(a, ops);
}

/// Solve L y = rhs for the unit-lower factor; 4N-6 operations.
template <Field S>
Vector<S> forward_sub(const BandFactors<S>& lu, ConstView<S> rhs, OpCounter& ops) {
    const std::size_t n = lu.n();
    detail::require_length("forward_sub rhs", n, rhs.size());
    Vector<S> y(rhs.begin(), rhs.end());
    if (n >= 2) {
        y[1] = y[1] - lu.l_sub1[0] * y[0];
        ops.axpy();
    }
    for (std::size_t i = 2; i < n; ++i) {
        y[i] = y[i] - lu.l_sub1[i - 1] * y[i - 1] - lu.l_sub2[i - 2] * y[i - 2];
        ops.axpy(2);
    }
    return y;
}

template <Field S>
Vector<S> forward_sub(const BandFactors<S>& lu, ConstView<S> rhs) {
    OpCounter ops;
    return forward_sub(lu, rhs, ops);
}

/// Solve U x = y for the upper factor; 5N-6 operations. Throws ZeroPivot on u_main[i] = 0.
template <Field S>
Vector<S> backward_sub(const BandFactors<S>& lu, ConstView<S> y, OpCounter& ops) {
    const std::size_t n = lu.n();
    detail::require_length("backward_sub y", n, y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (is_zero(lu.u_main[i])) {
            throw ZeroPivot(i);
        }
    }
    Vector<S> x(n);
    x[n - 1] = y[n - 1] / lu.u_main[n - 1];
    ops.div();
    if (n >= 2) {
        x[n - 2] = (y[n - 2] - lu.u_sup1[n - 2] * x[n - 1]) / lu.u_main[n - 2];
        ops.axpy();
        ops.div();
    }
    for (std::size_t k = n - 2; k-- > 0;) {
        x[k] = (y[k] - lu.u_sup1[k] * x[k + 1] - lu.u_sup2[k] * x[k + 2]) / lu.u_main[k];
        ops.axpy(2);
        ops.div();
    }
    return x;
}

template <Field S>
Vector<S> backward_sub(const BandFactors<S>& lu, ConstView<S> y) {
    OpCounter ops;
    return backward_sub(lu, y, ops);
}

}  // namespace bandix
