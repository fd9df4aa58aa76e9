#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "bandix/band_lu.hpp"
#include "bandix/solve_report.hpp"

namespace bandix {

/// Incomplete LU restricted to the structural nonzero pattern of A.
///
/// The diagonal always belongs to the pattern. Updates that would land on a
/// structurally zero position of A are dropped, so L U reproduces A exactly on
/// every pattern position. The factors are read straight off the combined LU
/// array, which is what makes their product equal that array.
template <Field S>
BandFactors<S> ilu0_penta(const PentaMatrix<S>& a, OpCounter& ops) {
    const std::size_t n = a.n();
    const auto e = a.sub2();
    const auto l = a.sub1();
    const auto d = a.main();
    const auto c = a.sup1();
    const auto f = a.sup2();

    BandFactors<S> lu{Vector<S>(n - 1, S(0)), Vector<S>(n - 2, S(0)), Vector<S>(n, S(0)),
                      Vector<S>(n - 1, S(0)), Vector<S>(f.begin(), f.end())};

    for (std::size_t i = 0; i < n; ++i) {
        const bool has_e = i >= 2 && !is_zero(e[i - 2]);
        const bool has_a = i >= 1 && !is_zero(l[i - 1]);
        const bool has_c = i + 1 < n && !is_zero(c[i]);
        S we = has_e ? e[i - 2] : S(0);
        S wa = has_a ? l[i - 1] : S(0);
        S wb = d[i];
        S wc = has_c ? c[i] : S(0);

        if (has_e) {
            const std::size_t k = i - 2;
            we = we / lu.u_main[k];
            ops.div();
            if (has_a) {
                wa = wa - we * lu.u_sup1[k];
                ops.axpy();
            }
            wb = wb - we * lu.u_sup2[k];
            ops.axpy();
        }
        if (has_a) {
            const std::size_t k = i - 1;
            wa = wa / lu.u_main[k];
            ops.div();
            wb = wb - wa * lu.u_sup1[k];
            ops.axpy();
            if (has_c && k + 2 < n) {
                wc = wc - wa * lu.u_sup2[k];
                ops.axpy();
            }
        }
        if (is_zero(wb)) {
            throw ZeroPivot(i);
        }
        if (i >= 2) lu.l_sub2[i - 2] = std::move(we);
        if (i >= 1) lu.l_sub1[i - 1] = std::move(wa);
        lu.u_main[i] = std::move(wb);
        if (i + 1 < n) lu.u_sup1[i] = std::move(wc);
    }
    return lu;
}

template <Field S>
BandFactors<S> ilu0_penta(const PentaMatrix<S>& a) {
    OpCounter ops;
    return ilu0_penta(a, ops);
}

/// Banded product L U as a pentadiagonal matrix.
template <Field S>
PentaMatrix<S> band_product(const BandFactors<S>& lu, OpCounter& ops) {
    const std::size_t n = lu.n();
    const auto& l1 = lu.l_sub1;
    const auto& l2 = lu.l_sub2;
    const auto& u0 = lu.u_main;
    const auto& u1 = lu.u_sup1;
    const auto& u2 = lu.u_sup2;
    Vector<S> s2(n - 2), s1(n - 1), m(n), p1(n - 1), p2(n - 2);
    for (std::size_t i = 0; i < n; ++i) {
        S diag = u0[i];
        if (i >= 1) {
            diag = diag + l1[i - 1] * u1[i - 1];
            ops.mul();
            ops.add();
        }
        if (i >= 2) {
            diag = diag + l2[i - 2] * u2[i - 2];
            s2[i - 2] = l2[i - 2] * u0[i - 2];
            s1[i - 1] = l2[i - 2] * u1[i - 2] + l1[i - 1] * u0[i - 1];
            ops.mul(4);
            ops.add(2);
        } else if (i == 1) {
            s1[0] = l1[0] * u0[0];
            ops.mul();
        }
        m[i] = std::move(diag);
        if (i + 1 < n) {
            if (i >= 1) {
                p1[i] = u1[i] + l1[i - 1] * u2[i - 1];
                ops.mul();
                ops.add();
            } else {
                p1[i] = u1[i];
            }
        }
        if (i + 2 < n) {
            p2[i] = u2[i];
        }
    }
    return PentaMatrix<S>(std::move(s2), std::move(s1), std::move(m), std::move(p1),
                          std::move(p2));
}

/// K = L U - A, computed diagonal by diagonal.
template <Field S>
PentaMatrix<S> defect_matrix(const BandFactors<S>& lu, const PentaMatrix<S>& a, OpCounter& ops) {
    if (lu.n() != a.n()) {
        throw DimensionMismatch("defect_matrix", a.n(), lu.n());
    }
    const auto prod = band_product(lu, ops);
    auto diff = [&](std::span<const S> x, std::span<const S> y) {
        Vector<S> out(x.size());
        for (std::size_t k = 0; k < x.size(); ++k) {
            out[k] = x[k] - y[k];
        }
        ops.sub(x.size());
        return out;
    };
    return PentaMatrix<S>(diff(prod.sub2(), a.sub2()), diff(prod.sub1(), a.sub1()),
                          diff(prod.main(), a.main()), diff(prod.sup1(), a.sup1()),
                          diff(prod.sup2(), a.sup2()));
}

template <Field S>
PentaMatrix<S> defect_matrix(const BandFactors<S>& lu, const PentaMatrix<S>& a) {
    OpCounter ops;
    return defect_matrix(lu, a, ops);
}

struct SipConfig {
    double tolerance = 1e-12;
    std::size_t max_iterations = 10000;
    std::optional<Vector<double>> initial_guess;  // zero vector when empty
    /// abort with Diverged once the residual exceeds this multiple of the initial one
    double divergence_factor = 1e6;
    /// called after every sweep with (k, residual inf-norm)
    std::function<void(std::size_t, double)> on_iteration;
};

/// Strongly implicit procedure: stationary iteration on the ILU(0) splitting.
///
/// Loop while ||b - A x||_inf >= tolerance: newRHS = K x + b, solve L y =
/// newRHS, solve U x = y, recompute the residual. One sweep costs 31N-36
/// operations (recorded in `iteration_ops`).
SolveReport<double> sip_solve(const PentaMatrix<double>& a, ConstView<double> b,
                              const SipConfig& cfg = {});

}  // namespace bandix
