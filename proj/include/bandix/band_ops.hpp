#pragma once

#include <algorithm>
#include <cstddef>

#include "bandix/band_matrix.hpp"
#include "bandix/op_counter.hpp"

namespace bandix {

namespace detail {
inline void require_length(std::string_view what, std::size_t expected, std::size_t got) {
    if (expected != got) {
        throw DimensionMismatch(what, expected, got);
    }
}
}  // namespace detail

/// y = A x. Every row is accumulated from zero, so a row with m in-band
/// entries costs m multiplications and m additions (10N-12 in total).
template <Field S>
Vector<S> penta_matvec(const PentaMatrix<S>& a, ConstView<S> x, OpCounter& ops) {
    const std::size_t n = a.n();
    detail::require_length("penta_matvec x", n, x.size());
    const auto e = a.sub2();
    const auto l = a.sub1();
    const auto d = a.main();
    const auto u = a.sup1();
    const auto f = a.sup2();
    Vector<S> y(n);
    std::uint64_t terms = 0;
    for (std::size_t i = 0; i < n; ++i) {
        S acc(0);
        if (i >= 2) {
            acc += e[i - 2] * x[i - 2];
            ++terms;
        }
        if (i >= 1) {
            acc += l[i - 1] * x[i - 1];
            ++terms;
        }
        acc += d[i] * x[i];
        ++terms;
        if (i + 1 < n) {
            acc += u[i] * x[i + 1];
            ++terms;
        }
        if (i + 2 < n) {
            acc += f[i] * x[i + 2];
            ++terms;
        }
        y[i] = std::move(acc);
    }
    ops.mul(terms);
    ops.add(terms);
    return y;
}

template <Field S>
Vector<S> penta_matvec(const PentaMatrix<S>& a, ConstView<S> x) {
    OpCounter ops;
    return penta_matvec(a, x, ops);
}

template <Field S>
Vector<S> tri_matvec(const TriMatrix<S>& t, ConstView<S> x, OpCounter& ops) {
    const std::size_t n = t.n();
    detail::require_length("tri_matvec x", n, x.size());
    const auto l = t.sub1();
    const auto d = t.main();
    const auto u = t.sup1();
    Vector<S> y(n);
    std::uint64_t terms = 0;
    for (std::size_t i = 0; i < n; ++i) {
        S acc(0);
        if (i >= 1) {
            acc += l[i - 1] * x[i - 1];
            ++terms;
        }
        acc += d[i] * x[i];
        ++terms;
        if (i + 1 < n) {
            acc += u[i] * x[i + 1];
            ++terms;
        }
        y[i] = std::move(acc);
    }
    ops.mul(terms);
    ops.add(terms);
    return y;
}

template <Field S>
Vector<S> tri_matvec(const TriMatrix<S>& t, ConstView<S> x) {
    OpCounter ops;
    return tri_matvec(t, x, ops);
}

/// max_i |v_i|; 0 for an empty vector.
template <OrderedField S>
S inf_norm(ConstView<S> v) {
    S best(0);
    for (const auto& x : v) {
        S m = abs(x);
        if (best < m) {
            best = std::move(m);
        }
    }
    return best;
}

/// b - A x
template <Field S>
Vector<S> residual(const PentaMatrix<S>& a, ConstView<S> x, ConstView<S> b,
                   OpCounter& ops) {
    detail::require_length("residual b", a.n(), b.size());
    Vector<S> r = penta_matvec(a, x, ops);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = b[i] - r[i];
    }
    ops.sub(r.size());
    return r;
}

template <Field S>
Vector<S> residual(const TriMatrix<S>& t, ConstView<S> x, ConstView<S> b,
                   OpCounter& ops) {
    detail::require_length("residual b", t.n(), b.size());
    Vector<S> r = tri_matvec(t, x, ops);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = b[i] - r[i];
    }
    ops.sub(r.size());
    return r;
}

template <class M>
auto residual(const M& a, ConstView<typename M::scalar_type> x,
              ConstView<typename M::scalar_type> b) {
    OpCounter ops;
    return residual(a, x, b, ops);
}

/// Structural outer-diagonal nonzeros: rows with a nonzero second-subdiagonal
/// entry plus rows with a nonzero second-superdiagonal entry (exact zero test).
template <Field S>
std::size_t outer_nonzero_count(const PentaMatrix<S>& a) {
    auto nz = [](std::span<const S> v) {
        return static_cast<std::size_t>(
            std::count_if(v.begin(), v.end(), [](const S& x) { return !is_zero(x); }));
    };
    return nz(a.sub2()) + nz(a.sup2());
}

/// Number of rows whose second-subdiagonal entry is structurally nonzero.
template <Field S>
std::size_t sub2_nonzero_count(const PentaMatrix<S>& a) {
    const auto v = a.sub2();
    return static_cast<std::size_t>(
        std::count_if(v.begin(), v.end(), [](const S& x) { return !is_zero(x); }));
}

}  // namespace bandix
