#pragma once

// Dense reference implementations. Deliberately naive: O(n^3) loops over full
// matrices with no knowledge of band structure.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bandix/band_matrix.hpp"
#include "bandix/rational.hpp"

namespace oracle {

using bandix::Rational;

template <class S>
struct Dense {
    std::size_t n = 0;
    std::vector<std::vector<S>> a;

    explicit Dense(std::size_t size = 0) : n(size), a(size, std::vector<S>(size, S(0))) {}
    S& operator()(std::size_t i, std::size_t j) { return a[i][j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return a[i][j]; }

    static Dense identity(std::size_t size) {
        Dense d(size);
        for (std::size_t i = 0; i < size; ++i) d(i, i) = S(1);
        return d;
    }
};

template <class S>
Dense<S> dense_of(const bandix::PentaMatrix<S>& m) {
    Dense<S> d(m.n());
    for (std::size_t i = 0; i < m.n(); ++i)
        for (std::size_t j = 0; j < m.n(); ++j) d(i, j) = m.at(i, j);
    return d;
}

template <class S>
Dense<S> dense_of(const bandix::TriMatrix<S>& m) {
    return dense_of(m.to_penta());
}

template <class S>
Dense<S> dense_lower(const bandix::BandFactors<S>& f) {
    Dense<S> d(f.n());
    for (std::size_t i = 0; i < f.n(); ++i)
        for (std::size_t j = 0; j < f.n(); ++j) d(i, j) = f.lower_at(i, j);
    return d;
}

template <class S>
Dense<S> dense_upper(const bandix::BandFactors<S>& f) {
    Dense<S> d(f.n());
    for (std::size_t i = 0; i < f.n(); ++i)
        for (std::size_t j = 0; j < f.n(); ++j) d(i, j) = f.upper_at(i, j);
    return d;
}

template <class S>
std::vector<S> matvec(const Dense<S>& m, const std::vector<S>& x) {
    std::vector<S> y(m.n, S(0));
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) y[i] = y[i] + m(i, j) * x[j];
    return y;
}

template <class S>
Dense<S> product(const Dense<S>& x, const Dense<S>& y) {
    Dense<S> z(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t j = 0; j < x.n; ++j) {
            S acc(0);
            for (std::size_t k = 0; k < x.n; ++k) acc = acc + x(i, k) * y(k, j);
            z(i, j) = acc;
        }
    return z;
}

template <class S>
std::vector<S> residual(const Dense<S>& m, const std::vector<S>& x, const std::vector<S>& b) {
    auto y = matvec(m, x);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = b[i] - y[i];
    return y;
}

/// Unpivoted Doolittle LU on the full matrix; nullopt on a zero pivot.
template <class S>
std::optional<std::pair<Dense<S>, Dense<S>>> lu_unpivoted(const Dense<S>& m) {
    const std::size_t n = m.n;
    Dense<S> l = Dense<S>::identity(n);
    Dense<S> u(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            S s = m(i, j);
            for (std::size_t k = 0; k < i; ++k) s = s - l(i, k) * u(k, j);
            u(i, j) = s;
        }
        if (u(i, i) == S(0)) return std::nullopt;
        for (std::size_t j = i + 1; j < n; ++j) {
            S s = m(j, i);
            for (std::size_t k = 0; k < i; ++k) s = s - l(j, k) * u(k, i);
            l(j, i) = s / u(i, i);
        }
    }
    return std::make_pair(l, u);
}

/// Gaussian elimination with complete pivoting over the rationals.
/// Returns nullopt for a singular matrix.
inline std::optional<std::vector<Rational>> full_pivot_solve(Dense<Rational> m,
                                                             std::vector<Rational> b) {
    const std::size_t n = m.n;
    std::vector<std::size_t> col(n);
    for (std::size_t j = 0; j < n; ++j) col[j] = j;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pr = n, pc = n;
        for (std::size_t i = k; i < n && pr == n; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (!m(i, j).is_zero()) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == n) return std::nullopt;
        std::swap(m.a[k], m.a[pr]);
        std::swap(b[k], b[pr]);
        if (pc != k) {
            for (std::size_t i = 0; i < n; ++i) std::swap(m(i, k), m(i, pc));
            std::swap(col[k], col[pc]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            const Rational f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
            b[i] = b[i] - f * b[k];
        }
    }
    std::vector<Rational> y(n, Rational(0));
    for (std::size_t k = n; k-- > 0;) {
        Rational s = b[k];
        for (std::size_t j = k + 1; j < n; ++j) s = s - m(k, j) * y[j];
        y[k] = s / m(k, k);
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) x[col[k]] = y[k];
    return x;
}

/// Determinant by row-pivoted elimination over the rationals.
inline Rational determinant(Dense<Rational> m) {
    const std::size_t n = m.n;
    Rational det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k).is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != k) {
            std::swap(m.a[p], m.a[k]);
            det = -det;
        }
        det = det * m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            const Rational f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
        }
    }
    return det;
}

/// ILU(0) on an explicit pattern: the IKJ elimination of the textbook, with
/// every update outside `pattern` discarded. Returns the combined LU array
/// (unit L implied below the diagonal).
template <class S>
Dense<S> ilu0(const Dense<S>& m, const std::vector<std::vector<bool>>& pattern) {
    const std::size_t n = m.n;
    Dense<S> w = m;
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) {
            if (!pattern[i][k]) continue;
            w(i, k) = w(i, k) / w(k, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                if (pattern[i][j]) w(i, j) = w(i, j) - w(i, k) * w(k, j);
            }
        }
    }
    return w;
}

template <class S>
std::vector<std::vector<bool>> pattern_of(const Dense<S>& m) {
    std::vector<std::vector<bool>> p(m.n, std::vector<bool>(m.n, false));
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) p[i][j] = (i == j) || !(m(i, j) == S(0));
    return p;
}

/// Inverse of a triangular matrix column by column via substitution.
inline Dense<double> triangular_inverse(const Dense<double>& m, bool lower) {
    const std::size_t n = m.n;
    Dense<double> x(n);
    for (std::size_t c = 0; c < n; ++c) {
        if (lower) {
            for (std::size_t i = 0; i < n; ++i) {
                double s = (i == c) ? 1.0 : 0.0;
                for (std::size_t k = 0; k < i; ++k) s -= m(i, k) * x(k, c);
                x(i, c) = s / m(i, i);
            }
        } else {
            for (std::size_t i = n; i-- > 0;) {
                double s = (i == c) ? 1.0 : 0.0;
                for (std::size_t k = i + 1; k < n; ++k) s -= m(i, k) * x(k, c);
                x(i, c) = s / m(i, i);
            }
        }
    }
    return x;
}

}  // namespace oracle
