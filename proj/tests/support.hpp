#pragma once

// Seeded generators for property tests. Independent of the library's own
// bench generators so that tests do not share their assumptions.

#include <cmath>
#include <cstdint>
#include <vector>

#include "bandix/band_matrix.hpp"
#include "bandix/rational.hpp"

namespace support {

using bandix::PentaMatrix;
using bandix::Rational;
using bandix::TriMatrix;

class SplitMix {
public:
    explicit SplitMix(std::uint64_t seed) : s_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    /// uniform in [lo, hi]
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(next() >> 11) * 0x1.0p-53);
    }
    bool chance(double p) { return uniform(0.0, 1.0) < p; }

private:
    std::uint64_t s_;
};

/// Small rational p/q with 1 <= |p| <= 5, 1 <= q <= 4; zero with probability `zero_p`.
inline Rational small_rational(SplitMix& g, double zero_p = 0.0) {
    if (zero_p > 0.0 && g.chance(zero_p)) return Rational(0);
    long p = 0;
    while (p == 0) p = g.range(-5, 5);
    return Rational(p, g.range(1, 4));
}

inline std::vector<Rational> rational_vector(SplitMix& g, std::size_t n, double zero_p = 0.0) {
    std::vector<Rational> v(n);
    for (auto& x : v) x = small_rational(g, zero_p);
    return v;
}

inline PentaMatrix<Rational> rational_penta(SplitMix& g, std::size_t n, double zero_p = 0.2) {
    return PentaMatrix<Rational>(rational_vector(g, n - 2, zero_p), rational_vector(g, n - 1, zero_p),
                                 rational_vector(g, n, zero_p), rational_vector(g, n - 1, zero_p),
                                 rational_vector(g, n - 2, zero_p));
}

inline TriMatrix<Rational> rational_tri(SplitMix& g, std::size_t n, double zero_p = 0.2) {
    return TriMatrix<Rational>(rational_vector(g, n - 1, zero_p), rational_vector(g, n, zero_p),
                               rational_vector(g, n - 1, zero_p));
}

inline std::vector<double> double_vector(SplitMix& g, std::size_t n) {
    std::vector<double> v(n);
    for (auto& x : v) x = g.uniform(-1.0, 1.0);
    return v;
}

/// Strictly diagonally dominant pentadiagonal matrix; each outer entry is
/// zeroed with probability `outer_zero_p`.
inline PentaMatrix<double> dd_penta(SplitMix& g, std::size_t n, double outer_zero_p = 0.0) {
    auto e = double_vector(g, n - 2);
    auto l = double_vector(g, n - 1);
    auto c = double_vector(g, n - 1);
    auto f = double_vector(g, n - 2);
    for (auto& x : e)
        if (g.chance(outer_zero_p)) x = 0.0;
    for (auto& x : f)
        if (g.chance(outer_zero_p)) x = 0.0;
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        if (i >= 2) s += std::abs(e[i - 2]);
        if (i >= 1) s += std::abs(l[i - 1]);
        if (i + 1 < n) s += std::abs(c[i]);
        if (i + 2 < n) s += std::abs(f[i]);
        d[i] = (g.chance(0.5) ? 1.0 : -1.0) * (s + 0.5 + g.uniform(0.0, 1.0));
    }
    return PentaMatrix<double>(e, l, d, c, f);
}

inline TriMatrix<double> dd_tri(SplitMix& g, std::size_t n) {
    auto l = double_vector(g, n - 1);
    auto c = double_vector(g, n - 1);
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        if (i >= 1) s += std::abs(l[i - 1]);
        if (i + 1 < n) s += std::abs(c[i]);
        d[i] = s + 0.5 + g.uniform(0.0, 1.0);
    }
    return TriMatrix<double>(l, d, c);
}

/// Rational matrix that is strictly diagonally dominant, so unpivoted
/// elimination never meets a zero pivot.
inline PentaMatrix<Rational> dd_rational_penta(SplitMix& g, std::size_t n, double outer_zero_p = 0.3) {
    auto e = rational_vector(g, n - 2, outer_zero_p);
    auto l = rational_vector(g, n - 1);
    auto c = rational_vector(g, n - 1);
    auto f = rational_vector(g, n - 2, outer_zero_p);
    std::vector<Rational> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational s(1);
        if (i >= 2) s += bandix::abs(e[i - 2]);
        if (i >= 1) s += bandix::abs(l[i - 1]);
        if (i + 1 < n) s += bandix::abs(c[i]);
        if (i + 2 < n) s += bandix::abs(f[i]);
        d[i] = s;
    }
    return PentaMatrix<Rational>(e, l, d, c, f);
}

template <class S>
double max_abs_diff(const std::vector<S>& a, const std::vector<S>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(bandix::to_double(a[i]) - bandix::to_double(b[i])));
    }
    return m;
}

}  // namespace support
