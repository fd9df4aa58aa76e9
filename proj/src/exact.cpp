#include "bandix/exact.hpp"

#include "bandix/band_lu.hpp"
#include "bandix/direct.hpp"
#include "bandix/solve_report.hpp"

namespace bandix {

namespace {

using RF = RationalFunction;

/// Replaces a vanished pivot by t and remembers that it had to.
struct SubstituteIndeterminate {
    std::size_t* count;
    RF operator()(std::size_t /*row*/) const {
        ++*count;
        return RF::indeterminate();
    }
};

PentaMatrix<RF> lift(const PentaMatrix<Rational>& a) {
    return a.map([](const Rational& r) { return RF(r); });
}

TriMatrix<RF> lift(const TriMatrix<Rational>& t) {
    return t.map([](const Rational& r) { return RF(r); });
}

Vector<RF> lift(ConstView<Rational> v) { return Vector<RF>(v.begin(), v.end()); }

Rational pivot_product_at_zero(ConstView<RF> pivots, OpCounter& ops) {
    RF det(1);
    for (const auto& p : pivots) {
        det *= p;
    }
    ops.mul(pivots.size() - 1);
    return det.at_zero();
}

Vector<Rational> limits(ConstView<RF> x) {
    Vector<Rational> out;
    out.reserve(x.size());
    for (const auto& v : x) {
        out.push_back(v.at_zero());
    }
    return out;
}

}  // namespace

Rational exact_det_band(const PentaMatrix<Rational>& a, OpCounter& ops) {
    std::size_t subs = 0;
    const auto lu = lu_penta(lift(a), ops, SubstituteIndeterminate{&subs});
    return pivot_product_at_zero(lu.u_main, ops);
}

Rational exact_det_band(const TriMatrix<Rational>& t, OpCounter& ops) {
    // LU pivots of a tridiagonal matrix: u_0 = b_0, u_i = b_i - a_i c_{i-1} / u_{i-1}
    const std::size_t n = t.n();
    std::size_t subs = 0;
    SubstituteIndeterminate policy{&subs};
    Vector<RF> piv(n);
    piv[0] = RF(t.main()[0]);
    if (piv[0].is_zero()) piv[0] = policy(0);
    for (std::size_t i = 1; i < n; ++i) {
        piv[i] = RF(t.main()[i]) - RF(t.sub1()[i - 1]) * RF(t.sup1()[i - 1]) / piv[i - 1];
        ops.mul();
        ops.div();
        ops.sub();
        if (piv[i].is_zero()) piv[i] = policy(i);
    }
    return pivot_product_at_zero(piv, ops);
}

Rational exact_det_band(const PentaMatrix<Rational>& a) {
    OpCounter ops;
    return exact_det_band(a, ops);
}

Rational exact_det_band(const TriMatrix<Rational>& t) {
    OpCounter ops;
    return exact_det_band(t, ops);
}

ExactSolveResult exact_solve_spdm(const PentaMatrix<Rational>& a, ConstView<Rational> b) {
    detail::require_length("exact_solve_spdm b", a.n(), b.size());
    ExactSolveResult res;
    Stopwatch clock;
    OpCounter& ops = res.ops;
    const auto lu = lu_penta(lift(a), ops, SubstituteIndeterminate{&res.pivot_substitutions});
    if (pivot_product_at_zero(lu.u_main, ops).is_zero()) {
        throw SingularMatrix();
    }
    const auto rhs = lift(b);
    const auto y = forward_sub(lu, ConstView<RF>(rhs), ops);
    const auto x = backward_sub(lu, ConstView<RF>(y), ops);
    res.x = limits(x);
    res.wall_seconds = clock.seconds();
    return res;
}

ExactSolveResult exact_solve_stdm(const TriMatrix<Rational>& t, ConstView<Rational> b) {
    detail::require_length("exact_solve_stdm b", t.n(), b.size());
    ExactSolveResult res;
    Stopwatch clock;
    OpCounter& ops = res.ops;
    const auto lt = lift(t);
    const auto rhs = lift(b);
    Vector<RF> pivots;
    const auto x = thomas(lt, ConstView<RF>(rhs), ops,
                          SubstituteIndeterminate{&res.pivot_substitutions}, &pivots);
    if (pivot_product_at_zero(pivots, ops).is_zero()) {
        throw SingularMatrix();
    }
    res.x = limits(x);
    res.wall_seconds = clock.seconds();
    return res;
}

PentaMatrix<Rational> to_exact(const PentaMatrix<double>& a) {
    return a.map([](double v) { return Rational::from_double(v); });
}

TriMatrix<Rational> to_exact(const TriMatrix<double>& t) {
    return t.map([](double v) { return Rational::from_double(v); });
}

Vector<Rational> to_exact(ConstView<double> v) {
    Vector<Rational> out;
    out.reserve(v.size());
    for (double x : v) {
        out.push_back(Rational::from_double(x));
    }
    return out;
}

PentaMatrix<double> to_float(const PentaMatrix<Rational>& a) {
    return a.map([](const Rational& v) { return v.to_double(); });
}

TriMatrix<double> to_float(const TriMatrix<Rational>& t) {
    return t.map([](const Rational& v) { return v.to_double(); });
}

Vector<double> to_float(ConstView<Rational> v) {
    Vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        out.push_back(x.to_double());
    }
    return out;
}

}  // namespace bandix
