#include "bandix/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace bandix {

DenseMatrix::DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::lower_of(const BandFactors<double>& lu) {
    const std::size_t n = lu.n();
    DenseMatrix m = identity(n);
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = lu.l_sub1[i - 1];
    for (std::size_t i = 2; i < n; ++i) m(i, i - 2) = lu.l_sub2[i - 2];
    return m;
}

DenseMatrix DenseMatrix::upper_of(const BandFactors<double>& lu) {
    const std::size_t n = lu.n();
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = lu.u_main[i];
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = lu.u_sup1[i];
    for (std::size_t i = 0; i + 2 < n; ++i) m(i, i + 2) = lu.u_sup2[i];
    return m;
}

Vector<double> DenseMatrix::apply(ConstView<double> x, OpCounter& ops) const {
    detail::require_length("DenseMatrix::apply x", n_, x.size());
    Vector<double> y(n_, 0.0);
    std::uint64_t terms = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        const double* row = &data_[i * n_];
        double acc = 0.0;
        for (std::size_t j = 0; j < n_; ++j) {
            if (row[j] != 0.0) {
                acc += row[j] * x[j];
                ++terms;
            }
        }
        y[i] = acc;
    }
    ops.mul(terms);
    ops.add(terms);
    return y;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, OpCounter& ops) {
    const std::size_t n = a.n();
    if (b.n() != n) {
        throw DimensionMismatch("multiply", n, b.n());
    }
    // column range holding the nonzeros of every row of b
    std::vector<std::size_t> first(n, n), last(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) {
            if (b(k, j) != 0.0) {
                first[k] = std::min(first[k], j);
                last[k] = j;
            }
        }
    }
    DenseMatrix c(n);
    std::uint64_t terms = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0 || first[k] > last[k]) continue;
            for (std::size_t j = first[k]; j <= last[k]; ++j) {
                c(i, j) += aik * b(k, j);
            }
            terms += last[k] - first[k] + 1;
        }
    }
    ops.mul(terms);
    ops.add(terms);
    return c;
}

double inf_norm(const DenseMatrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.n(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.n(); ++j) s += std::abs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

BandMatrix::BandMatrix(std::size_t n, int lo, int hi)
    : n_(n), lo_(lo), hi_(hi), data_(static_cast<std::size_t>(hi - lo + 1) * n, 0.0) {
    if (lo > hi) {
        throw InvalidInput("BandMatrix: lower offset exceeds upper offset");
    }
}

BandMatrix BandMatrix::lower_of(const BandFactors<double>& lu) {
    const std::size_t n = lu.n();
    BandMatrix m(n, -2, 0);
    for (std::size_t i = 0; i < n; ++i) m.set(i, 0, 1.0);
    for (std::size_t i = 1; i < n; ++i) m.set(i, -1, lu.l_sub1[i - 1]);
    for (std::size_t i = 2; i < n; ++i) m.set(i, -2, lu.l_sub2[i - 2]);
    return m;
}

BandMatrix BandMatrix::upper_of(const BandFactors<double>& lu) {
    const std::size_t n = lu.n();
    BandMatrix m(n, 0, 2);
    for (std::size_t i = 0; i < n; ++i) m.set(i, 0, lu.u_main[i]);
    for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, 1, lu.u_sup1[i]);
    for (std::size_t i = 0; i + 2 < n; ++i) m.set(i, 2, lu.u_sup2[i]);
    return m;
}

double BandMatrix::get(std::size_t i, int o) const {
    if (o < lo_ || o > hi_) return 0.0;
    return data_[static_cast<std::size_t>(o - lo_) * n_ + i];
}

void BandMatrix::set(std::size_t i, int o, double v) {
    if (o < lo_ || o > hi_) {
        throw InvalidInput("BandMatrix::set: offset outside the stored band");
    }
    data_[static_cast<std::size_t>(o - lo_) * n_ + i] = v;
}

double BandMatrix::at(std::size_t i, std::size_t j) const {
    const auto o = static_cast<long long>(j) - static_cast<long long>(i);
    if (o < lo_ || o > hi_) return 0.0;
    return get(i, static_cast<int>(o));
}

Vector<double> BandMatrix::apply(ConstView<double> x, OpCounter& ops) const {
    detail::require_length("BandMatrix::apply x", n_, x.size());
    Vector<double> y(n_, 0.0);
    std::uint64_t terms = 0;
    const auto n = static_cast<long long>(n_);
    for (long long i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int o = lo_; o <= hi_; ++o) {
            const long long j = i + o;
            if (j < 0 || j >= n) continue;
            acc += get(static_cast<std::size_t>(i), o) * x[static_cast<std::size_t>(j)];
            ++terms;
        }
        y[static_cast<std::size_t>(i)] = acc;
    }
    ops.mul(terms);
    ops.add(terms);
    return y;
}

DenseMatrix BandMatrix::to_dense() const {
    DenseMatrix d(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (int o = lo_; o <= hi_; ++o) {
            const long long j = static_cast<long long>(i) + o;
            if (j < 0 || j >= static_cast<long long>(n_)) continue;
            d(i, static_cast<std::size_t>(j)) = get(i, o);
        }
    }
    return d;
}

BandMatrix multiply_truncated(const BandMatrix& a, const BandMatrix& b, int lo, int hi,
                              OpCounter& ops) {
    const std::size_t n = a.n();
    if (b.n() != n) {
        throw DimensionMismatch("multiply_truncated", n, b.n());
    }
    BandMatrix c(n, lo, hi);
    const auto sn = static_cast<long long>(n);
    std::uint64_t terms = 0;
    for (long long i = 0; i < sn; ++i) {
        for (int o = lo; o <= hi; ++o) {
            if (i + o < 0 || i + o >= sn) continue;
            double acc = 0.0;
            for (int p = a.lo(); p <= a.hi(); ++p) {
                const int q = o - p;
                if (q < b.lo() || q > b.hi()) continue;
                const long long k = i + p;
                if (k < 0 || k >= sn) continue;
                acc += a.get(static_cast<std::size_t>(i), p) * b.get(static_cast<std::size_t>(k), q);
                ++terms;
            }
            c.set(static_cast<std::size_t>(i), o, acc);
        }
    }
    ops.mul(terms);
    ops.add(terms);
    return c;
}

double inf_norm(const BandMatrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.n(); ++i) {
        double s = 0.0;
        for (int o = m.lo(); o <= m.hi(); ++o) s += std::abs(m.get(i, o));
        best = std::max(best, s);
    }
    return best;
}

namespace {

void check_options(double tol, std::size_t max_iter) {
    if (!(tol > 0.0)) throw InvalidInput("inversion tolerance must be positive");
    if (max_iter < 1) throw InvalidInput("inversion max_iterations must be >= 1");
}

bool is_triangular(const DenseMatrix& m) {
    bool lower = true;
    bool upper = true;
    for (std::size_t i = 0; i < m.n(); ++i) {
        for (std::size_t j = 0; j < m.n(); ++j) {
            if (m(i, j) == 0.0) continue;
            if (j > i) lower = false;
            if (j < i) upper = false;
        }
    }
    return lower || upper;
}

}  // namespace

InversionReport<DenseMatrix> hb_invert_dense(const DenseMatrix& m, const HbOptions& opt) {
    check_options(opt.tolerance, opt.max_iterations);
    const std::size_t n = m.n();
    if (!is_triangular(m)) {
        throw InvalidInput("hb_invert_dense expects a triangular matrix");
    }
    InversionReport<DenseMatrix> rep;
    DenseMatrix x(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (m(i, i) == 0.0) throw ZeroDiagonal(i);
        x(i, i) = 1.0 / m(i, i);
    }
    rep.ops.div(n);

    for (std::size_t it = 0;; ++it) {
        DenseMatrix r = multiply(m, x, rep.ops);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) r(i, j) = (i == j ? 1.0 : 0.0) - r(i, j);
        }
        rep.ops.sub(n * n);
        const double res = inf_norm(r);
        rep.residual_history.push_back(res);
        if (res < opt.tolerance) {
            rep.iterations = it;
            rep.residual = res;
            rep.inverse = std::move(x);
            return rep;
        }
        if (it >= opt.max_iterations) {
            throw MaxIterationsExceeded(it, res);
        }
        for (std::size_t i = 0; i < n; ++i) r(i, i) += 1.0;
        rep.ops.add(n);
        x = multiply(x, r, rep.ops);
    }
}

InversionReport<BandMatrix> hb_invert_banded(const BandMatrix& m, const HbBandedOptions& opt) {
    check_options(opt.tolerance, opt.max_iterations);
    if (opt.bandwidth < 1) {
        throw InvalidInput("hb bandwidth must be >= 1");
    }
    const bool lower = m.hi() == 0 && m.lo() <= 0;
    const bool upper = m.lo() == 0 && m.hi() >= 0;
    if (!lower && !upper) {
        throw InvalidInput("hb_invert_banded expects a lower or upper banded matrix");
    }
    const std::size_t n = m.n();
    const int w = opt.bandwidth;
    const int xlo = lower ? -w : 0;
    const int xhi = lower ? 0 : w;

    InversionReport<BandMatrix> rep;
    BandMatrix x(n, xlo, xhi);
    for (std::size_t i = 0; i < n; ++i) {
        if (m.get(i, 0) == 0.0) throw ZeroDiagonal(i);
        x.set(i, 0, 1.0 / m.get(i, 0));
    }
    rep.ops.div(n);

    BandMatrix best = x;
    double best_res = std::numeric_limits<double>::infinity();
    std::size_t best_it = 0;
    for (std::size_t it = 0;; ++it) {
        // M X is exactly banded on lo(M)+lo(X) .. hi(M)+hi(X)
        BandMatrix r = multiply_truncated(m, x, m.lo() + xlo, m.hi() + xhi, rep.ops);
        for (std::size_t i = 0; i < n; ++i) {
            for (int o = r.lo(); o <= r.hi(); ++o) {
                r.set(i, o, (o == 0 ? 1.0 : 0.0) - r.get(i, o));
            }
        }
        rep.ops.sub(n * r.stored_diagonals());
        const double res = inf_norm(r);
        rep.residual_history.push_back(res);
        if (res < best_res) {
            best_res = res;
            best = x;
            best_it = it;
        }
        if (res < opt.tolerance) {
            rep.iterations = it;
            rep.residual = res;
            rep.inverse = std::move(x);
            return rep;
        }
        const auto& h = rep.residual_history;
        if (it >= 3 && h[it] > 0.99 * h[it - 3]) {
            if (!opt.accept_stagnation) {
                throw Stagnated(it, res);
            }
            rep.stagnated = true;
            rep.iterations = best_it;
            rep.residual = best_res;
            rep.inverse = std::move(best);
            return rep;
        }
        if (it >= opt.max_iterations) {
            throw MaxIterationsExceeded(it, res);
        }
        for (std::size_t i = 0; i < n; ++i) r.set(i, 0, r.get(i, 0) + 1.0);
        rep.ops.add(n);
        x = multiply_truncated(x, r, xlo, xhi, rep.ops);
    }
}

namespace {

/// Shared SIP driver: `sweep(x, r, ops)` produces the next iterate in place.
SolveReport<double> run_sip_loop(
    const PentaMatrix<double>& a, ConstView<double> b, const SipConfig& cfg, OpCounter setup,
    const std::function<void(Vector<double>&, const Vector<double>&, OpCounter&)>& sweep) {
    const std::size_t n = a.n();
    if (!(cfg.tolerance > 0.0)) throw InvalidInput("sip tolerance must be positive");
    if (cfg.max_iterations < 1) throw InvalidInput("sip max_iterations must be >= 1");

    SolveReport<double> rep;
    Stopwatch clock;
    Vector<double> x(n, 0.0);
    if (cfg.initial_guess) {
        detail::require_length("sip initial guess", n, cfg.initial_guess->size());
        x = *cfg.initial_guess;
    }
    auto r = residual(a, ConstView<double>(x), b, setup);
    double norm = inf_norm<double>(r);
    const double initial = norm;
    std::size_t k = 0;
    while (norm >= cfg.tolerance) {
        if (k >= cfg.max_iterations) throw MaxIterationsExceeded(k, norm, x);
        sweep(x, r, rep.iteration_ops);
        r = residual(a, ConstView<double>(x), b, rep.iteration_ops);
        norm = inf_norm<double>(r);
        ++k;
        if (cfg.on_iteration) cfg.on_iteration(k, norm);
        if (norm > cfg.divergence_factor * initial) throw Diverged(k, norm);
    }
    rep.wall_seconds = clock.seconds();
    rep.iterations = k;
    rep.ops = setup;
    rep.ops += rep.iteration_ops;
    rep.residual_inf = inf_norm<double>(residual(a, ConstView<double>(x), b));
    rep.x = std::move(x);
    return rep;
}

template <class M>
void record(SipHbReport& out, OpCounter& setup, const InversionReport<M>& xl,
            const InversionReport<M>& xu) {
    setup += xl.ops;
    setup += xu.ops;
    out.l_iterations = xl.iterations;
    out.u_iterations = xu.iterations;
    out.l_residual = xl.residual;
    out.u_residual = xu.residual;
}

template <class M>
SolveReport<double> correction_loop(const PentaMatrix<double>& a, ConstView<double> b,
                                    const SipConfig& cfg, const OpCounter& setup, const M& xl,
                                    const M& xu) {
    const std::size_t n = a.n();
    return run_sip_loop(a, b, cfg, setup,
                        [&](Vector<double>& x, const Vector<double>& r, OpCounter& ops) {
                            const auto y = xl.apply(ConstView<double>(r), ops);
                            const auto dx = xu.apply(ConstView<double>(y), ops);
                            for (std::size_t i = 0; i < n; ++i) x[i] += dx[i];
                            ops.add(n);
                        });
}

}  // namespace

SipHbReport sip_hb_solve(const PentaMatrix<double>& a, ConstView<double> b, const SipConfig& cfg,
                         const SipHbOptions& opt) {
    const std::size_t n = a.n();
    detail::require_length("sip_hb_solve b", n, b.size());
    SipHbReport out;
    OpCounter setup;
    Stopwatch clock;
    const auto lu = ilu0_penta(a, setup);

    if (opt.mode == HbMode::dense) {
        if (n > opt.dense_cap) {
            throw DenseSizeExceeded(n, opt.dense_cap);
        }
        const auto xl = hb_invert_dense(DenseMatrix::lower_of(lu), opt.dense);
        const auto xu = hb_invert_dense(DenseMatrix::upper_of(lu), opt.dense);
        record(out, setup, xl, xu);
        out.solve = correction_loop(a, b, cfg, setup, xl.inverse, xu.inverse);
    } else {
        const auto xl = hb_invert_banded(BandMatrix::lower_of(lu), opt.banded);
        const auto xu = hb_invert_banded(BandMatrix::upper_of(lu), opt.banded);
        record(out, setup, xl, xu);
        out.solve = correction_loop(a, b, cfg, setup, xl.inverse, xu.inverse);
    }
    out.solve.wall_seconds = clock.seconds();
    return out;
}

}  // namespace bandix
