#include "bandix/bench.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "bandix/direct.hpp"
#include "bandix/exact.hpp"
#include "bandix/inverse.hpp"
#include "bandix/iterative.hpp"

namespace bandix {

namespace {

constexpr double kGrid = 8388608.0;  // 2^23

/// Seeded source with a fixed, platform-independent mapping to values.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform on the grid {m / 2^23 : -2^23 <= m < 2^23}, i.e. within [-1, 1).
    double grid() {
        const auto m = static_cast<std::int64_t>(next() >> 40) - static_cast<std::int64_t>(1 << 23);
        return static_cast<double>(m) / kGrid;
    }

    double grid_nonzero() {
        for (;;) {
            const double v = grid();
            if (v != 0.0) return v;
        }
    }

    /// Uniform on the grid within [0, 1).
    double unit_grid() { return static_cast<double>(next() >> 41) / kGrid; }

    std::uint64_t below(std::uint64_t m) { return next() % m; }

    int small_int(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    /// `count` distinct indices from [0, m), in ascending order.
    std::vector<std::size_t> choose(std::size_t m, std::size_t count) {
        std::vector<std::size_t> idx(m);
        for (std::size_t i = 0; i < m; ++i) idx[i] = i;
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(below(m - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(count);
        std::sort(idx.begin(), idx.end());
        return idx;
    }

private:
    std::mt19937_64 gen_;
};

Vector<double> grid_vector(Rng& rng, std::size_t n) {
    Vector<double> v(n);
    for (auto& x : v) x = rng.grid();
    return v;
}

Vector<double> nonzero_vector(Rng& rng, std::size_t n) {
    Vector<double> v(n);
    for (auto& x : v) x = rng.grid_nonzero();
    return v;
}

/// main[i] = (absolute off-diagonal row sum) + 1 + u, u uniform on [0, 1).
Vector<double> dominant_main(Rng& rng, const Vector<double>& e, const Vector<double>& l,
                             const Vector<double>& c, const Vector<double>& f, std::size_t n) {
    Vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        if (i >= 2 && !e.empty()) s += std::abs(e[i - 2]);
        if (i >= 1) s += std::abs(l[i - 1]);
        if (i + 1 < n) s += std::abs(c[i]);
        if (i + 2 < n && !f.empty()) s += std::abs(f[i]);
        d[i] = s + 1.0 + rng.unit_grid();
    }
    return d;
}

PentaMatrix<double> gen_full(Rng& rng, std::size_t n) {
    auto e = nonzero_vector(rng, n - 2);
    auto l = nonzero_vector(rng, n - 1);
    auto c = nonzero_vector(rng, n - 1);
    auto f = nonzero_vector(rng, n - 2);
    auto d = dominant_main(rng, e, l, c, f, n);
    return PentaMatrix<double>(std::move(e), std::move(l), std::move(d), std::move(c),
                               std::move(f));
}

PentaMatrix<double> gen_sparse_outer(Rng& rng, const GeneratorSpec& spec) {
    const std::size_t n = spec.n;
    std::size_t k_lo = 0;
    std::size_t k_hi = 0;
    switch (spec.side) {
        case OuterSide::split:
            k_lo = (spec.k + 1) / 2;
            k_hi = spec.k / 2;
            break;
        case OuterSide::lower:
            k_lo = spec.k;
            break;
        case OuterSide::upper:
            k_hi = spec.k;
            break;
    }
    if (k_lo > n - 2 || k_hi > n - 2) {
        throw InvalidSpec("sparse-outer-penta: k = " + std::to_string(spec.k) +
                          " does not fit the outer diagonals for n = " + std::to_string(n));
    }
    auto l = nonzero_vector(rng, n - 1);
    auto c = nonzero_vector(rng, n - 1);
    Vector<double> e(n - 2, 0.0);
    Vector<double> f(n - 2, 0.0);
    for (std::size_t p : rng.choose(n - 2, k_lo)) e[p] = rng.grid_nonzero();
    for (std::size_t p : rng.choose(n - 2, k_hi)) f[p] = rng.grid_nonzero();
    auto d = dominant_main(rng, e, l, c, f, n);
    return PentaMatrix<double>(std::move(e), std::move(l), std::move(d), std::move(c),
                               std::move(f));
}

PentaMatrix<double> gen_gapped(Rng& rng, std::size_t n) {
    auto e = nonzero_vector(rng, n - 2);
    auto l = nonzero_vector(rng, n - 1);
    auto c = nonzero_vector(rng, n - 1);
    auto f = nonzero_vector(rng, n - 2);
    // rows 2j and 2j+1 form one grid column; no coupling across column boundaries
    for (std::size_t i = 1; i < n; ++i) {
        if (i % 2 == 0) l[i - 1] = 0.0;
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (i % 2 == 1) c[i] = 0.0;
    }
    auto d = dominant_main(rng, e, l, c, f, n);
    return PentaMatrix<double>(std::move(e), std::move(l), std::move(d), std::move(c),
                               std::move(f));
}

TriMatrix<double> gen_tri(Rng& rng, std::size_t n) {
    auto l = nonzero_vector(rng, n - 1);
    auto c = nonzero_vector(rng, n - 1);
    auto d = dominant_main(rng, {}, l, c, {}, n);
    return TriMatrix<double>(std::move(l), std::move(d), std::move(c));
}

PentaMatrix<double> gen_hard(Rng& rng, std::size_t n) {
    auto ints = [&](std::size_t m) {
        Vector<double> v(m);
        for (auto& x : v) x = rng.small_int(-3, 3);
        return v;
    };
    for (int attempt = 0; attempt < 1000; ++attempt) {
        auto e = ints(n - 2);
        auto l = ints(n - 1);
        auto d = ints(n);
        auto c = ints(n - 1);
        auto f = ints(n - 2);
        d[0] = 0.0;
        PentaMatrix<double> a(std::move(e), std::move(l), std::move(d), std::move(c),
                              std::move(f));
        if (!exact_det_band(to_exact(a)).is_zero()) {
            return a;
        }
    }
    throw InvalidSpec("hard-nonsingular: no nonsingular sample found");
}

const PentaMatrix<double>& require_penta(const AnyMatrix& a, std::optional<PentaMatrix<double>>& tmp) {
    if (a.index() == 0) return std::get<0>(a);
    tmp = std::get<1>(a).to_penta();
    return *tmp;
}

const TriMatrix<double>& require_tri(const AnyMatrix& a, std::string_view method) {
    if (a.index() != 1) {
        throw InvalidInput(std::string(method) + " requires a tridiagonal matrix");
    }
    return std::get<1>(a);
}

template <class R>
MethodOutcome from_report(R&& rep) {
    MethodOutcome out;
    out.x = std::move(rep.x);
    out.iterations = rep.iterations;
    out.ops = rep.ops;
    out.iteration_ops = rep.iteration_ops;
    out.seconds = rep.wall_seconds;
    out.residual_inf = rep.residual_inf;
    return out;
}

MethodOutcome from_exact(ExactSolveResult&& res) {
    MethodOutcome out;
    out.x = to_float(ConstView<Rational>(res.x));
    out.x_exact = std::move(res.x);
    out.ops = res.ops;
    out.seconds = res.wall_seconds;
    return out;
}

bool is_iterative(std::string_view m) {
    return m == "sip" || m == "sip-hb-dense" || m == "sip-hb-array";
}

std::string format_double(const char* fmt, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::dd_full_penta: return "dd-full-penta";
        case Family::sparse_outer_penta: return "sparse-outer-penta";
        case Family::dd_tri: return "dd-tri";
        case Family::hard_nonsingular: return "hard-nonsingular";
        case Family::gapped_penta: return "gapped-penta";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::dd_full_penta, Family::sparse_outer_penta, Family::dd_tri,
                     Family::hard_nonsingular, Family::gapped_penta}) {
        if (family_name(f) == name) return f;
    }
    throw InvalidSpec("unknown family `" + std::string(name) + "`");
}

TestSystem generate(const GeneratorSpec& spec) {
    const bool tri = spec.family == Family::dd_tri;
    if (spec.n < (tri ? 2u : 3u)) {
        throw InvalidSpec(family_name(spec.family) + ": n = " + std::to_string(spec.n) +
                          " is too small");
    }
    if (!tri && spec.k > 2 * (spec.n - 2)) {
        throw InvalidSpec("k = " + std::to_string(spec.k) + " exceeds 2(n-2)");
    }
    Rng rng(spec.seed);
    TestSystem sys{spec, PentaMatrix<double>::identity(3), {}, {}};
    switch (spec.family) {
        case Family::dd_full_penta: sys.matrix = gen_full(rng, spec.n); break;
        case Family::sparse_outer_penta: sys.matrix = gen_sparse_outer(rng, spec); break;
        case Family::dd_tri: sys.matrix = gen_tri(rng, spec.n); break;
        case Family::gapped_penta: sys.matrix = gen_gapped(rng, spec.n); break;
        case Family::hard_nonsingular: sys.matrix = gen_hard(rng, spec.n); break;
    }
    if (spec.family == Family::hard_nonsingular) {
        sys.x_true.resize(spec.n);
        for (auto& v : sys.x_true) v = rng.small_int(-3, 3);
    } else {
        sys.x_true = grid_vector(rng, spec.n);
    }
    // exact in double: see TestSystem
    if (sys.is_penta()) {
        sys.b = penta_matvec(sys.penta(), ConstView<double>(sys.x_true));
    } else {
        sys.b = tri_matvec(sys.tri(), ConstView<double>(sys.x_true));
    }
    return sys;
}

const std::vector<std::string>& method_ids() {
    static const std::vector<std::string> ids{"npdm", "mnpdm",  "ntdm",         "pd2td+ntdm",
                                              "spdm", "stdm",   "sip",          "sip-hb-dense",
                                              "sip-hb-array"};
    return ids;
}

bool is_method(std::string_view id) {
    const auto& ids = method_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool is_exact_method(std::string_view id) { return id == "spdm" || id == "stdm"; }

MethodOutcome run_method(std::string_view method, const AnyMatrix& a, ConstView<double> b,
                         const RunSettings& s) {
    std::optional<PentaMatrix<double>> tmp;
    if (method == "npdm") return from_report(solve_npdm(require_penta(a, tmp), b));
    if (method == "mnpdm") return from_report(solve_mnpdm(require_penta(a, tmp), b));
    if (method == "pd2td+ntdm") return from_report(solve_pd2td_ntdm(require_penta(a, tmp), b));
    if (method == "ntdm") return from_report(solve_ntdm(require_tri(a, method), b));
    if (method == "spdm") {
        const auto exact_b = to_exact(b);
        return from_exact(
            exact_solve_spdm(to_exact(require_penta(a, tmp)), ConstView<Rational>(exact_b)));
    }
    if (method == "stdm") {
        const auto exact_b = to_exact(b);
        return from_exact(
            exact_solve_stdm(to_exact(require_tri(a, method)), ConstView<Rational>(exact_b)));
    }
    SipConfig cfg;
    cfg.tolerance = s.tolerance;
    cfg.max_iterations = s.max_iterations;
    cfg.on_iteration = s.on_iteration;
    if (method == "sip") return from_report(sip_solve(require_penta(a, tmp), b, cfg));
    if (method == "sip-hb-dense" || method == "sip-hb-array") {
        SipHbOptions opt;
        opt.mode = method == "sip-hb-dense" ? HbMode::dense : HbMode::banded;
        opt.dense_cap = s.dense_cap;
        opt.banded.bandwidth = s.hb_bandwidth;
        return from_report(sip_hb_solve(require_penta(a, tmp), b, cfg, opt).solve);
    }
    throw InvalidInput("unknown method `" + std::string(method) + "`");
}

std::vector<BenchRow> run_benchmark(const std::vector<std::string>& methods,
                                    const std::vector<GeneratorSpec>& specs, std::size_t reps,
                                    const RunSettings& settings, bool parallel_instances) {
    if (reps < 1) throw InvalidInput("reps must be >= 1");
    for (const auto& m : methods) {
        if (!is_method(m)) throw InvalidInput("unknown method `" + m + "`");
    }
    std::vector<TestSystem> systems;
    systems.reserve(specs.size());
    for (const auto& spec : specs) systems.push_back(generate(spec));

    auto run_pair = [&](const std::string& method, const TestSystem& sys) {
        BenchRow row;
        row.method = method;
        row.family = family_name(sys.spec.family);
        row.n = sys.spec.n;
        row.k = sys.spec.k;
        row.reps = reps;
        try {
            const MethodOutcome warm = run_method(method, sys.matrix, sys.b, settings);
            double total = 0.0;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < reps; ++r) {
                const double t = run_method(method, sys.matrix, sys.b, settings).seconds;
                total += t;
                best = std::min(best, t);
            }
            row.mean_s = total / static_cast<double>(reps);
            row.min_s = best;
            row.iters = warm.iterations;
            row.ops = warm.ops.total();
            if (warm.x_exact) {
                Rational worst(0);
                for (std::size_t i = 0; i < sys.x_true.size(); ++i) {
                    const Rational d = abs((*warm.x_exact)[i] - Rational::from_double(sys.x_true[i]));
                    if (worst < d) worst = d;
                }
                row.error_inf = worst.to_double();
            } else {
                double worst = 0.0;
                for (std::size_t i = 0; i < sys.x_true.size(); ++i) {
                    worst = std::max(worst, std::abs(warm.x[i] - sys.x_true[i]));
                }
                row.error_inf = worst;
            }
        } catch (const Error& e) {
            row.status = status_name(e);
        }
        return row;
    };

    std::vector<BenchRow> rows;
    if (!parallel_instances) {
        for (const auto& sys : systems) {
            for (const auto& m : methods) rows.push_back(run_pair(m, sys));
        }
        return rows;
    }
    std::vector<std::future<BenchRow>> jobs;
    for (const auto& sys : systems) {
        for (const auto& m : methods) {
            jobs.push_back(std::async(std::launch::async, run_pair, std::cref(m), std::cref(sys)));
        }
    }
    for (auto& j : jobs) rows.push_back(j.get());
    return rows;
}

FitResult fit_affine(const std::vector<std::pair<std::size_t, std::uint64_t>>& points) {
    std::set<std::size_t> distinct;
    for (const auto& p : points) distinct.insert(p.first);
    if (distinct.size() < 2) {
        throw InvalidInput("affine fit needs at least two distinct n");
    }
    auto q = [](std::uint64_t v) { return Rational(mpq_class(mpz_class(std::to_string(v)))); };
    Rational sx(0), sy(0), sxx(0), sxy(0);
    for (const auto& [n, ops] : points) {
        const Rational x = q(n);
        const Rational y = q(ops);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const Rational m = q(points.size());
    FitResult fit;
    fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / m;
    fit.points = points;
    Rational worst(0);
    for (const auto& [n, ops] : points) {
        const Rational d = abs(q(ops) - fit.slope * q(n) - fit.intercept);
        if (worst < d) worst = d;
    }
    fit.max_residual = worst.to_double();
    if (!worst.is_zero()) {
        throw NonAffine(fit.max_residual);
    }
    return fit;
}

Family complexity_family(std::string_view method) {
    if (method == "ntdm" || method == "stdm") return Family::dd_tri;
    return Family::sparse_outer_penta;
}

FitResult verify_complexity(std::string_view method, const std::vector<std::size_t>& ns,
                            std::size_t fixed_k, std::uint64_t seed, std::optional<Family> family,
                            OuterSide side) {
    if (!is_method(method)) throw InvalidInput("unknown method `" + std::string(method) + "`");
    if (std::set<std::size_t>(ns.begin(), ns.end()).size() < 3) {
        throw InvalidInput("verify_complexity needs at least three distinct n");
    }
    const Family fam = family.value_or(complexity_family(method));
    std::vector<std::pair<std::size_t, std::uint64_t>> points;
    for (std::size_t n : ns) {
        GeneratorSpec spec{fam, n, fam == Family::dd_tri ? 0 : fixed_k, seed, side};
        const auto sys = generate(spec);
        const auto out = run_method(method, sys.matrix, sys.b);
        std::uint64_t ops = out.ops.total();
        if (is_iterative(method)) {
            if (out.iterations == 0) {
                throw SolverError("no iteration was executed at n = " + std::to_string(n));
            }
            ops = out.iteration_ops.total() / out.iterations;
            if (ops * out.iterations != out.iteration_ops.total()) {
                throw NonAffine(1.0);
            }
        }
        points.emplace_back(n, ops);
    }
    return fit_affine(points);
}

ReportFormat parse_format(std::string_view name) {
    if (name == "csv") return ReportFormat::csv;
    if (name == "md" || name == "markdown") return ReportFormat::markdown;
    if (name == "plot") return ReportFormat::plot;
    throw InvalidInput("unknown report format `" + std::string(name) + "`");
}

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols{"method", "n",         "k",     "reps",
                                               "mean_s", "min_s",     "error_inf",
                                               "iters",  "ops",       "status"};
    return cols;
}

void emit_report(const std::vector<BenchRow>& rows, ReportFormat format, std::ostream& out) {
    if (rows.empty()) {
        throw InvalidInput("empty benchmark report");
    }
    if (format == ReportFormat::csv) {
        const auto& cols = csv_columns();
        for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c];
        out << '\n';
        for (const auto& r : rows) {
            const bool ok = r.status == "ok";
            out << r.method << ',' << r.n << ',' << r.k << ',' << r.reps << ','
                << (ok ? format_double("%.9e", r.mean_s) : "") << ','
                << (ok ? format_double("%.9e", r.min_s) : "") << ','
                << (ok ? format_double("%.17g", r.error_inf) : "") << ','
                << (ok ? std::to_string(r.iters) : "") << ','
                << (ok ? std::to_string(r.ops) : "") << ',' << r.status << '\n';
        }
        return;
    }
    if (format == ReportFormat::plot) {
        std::vector<std::string> order;
        for (const auto& r : rows) {
            if (std::find(order.begin(), order.end(), r.method) == order.end()) {
                order.push_back(r.method);
            }
        }
        bool first = true;
        for (const auto& m : order) {
            if (!first) out << "\n\n";
            first = false;
            out << "# method " << m << "\n# n mean_s\n";
            for (const auto& r : rows) {
                if (r.method == m && r.status == "ok") {
                    out << r.n << ' ' << format_double("%.9e", r.mean_s) << '\n';
                }
            }
        }
        return;
    }
    // markdown: one table per family, rows by (n, k), one column per method
    std::vector<std::string> families;
    for (const auto& r : rows) {
        if (std::find(families.begin(), families.end(), r.family) == families.end()) {
            families.push_back(r.family);
        }
    }
    bool first_table = true;
    for (const auto& fam : families) {
        std::vector<std::string> methods;
        std::vector<std::pair<std::size_t, std::size_t>> sizes;
        std::map<std::pair<std::string, std::pair<std::size_t, std::size_t>>, const BenchRow*> cell;
        for (const auto& r : rows) {
            if (r.family != fam) continue;
            if (std::find(methods.begin(), methods.end(), r.method) == methods.end()) {
                methods.push_back(r.method);
            }
            const auto key = std::make_pair(r.n, r.k);
            if (std::find(sizes.begin(), sizes.end(), key) == sizes.end()) sizes.push_back(key);
            cell[{r.method, key}] = &r;
        }
        if (!first_table) out << '\n';
        first_table = false;
        out << "Family `" << fam << "`, mean wall-clock time [s]\n\n| N | K |";
        for (const auto& m : methods) out << ' ' << m << " |";
        out << "\n|---|---|";
        for (std::size_t i = 0; i < methods.size(); ++i) out << "---|";
        out << '\n';
        for (const auto& key : sizes) {
            out << "| " << key.first << " | " << key.second << " |";
            for (const auto& m : methods) {
                const auto it = cell.find({m, key});
                if (it == cell.end()) {
                    out << " |";
                } else if (it->second->status != "ok") {
                    out << " -- (" << it->second->status << ") |";
                } else {
                    out << ' ' << format_double("%.7f", it->second->mean_s) << " |";
                }
            }
            out << '\n';
        }
        out << "| max error | |";
        for (const auto& m : methods) {
            double worst = -1.0;
            for (const auto& key : sizes) {
                const auto it = cell.find({m, key});
                if (it != cell.end() && it->second->status == "ok") {
                    worst = std::max(worst, it->second->error_inf);
                }
            }
            if (worst < 0.0) {
                out << " -- |";
            } else {
                out << ' ' << format_double("%.2e", worst) << " |";
            }
        }
        out << '\n';
    }
}

std::string emit_report(const std::vector<BenchRow>& rows, ReportFormat format) {
    std::ostringstream out;
    emit_report(rows, format, out);
    return out.str();
}

void emit_report_file(const std::vector<BenchRow>& rows, ReportFormat format,
                      const std::string& path) {
    const std::string text = emit_report(rows, format);
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open `" + path + "` for writing");
    }
    out << text;
    if (!out) {
        throw Error("failed writing `" + path + "`");
    }
}

}  // namespace bandix
