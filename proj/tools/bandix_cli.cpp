#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bandix/band_ops.hpp"
#include "bandix/bench.hpp"
#include "bandix/exact.hpp"
#include "bandix/matrix_io.hpp"

namespace {

constexpr int kExitSolver = 2;
constexpr int kExitInput = 3;

using namespace bandix;

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::vector<std::size_t> parse_sizes(const std::string& s) {
    std::vector<std::size_t> out;
    for (const auto& item : split_list(s)) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item[0] == '-') {
            throw InvalidInput("invalid size `" + item + "`");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) throw InvalidInput("empty size list");
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct SolveArgs {
    std::string method;
    std::string matrix;
    double tol = 1e-12;
    std::size_t max_iter = 10000;
    bool per_iter = false;
    int hb_bandwidth = 2;
    std::size_t dense_cap = 8000;
};

int run_solve(const SolveArgs& args) {
    if (!is_method(args.method)) {
        throw InvalidInput("unknown method `" + args.method + "`");
    }
    const MatrixFile file = read_matrix_file(args.matrix);
    const std::size_t n = file.n();
    Vector<Rational> b;
    if (file.rhs) {
        b = *file.rhs;
    } else {
        const Vector<Rational> ones(n, Rational(1));
        b = std::visit(
            [&](const auto& m) {
                using M = std::decay_t<decltype(m)>;
                if constexpr (std::is_same_v<M, PentaMatrix<Rational>>) {
                    return penta_matvec(m, ConstView<Rational>(ones));
                } else {
                    return tri_matvec(m, ConstView<Rational>(ones));
                }
            },
            file.matrix);
    }

    if (is_exact_method(args.method)) {
        ExactSolveResult res;
        if (args.method == "spdm") {
            const auto a = file.is_penta() ? std::get<0>(file.matrix)
                                           : std::get<1>(file.matrix).to_penta();
            res = exact_solve_spdm(a, ConstView<Rational>(b));
        } else {
            if (file.is_penta()) throw InvalidInput("stdm requires a tridiagonal matrix");
            res = exact_solve_stdm(std::get<1>(file.matrix), ConstView<Rational>(b));
        }
        std::cout << "# method " << args.method << "\n# n " << n << "\n# pivot_substitutions "
                  << res.pivot_substitutions << "\n# ops " << res.ops.total() << '\n';
        for (const auto& v : res.x) std::cout << v.to_string() << '\n';
        return 0;
    }

    RunSettings settings;
    settings.tolerance = args.tol;
    settings.max_iterations = args.max_iter;
    settings.hb_bandwidth = args.hb_bandwidth;
    settings.dense_cap = args.dense_cap;
    if (args.per_iter) {
        std::cout << "k,residual_inf\n";
        settings.on_iteration = [](std::size_t k, double r) {
            std::cout << k << ',' << fmt(r) << '\n';
        };
    }
    const AnyMatrix a = file.is_penta() ? AnyMatrix(to_float(std::get<0>(file.matrix)))
                                        : AnyMatrix(to_float(std::get<1>(file.matrix)));
    const auto fb = to_float(ConstView<Rational>(b));
    const MethodOutcome out = run_method(args.method, a, ConstView<double>(fb), settings);
    std::cout << "# method " << args.method << "\n# n " << n << "\n# iterations "
              << out.iterations << "\n# residual_inf " << fmt(out.residual_inf) << "\n# ops "
              << out.ops.total() << "\n# seconds " << fmt(out.seconds) << '\n';
    for (double v : out.x) std::cout << fmt(v) << '\n';
    return 0;
}

int run_det(const std::string& path) {
    const MatrixFile file = read_matrix_file(path);
    OpCounter ops;
    const Rational det = file.is_penta() ? exact_det_band(std::get<0>(file.matrix), ops)
                                         : exact_det_band(std::get<1>(file.matrix), ops);
    std::cout << det.to_string() << "\n# ops " << ops.total() << '\n';
    return 0;
}

struct BenchArgs {
    std::string methods;
    std::string family = "dd-full-penta";
    std::string ns = "1000";
    std::size_t k = 0;
    std::size_t reps = 5;
    std::uint64_t seed = 1;
    std::string format = "csv";
    std::string out;
    double tol = 1e-12;
    std::size_t max_iter = 10000;
    int hb_bandwidth = 2;
    bool parallel = false;
};

int run_bench(const BenchArgs& args) {
    const auto methods = split_list(args.methods);
    if (methods.empty()) throw InvalidInput("no methods given");
    const Family family = parse_family(args.family);
    const ReportFormat format = parse_format(args.format);
    std::vector<GeneratorSpec> specs;
    for (std::size_t n : parse_sizes(args.ns)) {
        specs.push_back(GeneratorSpec{family, n, args.k, args.seed, OuterSide::split});
    }
    RunSettings settings;
    settings.tolerance = args.tol;
    settings.max_iterations = args.max_iter;
    settings.hb_bandwidth = args.hb_bandwidth;
    const auto rows = run_benchmark(methods, specs, args.reps, settings, args.parallel);
    if (args.out.empty()) {
        emit_report(rows, format, std::cout);
    } else {
        emit_report_file(rows, format, args.out);
    }
    return 0;
}

struct ComplexityArgs {
    std::string method;
    std::string ns = "10,100,1000";
    std::size_t k = 0;
    std::uint64_t seed = 1;
    std::string family;
    std::string side = "split";
};

int run_complexity(const ComplexityArgs& args) {
    OuterSide side = OuterSide::split;
    if (args.side == "lower") {
        side = OuterSide::lower;
    } else if (args.side == "upper") {
        side = OuterSide::upper;
    } else if (args.side != "split") {
        throw InvalidInput("unknown side `" + args.side + "`");
    }
    std::optional<Family> family;
    if (!args.family.empty()) family = parse_family(args.family);
    const auto fit =
        verify_complexity(args.method, parse_sizes(args.ns), args.k, args.seed, family, side);
    std::cout << "method " << args.method << "\nslope " << fit.slope.to_string()
              << "\nintercept " << fit.intercept.to_string() << "\nmax_residual "
              << fmt(fit.max_residual) << "\nn,ops\n";
    for (const auto& [n, ops] : fit.points) std::cout << n << ',' << ops << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bandix: band-matrix solvers and benchmark harness"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "solve one system from a matrix file");
    s->add_option("--method", solve.method, "method id")->required();
    s->add_option("--matrix", solve.matrix, "matrix text file")->required();
    s->add_option("--tol", solve.tol, "iterative tolerance");
    s->add_option("--max-iter", solve.max_iter, "iteration budget");
    s->add_flag("--report-per-iter", solve.per_iter, "print k,residual pairs as csv");
    s->add_option("--hb-bandwidth", solve.hb_bandwidth, "bandwidth of banded inverses");
    s->add_option("--dense-cap", solve.dense_cap, "largest n accepted by sip-hb-dense");

    std::string det_path;
    auto* d = app.add_subcommand("det", "exact determinant of a matrix file");
    d->add_option("--matrix", det_path, "matrix text file")->required();

    BenchArgs bench;
    auto* b = app.add_subcommand("bench", "timed runs on generated systems");
    b->add_option("--methods", bench.methods, "comma-separated method ids")->required();
    b->add_option("--family", bench.family, "generator family");
    b->add_option("--n", bench.ns, "comma-separated sizes");
    b->add_option("--k", bench.k, "outer nonzeros (sparse-outer-penta)");
    b->add_option("--reps", bench.reps, "timed repetitions");
    b->add_option("--seed", bench.seed, "generator seed");
    b->add_option("--format", bench.format, "csv, md or plot");
    b->add_option("--out", bench.out, "output path (default stdout)");
    b->add_option("--tol", bench.tol, "iterative tolerance");
    b->add_option("--max-iter", bench.max_iter, "iteration budget");
    b->add_option("--hb-bandwidth", bench.hb_bandwidth, "bandwidth of banded inverses");
    b->add_flag("--parallel-instances", bench.parallel, "run pairs concurrently");

    ComplexityArgs cx;
    auto* v = app.add_subcommand("verify-complexity", "exact affine fit of op counts");
    v->add_option("--method", cx.method, "method id")->required();
    v->add_option("--n", cx.ns, "comma-separated sizes");
    v->add_option("--k", cx.k, "outer nonzeros");
    v->add_option("--seed", cx.seed, "generator seed");
    v->add_option("--family", cx.family, "override the instance family");
    v->add_option("--side", cx.side, "outer placement: split, lower or upper");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*s) return run_solve(solve);
        if (*d) return run_det(det_path);
        if (*b) return run_bench(bench);
        if (*v) return run_complexity(cx);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const SolverError& e) {
        std::cerr << "error: " << status_name(e) << ": " << e.what() << '\n';
        return kExitSolver;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSolver;
    }
    return 0;
}
