#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bandix/bench.hpp"
#include "bandix/direct.hpp"
#include "bandix/exact.hpp"
#include "bandix/iterative.hpp"

namespace py = pybind11;
using namespace bandix;

namespace {

using Diagonals = std::vector<std::vector<double>>;

AnyMatrix matrix_from(const Diagonals& d) {
    if (d.size() == 5) return PentaMatrix<double>(d[0], d[1], d[2], d[3], d[4]);
    if (d.size() == 3) return TriMatrix<double>(d[0], d[1], d[2]);
    throw InvalidInput("expected 5 (penta) or 3 (tri) diagonals, got " + std::to_string(d.size()));
}

std::vector<Rational> parse_all(const std::vector<std::string>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& s : v) out.push_back(Rational::parse(s));
    return out;
}

std::vector<std::string> print_all(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(q.to_string());
    return out;
}

py::dict outcome_dict(const MethodOutcome& o) {
    py::dict d;
    d["x"] = o.x;
    d["iterations"] = o.iterations;
    d["ops"] = o.ops.total();
    d["residual_inf"] = o.residual_inf;
    d["seconds"] = o.seconds;
    if (o.x_exact) d["x_exact"] = print_all(*o.x_exact);
    return d;
}

OuterSide parse_side(const std::string& s) {
    if (s == "split") return OuterSide::split;
    if (s == "lower") return OuterSide::lower;
    if (s == "upper") return OuterSide::upper;
    throw InvalidInput("unknown side `" + s + "`");
}

}  // namespace

PYBIND11_MODULE(_bandix, m) {
    m.doc() = "Band solvers for penta- and tridiagonal systems";

    // never destroyed: must outlive the interpreter's module teardown
    static auto* solver_error = new py::exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const SolverError& e) {
            py::set_error(*solver_error, (status_name(e) + ": " + e.what()).c_str());
        } catch (const InvalidInput& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    m.def("method_ids", &method_ids);

    m.def(
        "solve",
        [](const std::string& method, const Diagonals& diagonals, const std::vector<double>& b,
           double tol, std::size_t max_iter, int hb_bandwidth) {
            RunSettings s;
            s.tolerance = tol;
            s.max_iterations = max_iter;
            s.hb_bandwidth = hb_bandwidth;
            return outcome_dict(run_method(method, matrix_from(diagonals), ConstView<double>(b), s));
        },
        py::arg("method"), py::arg("diagonals"), py::arg("b"), py::arg("tol") = 1e-12,
        py::arg("max_iter") = 10000, py::arg("hb_bandwidth") = 2,
        "Solve with the named method; diagonals are listed from the lowest offset up.");

    m.def(
        "exact_solve",
        [](const std::vector<std::vector<std::string>>& diagonals, const std::vector<std::string>& b) {
            const auto rhs = parse_all(b);
            if (diagonals.size() == 5) {
                const PentaMatrix<Rational> a(parse_all(diagonals[0]), parse_all(diagonals[1]),
                                              parse_all(diagonals[2]), parse_all(diagonals[3]),
                                              parse_all(diagonals[4]));
                return print_all(exact_solve_spdm(a, ConstView<Rational>(rhs)).x);
            }
            if (diagonals.size() == 3) {
                const TriMatrix<Rational> t(parse_all(diagonals[0]), parse_all(diagonals[1]),
                                            parse_all(diagonals[2]));
                return print_all(exact_solve_stdm(t, ConstView<Rational>(rhs)).x);
            }
            throw InvalidInput("expected 5 or 3 diagonals");
        },
        py::arg("diagonals"), py::arg("b"),
        "Exact rational solve; entries are strings such as '3/4' or '0.5'.");

    m.def(
        "exact_det",
        [](const std::vector<std::vector<std::string>>& diagonals) {
            if (diagonals.size() == 5) {
                return exact_det_band(PentaMatrix<Rational>(
                                          parse_all(diagonals[0]), parse_all(diagonals[1]),
                                          parse_all(diagonals[2]), parse_all(diagonals[3]),
                                          parse_all(diagonals[4])))
                    .to_string();
            }
            if (diagonals.size() == 3) {
                return exact_det_band(TriMatrix<Rational>(parse_all(diagonals[0]),
                                                          parse_all(diagonals[1]),
                                                          parse_all(diagonals[2])))
                    .to_string();
            }
            throw InvalidInput("expected 5 or 3 diagonals");
        },
        py::arg("diagonals"));

    m.def(
        "generate",
        [](const std::string& family, std::size_t n, std::size_t k, std::uint64_t seed,
           const std::string& side) {
            const auto sys = generate({parse_family(family), n, k, seed, parse_side(side)});
            py::dict d;
            if (sys.is_penta()) {
                const auto& a = sys.penta();
                d["diagonals"] = Diagonals{{a.sub2().begin(), a.sub2().end()},
                                           {a.sub1().begin(), a.sub1().end()},
                                           {a.main().begin(), a.main().end()},
                                           {a.sup1().begin(), a.sup1().end()},
                                           {a.sup2().begin(), a.sup2().end()}};
            } else {
                const auto& t = sys.tri();
                d["diagonals"] = Diagonals{{t.sub1().begin(), t.sub1().end()},
                                           {t.main().begin(), t.main().end()},
                                           {t.sup1().begin(), t.sup1().end()}};
            }
            d["x_true"] = sys.x_true;
            d["b"] = sys.b;
            return d;
        },
        py::arg("family"), py::arg("n"), py::arg("k") = 0, py::arg("seed") = 1,
        py::arg("side") = "split");

    m.def(
        "verify_complexity",
        [](const std::string& method, const std::vector<std::size_t>& ns, std::size_t k,
           std::uint64_t seed) {
            const auto fit = verify_complexity(method, ns, k, seed);
            return py::make_tuple(fit.slope.to_string(), fit.intercept.to_string());
        },
        py::arg("method"), py::arg("ns"), py::arg("k") = 0, py::arg("seed") = 1,
        "Exact affine fit (slope, intercept) of the operation count as strings.");

    m.def(
        "bench",
        [](const std::vector<std::string>& methods, const std::string& family,
           const std::vector<std::size_t>& ns, std::size_t k, std::size_t reps, std::uint64_t seed,
           const std::string& format) {
            std::vector<GeneratorSpec> specs;
            for (std::size_t n : ns) specs.push_back({parse_family(family), n, k, seed});
            return emit_report(run_benchmark(methods, specs, reps), parse_format(format));
        },
        py::arg("methods"), py::arg("family"), py::arg("ns"), py::arg("k") = 0,
        py::arg("reps") = 5, py::arg("seed") = 1, py::arg("format") = "csv");
}
