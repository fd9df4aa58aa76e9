#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bandix/band_matrix.hpp"
#include "bandix/op_counter.hpp"
#include "bandix/rational.hpp"

namespace bandix {

enum class Family {
    dd_full_penta,       // every in-band entry nonzero, strictly diagonally dominant
    sparse_outer_penta,  // full inner tridiagonal, exactly k outer nonzeros
    dd_tri,
    hard_nonsingular,    // small integers, main[0] = 0, exact determinant nonzero
    gapped_penta,        // 2 x (n/2) grid stencil: sub1/sup1 vanish on alternate rows
};

/// Where sparse-outer-penta puts its k outer nonzeros.
enum class OuterSide { split, lower, upper };

std::string family_name(Family f);
Family parse_family(std::string_view name);

struct GeneratorSpec {
    Family family = Family::dd_full_penta;
    std::size_t n = 10;
    std::size_t k = 0;
    std::uint64_t seed = 1;
    OuterSide side = OuterSide::split;
};

using AnyMatrix = std::variant<PentaMatrix<double>, TriMatrix<double>>;

/// A generated system with manufactured solution.
///
/// Float entries lie on a dyadic grid (multiples of 2^-23, integers for
/// hard-nonsingular) small enough that every sum and product forming
/// b = A x_true is exact in double precision. The exact system is therefore
/// available losslessly through to_exact.
struct TestSystem {
    GeneratorSpec spec;
    AnyMatrix matrix;
    Vector<double> x_true;
    Vector<double> b;

    [[nodiscard]] bool is_penta() const { return matrix.index() == 0; }
    [[nodiscard]] const PentaMatrix<double>& penta() const { return std::get<0>(matrix); }
    [[nodiscard]] const TriMatrix<double>& tri() const { return std::get<1>(matrix); }
};

TestSystem generate(const GeneratorSpec& spec);

/// Recognised method identifiers, in display order.
const std::vector<std::string>& method_ids();
bool is_method(std::string_view id);
bool is_exact_method(std::string_view id);

struct RunSettings {
    double tolerance = 1e-12;
    std::size_t max_iterations = 10000;
    int hb_bandwidth = 2;
    std::size_t dense_cap = 8000;
    std::function<void(std::size_t, double)> on_iteration;
};

struct MethodOutcome {
    Vector<double> x;
    std::optional<Vector<Rational>> x_exact;  // exact methods only
    std::size_t iterations = 0;
    OpCounter ops;
    OpCounter iteration_ops;
    double seconds = 0.0;
    double residual_inf = 0.0;
};

/// Runs one method on a float system. Exact methods lift the data losslessly.
MethodOutcome run_method(std::string_view method, const AnyMatrix& a, ConstView<double> b,
                         const RunSettings& settings = {});

struct BenchRow {
    std::string method;
    std::string family;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t reps = 0;
    double mean_s = 0.0;
    double min_s = 0.0;
    double error_inf = 0.0;
    std::size_t iters = 0;
    std::uint64_t ops = 0;
    std::string status = "ok";
};

/// One warm-up run, then `reps` timed runs per (method, spec) pair.
///
/// Solver failures are recorded in the row status instead of aborting. With
/// `parallel_instances` the pairs run on separate threads; their timings are
/// then not comparable with each other.
std::vector<BenchRow> run_benchmark(const std::vector<std::string>& methods,
                                    const std::vector<GeneratorSpec>& specs, std::size_t reps,
                                    const RunSettings& settings = {},
                                    bool parallel_instances = false);

struct FitResult {
    Rational slope;
    Rational intercept;
    double max_residual = 0.0;
    std::vector<std::pair<std::size_t, std::uint64_t>> points;  // (n, ops)
};

/// Exact least-squares line through the op counts; operation counts of SIP
/// methods are taken per iteration. Throws NonAffine unless every point lies
/// on the line.
FitResult fit_affine(const std::vector<std::pair<std::size_t, std::uint64_t>>& points);

/// Default instance family used to measure a method's op count.
Family complexity_family(std::string_view method);

FitResult verify_complexity(std::string_view method, const std::vector<std::size_t>& ns,
                            std::size_t fixed_k, std::uint64_t seed = 1,
                            std::optional<Family> family = std::nullopt,
                            OuterSide side = OuterSide::split);

enum class ReportFormat { csv, markdown, plot };
ReportFormat parse_format(std::string_view name);

void emit_report(const std::vector<BenchRow>& rows, ReportFormat format, std::ostream& out);
std::string emit_report(const std::vector<BenchRow>& rows, ReportFormat format);
/// Writes to `path`; nothing is created when `rows` is empty.
void emit_report_file(const std::vector<BenchRow>& rows, ReportFormat format,
                      const std::string& path);

/// Column names of the csv report.
const std::vector<std::string>& csv_columns();

}  // namespace bandix
