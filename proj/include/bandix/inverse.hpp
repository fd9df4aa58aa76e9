#pragma once

#include <cstddef>
#include <vector>

#include "bandix/band_matrix.hpp"
#include "bandix/iterative.hpp"
#include "bandix/op_counter.hpp"
#include "bandix/solve_report.hpp"

namespace bandix {

/// Square row-major matrix of doubles.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n);

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix lower_of(const BandFactors<double>& lu);
    static DenseMatrix upper_of(const BandFactors<double>& lu);

    std::size_t n() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    Vector<double> apply(ConstView<double> x, OpCounter& ops) const;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// Product with both operands' zeros skipped; triangular inputs cost about a sixth of n^3.
DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b, OpCounter& ops);

/// Max absolute row sum.
double inf_norm(const DenseMatrix& m);

/// n x n matrix that can hold nonzeros only on the offsets lo..hi.
///
/// Diagonal o is stored as a length-n array indexed by row, slot i holding
/// entry (i, i + o); slots whose column falls outside the matrix stay zero.
class BandMatrix {
public:
    BandMatrix() = default;
    BandMatrix(std::size_t n, int lo, int hi);

    static BandMatrix lower_of(const BandFactors<double>& lu);
    static BandMatrix upper_of(const BandFactors<double>& lu);

    std::size_t n() const { return n_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    std::size_t stored_diagonals() const { return static_cast<std::size_t>(hi_ - lo_ + 1); }

    /// Entry (i, i + o); zero for offsets outside lo..hi.
    double get(std::size_t i, int o) const;
    void set(std::size_t i, int o, double v);
    double at(std::size_t i, std::size_t j) const;

    Vector<double> apply(ConstView<double> x, OpCounter& ops) const;
    DenseMatrix to_dense() const;

private:
    std::size_t n_ = 0;
    int lo_ = 0;
    int hi_ = 0;
    std::vector<double> data_;
};

/// a * b restricted to the offsets lo..hi of the result.
BandMatrix multiply_truncated(const BandMatrix& a, const BandMatrix& b, int lo, int hi,
                              OpCounter& ops);

double inf_norm(const BandMatrix& m);

template <class M>
struct InversionReport {
    M inverse;
    std::size_t iterations = 0;
    double residual = 0.0;  // ||I - M X||_inf of the returned iterate
    std::vector<double> residual_history;  // entry n is ||I - M X_n||_inf
    bool stagnated = false;
    OpCounter ops;
};

struct HbOptions {
    double tolerance = 1e-12;
    std::size_t max_iterations = 60;
};

struct HbBandedOptions {
    double tolerance = 1e-12;
    std::size_t max_iterations = 60;
    int bandwidth = 2;
    /// Return the best iterate instead of throwing Stagnated.
    bool accept_stagnation = false;
};

/// Hotelling-Bodewig iteration X <- X (2I - M X) from X0 = diag(1/m_ii).
///
/// Each step forms R = I - M X, stops when ||R||_inf < tolerance and otherwise
/// sets X <- X (I + R), which is the same update.
InversionReport<DenseMatrix> hb_invert_dense(const DenseMatrix& m, const HbOptions& opt = {});

/// The same recurrence with X kept on offsets -w..0 (lower M) or 0..w (upper M).
///
/// M X is formed exactly, so the reported residual is the true one. The
/// iteration stops below tolerance or when three steps improve the residual
/// by less than one percent.
InversionReport<BandMatrix> hb_invert_banded(const BandMatrix& m, const HbBandedOptions& opt = {});

enum class HbMode { dense, banded };

struct SipHbOptions {
    HbMode mode = HbMode::dense;
    std::size_t dense_cap = 8000;
    HbOptions dense;
    HbBandedOptions banded{1e-12, 60, 2, true};
};

struct SipHbReport {
    SolveReport<double> solve;
    std::size_t l_iterations = 0;
    std::size_t u_iterations = 0;
    double l_residual = 0.0;
    double u_residual = 0.0;
};

/// SIP with the triangular solves replaced by products with approximate inverses.
///
/// Each sweep applies x <- x + XU (XL (b - A x)). With exact inverses this is
/// the same iterate as XU XL (K x + b); written as a correction its fixed
/// point stays the exact solution when XL and XU are only approximate.
SipHbReport sip_hb_solve(const PentaMatrix<double>& a, ConstView<double> b,
                         const SipConfig& cfg = {}, const SipHbOptions& opt = {});

}  // namespace bandix
