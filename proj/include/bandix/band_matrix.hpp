#pragma once

#include <cstddef>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "bandix/errors.hpp"
#include "bandix/scalar.hpp"

namespace bandix {

template <class S>
using Vector = std::vector<S>;

/// Read-only view parameter that does not take part in template deduction,
/// so a `Vector<S>` binds to it once S is fixed by a matrix argument.
template <class S>
using ConstView = std::span<const std::type_identity_t<S>>;

/// N x N matrix with nonzeros on offsets -2..+2, stored as five diagonals.
///
/// Diagonal arrays are indexed by the smaller of the row/column index:
///   sub2[k] = A(k+2, k),  sub1[k] = A(k+1, k),  main[k] = A(k, k),
///   sup1[k] = A(k, k+1),  sup2[k] = A(k, k+2).
template <Field S>
class PentaMatrix {
public:
    using scalar_type = S;

    PentaMatrix(std::vector<S> sub2, std::vector<S> sub1, std::vector<S> main,
                std::vector<S> sup1, std::vector<S> sup2)
        : n_(main.size()), sub2_(std::move(sub2)), sub1_(std::move(sub1)),
          main_(std::move(main)), sup1_(std::move(sup1)), sup2_(std::move(sup2)) {
        if (n_ < 3) {
            throw InvalidInput("pentadiagonal matrix needs n >= 3, got " + std::to_string(n_));
        }
        check("sub2", sub2_, n_ - 2);
        check("sub1", sub1_, n_ - 1);
        check("sup1", sup1_, n_ - 1);
        check("sup2", sup2_, n_ - 2);
    }

    static PentaMatrix zeros(std::size_t n) {
        if (n < 3) {
            throw InvalidInput("pentadiagonal matrix needs n >= 3, got " + std::to_string(n));
        }
        return PentaMatrix(std::vector<S>(n - 2, S(0)), std::vector<S>(n - 1, S(0)),
                           std::vector<S>(n, S(0)), std::vector<S>(n - 1, S(0)),
                           std::vector<S>(n - 2, S(0)));
    }
    static PentaMatrix identity(std::size_t n) {
        if (n < 3) {
            throw InvalidInput("pentadiagonal matrix needs n >= 3, got " + std::to_string(n));
        }
        return PentaMatrix(std::vector<S>(n - 2, S(0)), std::vector<S>(n - 1, S(0)),
                           std::vector<S>(n, S(1)), std::vector<S>(n - 1, S(0)),
                           std::vector<S>(n - 2, S(0)));
    }

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::span<const S> sub2() const noexcept { return sub2_; }
    [[nodiscard]] std::span<const S> sub1() const noexcept { return sub1_; }
    [[nodiscard]] std::span<const S> main() const noexcept { return main_; }
    [[nodiscard]] std::span<const S> sup1() const noexcept { return sup1_; }
    [[nodiscard]] std::span<const S> sup2() const noexcept { return sup2_; }

    /// A(i, j); zero outside the band.
    [[nodiscard]] S at(std::size_t i, std::size_t j) const {
        if (i == j) return main_[i];
        if (i == j + 1) return sub1_[j];
        if (i == j + 2) return sub2_[j];
        if (j == i + 1) return sup1_[i];
        if (j == i + 2) return sup2_[i];
        return S(0);
    }

    /// Same matrix with every entry mapped through `f`.
    template <class F>
    [[nodiscard]] auto map(F&& f) const {
        using T = std::decay_t<decltype(f(main_[0]))>;
        auto conv = [&](const std::vector<S>& v) {
            std::vector<T> out;
            out.reserve(v.size());
            for (const auto& x : v) out.push_back(f(x));
            return out;
        };
        return PentaMatrix<T>(conv(sub2_), conv(sub1_), conv(main_), conv(sup1_), conv(sup2_));
    }

    friend bool operator==(const PentaMatrix&, const PentaMatrix&) = default;

private:
    static void check(const char* name, const std::vector<S>& v, std::size_t expected) {
        if (v.size() != expected) {
            throw DimensionMismatch(name, expected, v.size());
        }
    }

    std::size_t n_;
    std::vector<S> sub2_, sub1_, main_, sup1_, sup2_;
};

/// N x N tridiagonal matrix: sub1[k] = A(k+1, k), main[k] = A(k, k), sup1[k] = A(k, k+1).
template <Field S>
class TriMatrix {
public:
    using scalar_type = S;

    TriMatrix(std::vector<S> sub1, std::vector<S> main, std::vector<S> sup1)
        : n_(main.size()), sub1_(std::move(sub1)), main_(std::move(main)), sup1_(std::move(sup1)) {
        if (n_ < 2) {
            throw InvalidInput("tridiagonal matrix needs n >= 2, got " + std::to_string(n_));
        }
        if (sub1_.size() != n_ - 1) throw DimensionMismatch("sub1", n_ - 1, sub1_.size());
        if (sup1_.size() != n_ - 1) throw DimensionMismatch("sup1", n_ - 1, sup1_.size());
    }

    static TriMatrix identity(std::size_t n) {
        if (n < 2) {
            throw InvalidInput("tridiagonal matrix needs n >= 2, got " + std::to_string(n));
        }
        return TriMatrix(std::vector<S>(n - 1, S(0)), std::vector<S>(n, S(1)),
                         std::vector<S>(n - 1, S(0)));
    }

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::span<const S> sub1() const noexcept { return sub1_; }
    [[nodiscard]] std::span<const S> main() const noexcept { return main_; }
    [[nodiscard]] std::span<const S> sup1() const noexcept { return sup1_; }

    [[nodiscard]] S at(std::size_t i, std::size_t j) const {
        if (i == j) return main_[i];
        if (i == j + 1) return sub1_[j];
        if (j == i + 1) return sup1_[i];
        return S(0);
    }

    template <class F>
    [[nodiscard]] auto map(F&& f) const {
        using T = std::decay_t<decltype(f(main_[0]))>;
        auto conv = [&](const std::vector<S>& v) {
            std::vector<T> out;
            out.reserve(v.size());
            for (const auto& x : v) out.push_back(f(x));
            return out;
        };
        return TriMatrix<T>(conv(sub1_), conv(main_), conv(sup1_));
    }

    /// The same matrix viewed as pentadiagonal with empty outer diagonals (needs n >= 3).
    [[nodiscard]] PentaMatrix<S> to_penta() const {
        return PentaMatrix<S>(std::vector<S>(n_ >= 2 ? n_ - 2 : 0, S(0)), sub1_, main_, sup1_,
                              std::vector<S>(n_ >= 2 ? n_ - 2 : 0, S(0)));
    }

    friend bool operator==(const TriMatrix&, const TriMatrix&) = default;

private:
    std::size_t n_;
    std::vector<S> sub1_, main_, sup1_;
};

/// Unit-lower L (two subdiagonals) and upper U (main + two superdiagonals).
/// Index convention matches PentaMatrix: l_sub1[k] = L(k+1, k), u_sup2[k] = U(k, k+2).
template <Field S>
struct BandFactors {
    std::vector<S> l_sub1;
    std::vector<S> l_sub2;
    std::vector<S> u_main;
    std::vector<S> u_sup1;
    std::vector<S> u_sup2;

    [[nodiscard]] std::size_t n() const noexcept { return u_main.size(); }

    static BandFactors identity(std::size_t n) {
        return BandFactors{std::vector<S>(n - 1, S(0)), std::vector<S>(n - 2, S(0)),
                           std::vector<S>(n, S(1)), std::vector<S>(n - 1, S(0)),
                           std::vector<S>(n - 2, S(0))};
    }

    [[nodiscard]] S lower_at(std::size_t i, std::size_t j) const {
        if (i == j) return S(1);
        if (i == j + 1) return l_sub1[j];
        if (i == j + 2) return l_sub2[j];
        return S(0);
    }
    [[nodiscard]] S upper_at(std::size_t i, std::size_t j) const {
        if (i == j) return u_main[i];
        if (j == i + 1) return u_sup1[i];
        if (j == i + 2) return u_sup2[i];
        return S(0);
    }

    friend bool operator==(const BandFactors&, const BandFactors&) = default;
};

}  // namespace bandix
