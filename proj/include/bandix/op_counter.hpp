#pragma once

#include <cstdint>

namespace bandix {

/// Scalar-operation tally for one solve.
///
/// Each executed scalar add, sub, mul or div in a solver routine bumps the
/// matching field by one. Unary negation is counted as a subtraction.
/// Norms, comparisons and report assembly are not counted.
struct OpCounter {
    std::uint64_t adds = 0;
    std::uint64_t subs = 0;
    std::uint64_t muls = 0;
    std::uint64_t divs = 0;

    void add(std::uint64_t k = 1) noexcept { adds += k; }
    void sub(std::uint64_t k = 1) noexcept { subs += k; }
    void mul(std::uint64_t k = 1) noexcept { muls += k; }
    void div(std::uint64_t k = 1) noexcept { divs += k; }

    /// fused a -= m * x, the dominant pattern in band elimination
    void axpy(std::uint64_t k = 1) noexcept {
        muls += k;
        subs += k;
    }

    [[nodiscard]] std::uint64_t total() const noexcept { return adds + subs + muls + divs; }
    void reset() noexcept { *this = OpCounter{}; }

    OpCounter& operator+=(const OpCounter& o) noexcept {
        adds += o.adds;
        subs += o.subs;
        muls += o.muls;
        divs += o.divs;
        return *this;
    }
    friend OpCounter operator-(OpCounter a, const OpCounter& b) noexcept {
        a.adds -= b.adds;
        a.subs -= b.subs;
        a.muls -= b.muls;
        a.divs -= b.divs;
        return a;
    }
    friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

}  // namespace bandix
