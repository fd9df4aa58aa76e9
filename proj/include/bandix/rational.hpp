#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bandix {

/// Exact rational number on top of GMP, always in lowest terms.
///
/// Kept as a value type without expression templates so that generic solver
/// code written with `auto` stays safe.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : v_(v) {}   // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Lossless: every finite binary64 value is a dyadic rational.
    static Rational from_double(double d);
    /// Accepts `p/q`, integers, decimals and scientific notation (`-1.5e-3`).
    static Rational parse(std::string_view text);

    /// Correctly rounded (nearest, ties to even) conversion to binary64.
    [[nodiscard]] double to_double() const;
    [[nodiscard]] std::string to_string() const { return v_.get_str(); }
    [[nodiscard]] int sign() const noexcept { return sgn(v_); }
    [[nodiscard]] bool is_zero() const noexcept { return sgn(v_) == 0; }
    [[nodiscard]] bool is_integer() const noexcept { return v_.get_den() == 1; }
    [[nodiscard]] const mpq_class& raw() const noexcept { return v_; }

    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

inline bool is_zero(const Rational& r) noexcept { return r.is_zero(); }
inline double to_double(const Rational& r) { return r.to_double(); }
inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace bandix
