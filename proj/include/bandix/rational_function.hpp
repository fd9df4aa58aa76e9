#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "bandix/rational.hpp"

namespace bandix {

/// Dense univariate polynomial over the rationals; coefficient i multiplies t^i.
/// Trailing zero coefficients are never stored, so the zero polynomial is empty.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(Rational c);  // NOLINT(google-explicit-constructor)
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial monomial(const Rational& c, std::size_t degree);

    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept { return c_.size() <= 1; }
    /// degree of the zero polynomial is reported as 0
    [[nodiscard]] std::size_t degree() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }
    [[nodiscard]] const std::vector<Rational>& coeffs() const noexcept { return c_; }
    [[nodiscard]] Rational leading() const { return c_.empty() ? Rational{} : c_.back(); }
    [[nodiscard]] Rational constant_term() const { return c_.empty() ? Rational{} : c_.front(); }
    [[nodiscard]] Rational eval(const Rational& t) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Euclidean division; `divisor` must be nonzero.
    static void divmod(const Polynomial& dividend, const Polynomial& divisor, Polynomial& quotient,
                       Polynomial& remainder);
    /// Monic greatest common divisor (zero only if both inputs are zero).
    static Polynomial gcd(Polynomial a, Polynomial b);

    [[nodiscard]] std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// p(t)/q(t) over the rationals, kept gcd-reduced with a monic denominator.
///
/// Used as the scalar of the exact band solvers: a zero pivot is replaced by
/// the indeterminate t and the solution is read off in the limit t -> 0.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT
    RationalFunction(long c) : RationalFunction(Rational(c)) {}              // NOLINT
    RationalFunction(int c) : RationalFunction(Rational(c)) {}               // NOLINT
    RationalFunction(Polynomial num, Polynomial den);

    /// the indeterminate t
    static RationalFunction indeterminate();

    [[nodiscard]] const Polynomial& numerator() const noexcept { return num_; }
    [[nodiscard]] const Polynomial& denominator() const noexcept { return den_; }
    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] bool is_constant() const noexcept {
        return num_.is_constant() && den_.is_constant();
    }
    /// Value of the limit t -> 0. Throws if the reduced denominator vanishes at 0.
    [[nodiscard]] Rational at_zero() const;
    [[nodiscard]] Rational eval(const Rational& t) const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) {
        return a += b;
    }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) {
        return a -= b;
    }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) {
        return a *= b;
    }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) {
        return a /= b;
    }
    friend RationalFunction operator-(const RationalFunction& a);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    [[nodiscard]] std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

private:
    void normalize();
    Polynomial num_;
    Polynomial den_;
};

inline bool is_zero(const RationalFunction& f) noexcept { return f.is_zero(); }
inline double to_double(const RationalFunction& f) { return f.at_zero().to_double(); }

}  // namespace bandix
