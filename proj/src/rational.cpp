#include "bandix/rational.hpp"

#include <bit>
#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

#include "bandix/errors.hpp"

namespace bandix {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) {
        throw InvalidInput("rational with zero denominator");
    }
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw InvalidInput("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rational Rational::from_double(double d) {
    if (!std::isfinite(d)) {
        throw InvalidInput("cannot convert non-finite double to rational");
    }
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), d);
    return Rational(std::move(q));
}

namespace {

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw InvalidInput("malformed integer '" + std::string(s) + "'");
    }
    mpz_class z(std::string(s), 10);
    return neg ? mpz_class(-z) : z;
}

Rational parse_decimal(std::string_view s) {
    const std::string original(s);
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
        const mpz_class e = parse_integer(s.substr(epos + 1));
        if (!e.fits_slong_p() || abs(e) > 100000) {
            throw InvalidInput("exponent out of range in '" + original + "'");
        }
        exponent = e.get_si();
        s = s.substr(0, epos);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        const auto ip = s.substr(0, dot);
        const auto fp = s.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
            (!fp.empty() && !all_digits(fp))) {
            throw InvalidInput("malformed number '" + original + "'");
        }
        digits = std::string(ip) + std::string(fp);
        exponent -= static_cast<long>(fp.size());
    } else {
        if (!all_digits(s)) {
            throw InvalidInput("malformed number '" + original + "'");
        }
        digits = std::string(s);
    }
    mpq_class q{mpz_class(digits, 10)};
    if (exponent > 0) {
        q *= pow10(static_cast<unsigned long>(exponent));
    } else if (exponent < 0) {
        q /= pow10(static_cast<unsigned long>(-exponent));
    }
    if (neg) {
        q = -q;
    }
    return Rational(std::move(q));
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
        text.remove_prefix(1);
    }
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
        text.remove_suffix(1);
    }
    if (text.empty()) {
        throw InvalidInput("empty number literal");
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0) {
            throw InvalidInput("zero denominator in '" + std::string(text) + "'");
        }
        return Rational(mpq_class(num, den));
    }
    return parse_decimal(text);
}

double Rational::to_double() const {
    // mpq_get_d truncates toward zero; pick the nearer of it and its outward neighbour.
    const double t = mpq_get_d(v_.get_mpq_t());
    if (sgn(v_) == 0) {
        return 0.0;
    }
    if (!std::isfinite(t)) {
        return t;
    }
    const double away = std::nextafter(t, sgn(v_) > 0 ? std::numeric_limits<double>::infinity()
                                                       : -std::numeric_limits<double>::infinity());
    if (!std::isfinite(away)) {
        return t;
    }
    mpq_class qt;
    mpq_class qa;
    mpq_set_d(qt.get_mpq_t(), t);
    mpq_set_d(qa.get_mpq_t(), away);
    const mpq_class dt = abs(v_ - qt);
    const mpq_class da = abs(qa - v_);
    const int c = cmp(dt, da);
    if (c < 0) {
        return t;
    }
    if (c > 0) {
        return away;
    }
    // tie: choose the even significand
    const auto bits = std::bit_cast<std::uint64_t>(t);
    return (bits & 1) == 0 ? t : away;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_.get_str(); }

}  // namespace bandix
