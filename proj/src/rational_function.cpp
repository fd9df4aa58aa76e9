#include "bandix/rational_function.hpp"

#include <ostream>
#include <sstream>

#include "bandix/errors.hpp"

namespace bandix {

Polynomial::Polynomial(Rational c) {
    if (!c.is_zero()) {
        c_.push_back(std::move(c));
    }
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) {
        c_.pop_back();
    }
}

Rational Polynomial::eval(const Rational& t) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] += o.c_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) {
        c_.resize(o.c_.size());
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        c_[i] -= o.c_[i];
    }
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) {
        c *= s;
    }
    return *this;
}

Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& c : r.c_) {
        c = -c;
    }
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Polynomial(std::move(out));
}

void Polynomial::divmod(const Polynomial& dividend, const Polynomial& divisor,
                        Polynomial& quotient, Polynomial& remainder) {
    if (divisor.is_zero()) {
        throw InvalidInput("polynomial division by zero");
    }
    remainder = dividend;
    quotient = Polynomial{};
    if (remainder.c_.size() < divisor.c_.size()) {
        return;
    }
    std::vector<Rational> q(remainder.c_.size() - divisor.c_.size() + 1);
    const Rational lead = divisor.leading();
    while (!remainder.is_zero() && remainder.c_.size() >= divisor.c_.size()) {
        const std::size_t shift = remainder.c_.size() - divisor.c_.size();
        const Rational factor = remainder.leading() / lead;
        q[shift] = factor;
        for (std::size_t j = 0; j < divisor.c_.size(); ++j) {
            remainder.c_[shift + j] -= factor * divisor.c_[j];
        }
        // the leading term cancels exactly; drop it even if rounding were possible
        remainder.c_.pop_back();
        remainder.trim();
    }
    quotient = Polynomial(std::move(q));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q;
        Polynomial r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) {
        a *= Rational(1) / a.leading();
    }
    return a;
}

std::string Polynomial::to_string(char var) const {
    if (c_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) {
            continue;
        }
        if (!first) {
            os << (c_[i].sign() < 0 ? " - " : " + ");
        } else if (c_[i].sign() < 0) {
            os << "-";
        }
        const Rational mag = abs(c_[i]);
        const bool unit = mag == Rational(1);
        if (i == 0 || !unit) {
            os << mag;
        }
        if (i > 0) {
            if (!unit) {
                os << "*";
            }
            os << var;
            if (i > 1) {
                os << "^" << i;
            }
        }
        first = false;
    }
    return os.str();
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw InvalidInput("rational function with zero denominator");
    }
    normalize();
}

RationalFunction RationalFunction::indeterminate() {
    return {Polynomial::monomial(Rational(1), 1), Polynomial(Rational(1))};
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    if (!den_.is_constant()) {
        const Polynomial g = Polynomial::gcd(num_, den_);
        if (!g.is_constant()) {
            Polynomial q;
            Polynomial r;
            Polynomial::divmod(num_, g, q, r);
            num_ = std::move(q);
            Polynomial::divmod(den_, g, q, r);
            den_ = std::move(q);
        }
    }
    const Rational lead = den_.leading();
    if (lead != Rational(1)) {
        const Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

Rational RationalFunction::at_zero() const {
    const Rational d = den_.constant_term();
    if (d.is_zero()) {
        throw SolverError("rational function has a pole at t = 0: " + to_string());
    }
    return num_.constant_term() / d;
}

Rational RationalFunction::eval(const Rational& t) const {
    const Rational d = den_.eval(t);
    if (d.is_zero()) {
        throw SolverError("rational function has a pole at the evaluation point");
    }
    return num_.eval(t) / d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (den_.is_constant() && o.den_.is_constant()) {
        // both denominators are monic constants, i.e. exactly 1
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ -= o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ -= o.num_;
    } else {
        num_ = num_ * o.den_ - o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_constant() && o.is_constant()) {
        num_ = Polynomial(num_.constant_term() * o.num_.constant_term());
        return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) {
        throw InvalidInput("rational function division by zero");
    }
    if (is_constant() && o.is_constant()) {
        num_ = Polynomial(num_.constant_term() / o.num_.constant_term());
        return *this;
    }
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant()) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

}  // namespace bandix
