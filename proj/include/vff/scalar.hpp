#pragma once

/*
 * Elements of the field Q(i)(g,a): x = re + i*im, where re and im are
 * reduced fractions of bivariate polynomials.
 *
 * Canonical form: numerator and denominator coprime, denominator
 * integer-primitive with positive leading coefficient in graded-lex
 * order. The form is unique, so structural equality is field equality.
 *
 * The module also provides the standard derived quantities of the
 * parametrisation: the background charge Q = g/2 + 2/g, the central
 * charge c = 1 + 6Q^2, conformal weights D(a) = a/2*(Q - a/2), and the
 * Kac values a_{r,s} = (1-r)g/2 + (1-s)*2/g.
 */

#include <ostream>
#include <string>
#include <utility>

#include "vff/bivariate_poly.hpp"
#include "vff/errors.hpp"
#include "vff/rational.hpp"

namespace vff {

// A reduced fraction of bivariate polynomials.
class PolyFraction {
public:
    PolyFraction() : num_(), den_(1) {}
    PolyFraction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    PolyFraction(const BivariatePoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    PolyFraction(BivariatePoly num, BivariatePoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero("zero polynomial denominator");
        reduce();
    }

    const BivariatePoly& num() const { return num_; }
    const BivariatePoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend bool operator==(const PolyFraction& x, const PolyFraction& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const PolyFraction& x, const PolyFraction& y) { return !(x == y); }

    PolyFraction operator-() const {
        PolyFraction r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend PolyFraction operator+(const PolyFraction& x, const PolyFraction& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        if (x.den_ == y.den_) return PolyFraction(x.num_ + y.num_, x.den_);
        const BivariatePoly d = BivariatePoly::gcd(x.den_, y.den_);
        if (d.is_constant()) return PolyFraction(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
        const BivariatePoly xd = *BivariatePoly::divide_exact(x.den_, d);
        const BivariatePoly yd = *BivariatePoly::divide_exact(y.den_, d);
        return PolyFraction(x.num_ * yd + y.num_ * xd, xd * y.den_);
    }
    friend PolyFraction operator-(const PolyFraction& x, const PolyFraction& y) { return x + (-y); }

    friend PolyFraction operator*(const PolyFraction& x, const PolyFraction& y) {
        if (x.is_zero() || y.is_zero()) return {};
        const BivariatePoly g1 = BivariatePoly::gcd(x.num_, y.den_);
        const BivariatePoly g2 = BivariatePoly::gcd(y.num_, x.den_);
        PolyFraction r;
        r.num_ = *BivariatePoly::divide_exact(x.num_, g1) * *BivariatePoly::divide_exact(y.num_, g2);
        r.den_ = *BivariatePoly::divide_exact(x.den_, g2) * *BivariatePoly::divide_exact(y.den_, g1);
        r.rescale();
        return r;
    }

    friend PolyFraction operator/(const PolyFraction& x, const PolyFraction& y) {
        if (y.is_zero()) throw DivisionByZero();
        PolyFraction inv;
        inv.num_ = y.den_;
        inv.den_ = y.num_;
        inv.rescale();
        return x * inv;
    }

    Rational evaluate(const Rational& g_val, const Rational& a_val) const {
        const Rational d = den_.evaluate(g_val, a_val);
        if (d.is_zero()) throw PoleAtPoint();
        return num_.evaluate(g_val, a_val) / d;
    }

    std::string str(const char* g_name = "g", const char* a_name = "a") const {
        if (den_ == BivariatePoly(1)) return num_.str(g_name, a_name);
        const std::string n = num_.str(g_name, a_name);
        const std::string d = den_.str(g_name, a_name);
        const auto wrap = [](const std::string& s, bool always) {
            return (always || s.find_first_of("+- ") != std::string::npos) ? "(" + s + ")" : s;
        };
        return wrap(n, num_.terms().size() > 1) + "/" + wrap(d, den_.terms().size() > 1);
    }

private:
    BivariatePoly num_;
    BivariatePoly den_;

    void reduce() {
        if (num_.is_zero()) {
            den_ = BivariatePoly(1);
            return;
        }
        if (!den_.is_constant()) {
            const BivariatePoly g = BivariatePoly::gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = *BivariatePoly::divide_exact(num_, g);
                den_ = *BivariatePoly::divide_exact(den_, g);
            }
        }
        rescale();
    }

    // Make the denominator integer-primitive with positive leading coefficient.
    void rescale() {
        if (num_.is_zero()) {
            den_ = BivariatePoly(1);
            return;
        }
        const Rational c = den_.signed_content();
        if (!c.is_one()) {
            const Rational inv = c.inverse();
            den_ = den_.times_rational(inv);
            num_ = num_.times_rational(inv);
        }
    }
};

class Scalar {
public:
    Scalar() = default;
    Scalar(const Rational& c) : re_(c) {}               // NOLINT(google-explicit-constructor)
    Scalar(long c) : re_(Rational(c)) {}                // NOLINT(google-explicit-constructor)
    Scalar(const BivariatePoly& p) : re_(p) {}          // NOLINT(google-explicit-constructor)
    Scalar(PolyFraction re, PolyFraction im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar zero() { return {}; }
    static Scalar one() { return Scalar(Rational(1)); }
    static Scalar i() { return Scalar(PolyFraction(), PolyFraction(Rational(1))); }
    static Scalar gamma() { return Scalar(BivariatePoly::gamma()); }
    static Scalar alpha() { return Scalar(BivariatePoly::alpha()); }

    const PolyFraction& re() const { return re_; }
    const PolyFraction& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    friend bool operator==(const Scalar& x, const Scalar& y) { return x.re_ == y.re_ && x.im_ == y.im_; }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend Scalar operator+(const Scalar& x, const Scalar& y) { return Scalar(x.re_ + y.re_, x.im_ + y.im_); }
    friend Scalar operator-(const Scalar& x, const Scalar& y) { return Scalar(x.re_ - y.re_, x.im_ - y.im_); }

    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        if (x.is_real() && y.is_real()) return Scalar(x.re_ * y.re_, PolyFraction());
        return Scalar(x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_);
    }

    friend Scalar operator/(const Scalar& x, const Scalar& y) {
        if (y.is_zero()) throw DivisionByZero();
        if (y.is_real()) return Scalar(x.re_ / y.re_, x.im_ / y.re_);
        const PolyFraction n = y.re_ * y.re_ + y.im_ * y.im_;
        return Scalar((x.re_ * y.re_ + x.im_ * y.im_) / n, (x.im_ * y.re_ - x.re_ * y.im_) / n);
    }

    Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
    Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
    Scalar& operator*=(const Scalar& y) { return *this = *this * y; }
    Scalar& operator/=(const Scalar& y) { return *this = *this / y; }

    Scalar inverse() const { return one() / *this; }

    // Complex conjugation: i -> -i, with g and a treated as formally real.
    Scalar conjugate() const { return Scalar(re_, -im_); }

    // Exact evaluation at a rational point; throws PoleAtPoint when a
    // denominator vanishes there.
    std::pair<Rational, Rational> evaluate(const Rational& g_val, const Rational& a_val) const {
        return {re_.evaluate(g_val, a_val), im_.evaluate(g_val, a_val)};
    }

    // Substitution g -> g_val, a -> a_val with exact Scalar values.
    // Throws PoleAtPoint when a denominator vanishes identically under the
    // substitution.
    Scalar substitute(const Scalar& g_val, const Scalar& a_val) const {
        const auto lift = [](const Rational& c) { return Scalar(c); };
        const auto frac = [&](const PolyFraction& f) {
            const Scalar n = f.num().substitute(g_val, a_val, one(), lift);
            const Scalar d = f.den().substitute(g_val, a_val, one(), lift);
            if (d.is_zero()) throw PoleAtPoint();
            return n / d;
        };
        const Scalar re_part = frac(re_);
        if (im_.is_zero()) return re_part;
        return re_part + i() * frac(im_);
    }

    std::string str(const char* g_name = "g", const char* a_name = "a") const {
        if (im_.is_zero()) return re_.str(g_name, a_name);
        const std::string im_str = "i*" + im_.str(g_name, a_name);
        if (re_.is_zero()) return im_str;
        return re_.str(g_name, a_name) + " + " + im_str;
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.str(); }

private:
    PolyFraction re_;
    PolyFraction im_;
};

// --- derived constants of the parametrisation ---

// Q = g/2 + 2/g
inline Scalar background_charge() {
    return Scalar(PolyFraction(BivariatePoly::monomial(Rational(1, 2), 2, 0) + BivariatePoly(2),
                               BivariatePoly::gamma()),
                  PolyFraction());
}

// c = 1 + 6 Q^2
inline Scalar central_charge() {
    const Scalar q = background_charge();
    return Scalar(6) * q * q + Scalar(1);
}

// D(a) = a/2 * (Q - a/2)
inline Scalar conformal_weight(const Scalar& a) {
    const Scalar half = Scalar(Rational(1, 2));
    return half * a * (background_charge() - half * a);
}

// a_{r,s} = (1-r) g/2 + (1-s) 2/g, with rational s > 0 admitted for window indices.
inline Scalar kac_alpha(long r, const Rational& s) {
    if (r < 1) throw InvalidIndex("kac index r must be >= 1");
    if (s <= Rational(0)) throw InvalidIndex("kac index s must be > 0");
    const Scalar g = Scalar::gamma();
    const Scalar half = Scalar(Rational(1, 2));
    return Scalar(Rational(1 - r)) * half * g + Scalar((Rational(1) - s) * Rational(2)) / g;
}

// a -> 2Q - a
inline Scalar reflect(const Scalar& a) { return Scalar(2) * background_charge() - a; }

} // namespace vff
