#pragma once

/*
 * Exact rational numbers backed by GMP.
 *
 * A Rational is always canonical: gcd(|num|, den) = 1 and den >= 1.
 * The canonical form is maintained by mpq_canonicalize, so structural
 * equality coincides with equality in Q.
 */

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "vff/errors.hpp"

namespace vff {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}                       // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw DivisionByZero();
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    // Parses "n", "-n" or "n/d". Throws ParseError on malformed input.
    static Rational from_string(const std::string& s) {
        if (s.empty()) throw ParseError("empty rational literal");
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
        if (q.get_den() == 0) throw DivisionByZero("zero denominator in literal: " + s);
        q.canonicalize();
        return Rational(q);
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZero();
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZero();
        return Rational(mpq_class(1) / v_);
    }

    // gcd of |a| and |b| as non-negative rationals: gcd(num)/lcm(den).
    // Used to extract the content of polynomials with rational coefficients.
    static Rational gcd(const Rational& a, const Rational& b) {
        if (a.is_zero()) return b.abs();
        if (b.is_zero()) return a.abs();
        mpz_class gn, ld;
        mpz_gcd(gn.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
        mpz_lcm(ld.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
        mpq_class q(gn, ld);
        q.canonicalize();
        return Rational(q);
    }

    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

} // namespace vff
