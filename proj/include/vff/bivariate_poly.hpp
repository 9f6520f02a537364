#pragma once

/*
 * Sparse polynomials in the two indeterminates (g, a) -- the coupling gamma
 * and the weight parameter alpha -- with exact rational coefficients.
 *
 * Terms are kept sorted in graded-lexicographic order (total degree first,
 * then the gamma exponent, then the alpha exponent) with no zero
 * coefficients, so equal polynomials are structurally equal.
 *
 * The gcd is computed by a primitive polynomial remainder sequence: the
 * polynomial is viewed as univariate in alpha with coefficients in Q[gamma],
 * contents are split off recursively, and pseudo-remainders are reduced to
 * primitive form at each step. All divisions used internally are exact.
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vff/errors.hpp"
#include "vff/rational.hpp"

namespace vff {

struct Exponents {
    std::uint32_t gamma = 0;
    std::uint32_t alpha = 0;

    friend bool operator==(const Exponents& x, const Exponents& y) {
        return x.gamma == y.gamma && x.alpha == y.alpha;
    }
    // graded-lex: total degree, then gamma exponent, then alpha exponent
    friend bool operator<(const Exponents& x, const Exponents& y) {
        const std::uint64_t dx = std::uint64_t(x.gamma) + x.alpha;
        const std::uint64_t dy = std::uint64_t(y.gamma) + y.alpha;
        if (dx != dy) return dx < dy;
        if (x.gamma != y.gamma) return x.gamma < y.gamma;
        return x.alpha < y.alpha;
    }
};

class BivariatePoly {
public:
    struct Term {
        Exponents exp;
        Rational coeff;
    };

    BivariatePoly() = default;
    BivariatePoly(const Rational& c) {            // NOLINT(google-explicit-constructor)
        if (!c.is_zero()) terms_.push_back({{0, 0}, c});
    }
    BivariatePoly(long c) : BivariatePoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static BivariatePoly monomial(const Rational& c, std::uint32_t g_exp, std::uint32_t a_exp) {
        BivariatePoly p;
        if (!c.is_zero()) p.terms_.push_back({{g_exp, a_exp}, c});
        return p;
    }
    static BivariatePoly gamma() { return monomial(1, 1, 0); }
    static BivariatePoly alpha() { return monomial(1, 0, 1); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exponents{}); }
    bool is_monomial() const { return terms_.size() == 1; }

    // Constant term as a rational (zero if absent).
    Rational constant_value() const {
        if (terms_.empty()) return 0;
        if (terms_.front().exp == Exponents{}) return terms_.front().coeff;
        return 0;
    }

    std::uint32_t degree_gamma() const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.exp.gamma);
        return d;
    }
    std::uint32_t degree_alpha() const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.exp.alpha);
        return d;
    }
    bool alpha_free() const {
        for (const auto& t : terms_)
            if (t.exp.alpha != 0) return false;
        return true;
    }
    bool gamma_free() const {
        for (const auto& t : terms_)
            if (t.exp.gamma != 0) return false;
        return true;
    }

    const Term& leading_term() const { return terms_.back(); }

    friend bool operator==(const BivariatePoly& p, const BivariatePoly& q) {
        if (p.terms_.size() != q.terms_.size()) return false;
        for (std::size_t i = 0; i < p.terms_.size(); ++i)
            if (!(p.terms_[i].exp == q.terms_[i].exp) || p.terms_[i].coeff != q.terms_[i].coeff)
                return false;
        return true;
    }
    friend bool operator!=(const BivariatePoly& p, const BivariatePoly& q) { return !(p == q); }

    // Total order compatible with structural equality, used for canonical
    // tie-breaking (e.g. sign normalisation of fractions).
    friend bool operator<(const BivariatePoly& p, const BivariatePoly& q) {
        const std::size_t n = std::min(p.terms_.size(), q.terms_.size());
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t ip = p.terms_.size() - 1 - i, iq = q.terms_.size() - 1 - i;
            if (!(p.terms_[ip].exp == q.terms_[iq].exp)) return p.terms_[ip].exp < q.terms_[iq].exp;
            if (p.terms_[ip].coeff != q.terms_[iq].coeff) return p.terms_[ip].coeff < q.terms_[iq].coeff;
        }
        return p.terms_.size() < q.terms_.size();
    }

    BivariatePoly operator-() const {
        BivariatePoly r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend BivariatePoly operator+(const BivariatePoly& p, const BivariatePoly& q) {
        BivariatePoly r;
        r.terms_.reserve(p.terms_.size() + q.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < p.terms_.size() && j < q.terms_.size()) {
            const auto& tp = p.terms_[i];
            const auto& tq = q.terms_[j];
            if (tp.exp == tq.exp) {
                Rational c = tp.coeff + tq.coeff;
                if (!c.is_zero()) r.terms_.push_back({tp.exp, std::move(c)});
                ++i, ++j;
            } else if (tp.exp < tq.exp) {
                r.terms_.push_back(tp);
                ++i;
            } else {
                r.terms_.push_back(tq);
                ++j;
            }
        }
        for (; i < p.terms_.size(); ++i) r.terms_.push_back(p.terms_[i]);
        for (; j < q.terms_.size(); ++j) r.terms_.push_back(q.terms_[j]);
        return r;
    }
    friend BivariatePoly operator-(const BivariatePoly& p, const BivariatePoly& q) { return p + (-q); }

    friend BivariatePoly operator*(const BivariatePoly& p, const BivariatePoly& q) {
        if (p.is_zero() || q.is_zero()) return {};
        if (q.is_monomial()) return p.times_term(q.terms_[0]);
        if (p.is_monomial()) return q.times_term(p.terms_[0]);
        std::map<Exponents, Rational> acc;
        for (const auto& tp : p.terms_)
            for (const auto& tq : q.terms_) {
                Exponents e{tp.exp.gamma + tq.exp.gamma, tp.exp.alpha + tq.exp.alpha};
                auto [it, inserted] = acc.try_emplace(e, tp.coeff * tq.coeff);
                if (!inserted) it->second += tp.coeff * tq.coeff;
            }
        BivariatePoly r;
        r.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (!c.is_zero()) r.terms_.push_back({e, std::move(c)});
        return r;
    }

    BivariatePoly& operator+=(const BivariatePoly& q) { return *this = *this + q; }
    BivariatePoly& operator-=(const BivariatePoly& q) { return *this = *this - q; }
    BivariatePoly& operator*=(const BivariatePoly& q) { return *this = *this * q; }

    BivariatePoly times_rational(const Rational& c) const {
        if (c.is_zero()) return {};
        BivariatePoly r = *this;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    // Exact quotient, or nullopt if q does not divide p.
    static std::optional<BivariatePoly> divide_exact(const BivariatePoly& p, const BivariatePoly& q) {
        if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
        BivariatePoly quot, rem = p;
        const Term& lq = q.leading_term();
        while (!rem.is_zero()) {
            const Term& lr = rem.leading_term();
            if (lr.exp.gamma < lq.exp.gamma || lr.exp.alpha < lq.exp.alpha) return std::nullopt;
            Term t{{lr.exp.gamma - lq.exp.gamma, lr.exp.alpha - lq.exp.alpha}, lr.coeff / lq.coeff};
            quot.terms_.push_back(t);  // fixed up below
            rem -= q.times_term(t);
        }
        std::sort(quot.terms_.begin(), quot.terms_.end(),
                  [](const Term& x, const Term& y) { return x.exp < y.exp; });
        return quot;
    }

    // Rational content (gcd of coefficients) times the sign of the leading
    // coefficient. Dividing by it yields the canonical integer-primitive,
    // positive-leading-coefficient associate.
    Rational signed_content() const {
        if (is_zero()) return 0;
        Rational c = 0;
        for (const auto& t : terms_) c = Rational::gcd(c, t.coeff);
        if (leading_term().coeff.sign() < 0) c = -c;
        return c;
    }

    BivariatePoly primitive() const {
        if (is_zero()) return {};
        return times_rational(signed_content().inverse());
    }

    // gcd in Q[g,a], normalised integer-primitive with positive leading coefficient.
    static BivariatePoly gcd(const BivariatePoly& p, const BivariatePoly& q) {
        if (p.is_zero()) return q.primitive();
        if (q.is_zero()) return p.primitive();
        if (p.is_constant() || q.is_constant()) return BivariatePoly(1);
        if (p.is_monomial()) return gcd_with_monomial(q, p.terms_[0].exp);
        if (q.is_monomial()) return gcd_with_monomial(p, q.terms_[0].exp);
        // run the PRS in the variable of smaller degree
        const std::uint32_t da = std::max(p.degree_alpha(), q.degree_alpha());
        const std::uint32_t dg = std::max(p.degree_gamma(), q.degree_gamma());
        if (da > 0 && (da <= dg || dg == 0)) return gcd_main<&Exponents::gamma, &Exponents::alpha>(p, q);
        return gcd_main<&Exponents::alpha, &Exponents::gamma>(p, q);
    }

    // Evaluation at an exact point.
    Rational evaluate(const Rational& g_val, const Rational& a_val) const {
        std::vector<Rational> gpow = powers(g_val, degree_gamma());
        std::vector<Rational> apow = powers(a_val, degree_alpha());
        Rational acc = 0;
        for (const auto& t : terms_) acc += t.coeff * gpow[t.exp.gamma] * apow[t.exp.alpha];
        return acc;
    }

    // Substitution of arbitrary values from a commutative ring V supporting
    // +, * and construction from (poly-coefficient) scalars via `lift`.
    template <class V, class Lift>
    V substitute(const V& g_val, const V& a_val, const V& one, Lift lift) const {
        std::vector<V> gpow{one}, apow{one};
        for (std::uint32_t i = 1; i <= degree_gamma(); ++i) gpow.push_back(gpow.back() * g_val);
        for (std::uint32_t i = 1; i <= degree_alpha(); ++i) apow.push_back(apow.back() * a_val);
        V acc = lift(Rational(0));
        for (const auto& t : terms_) acc = acc + lift(t.coeff) * gpow[t.exp.gamma] * apow[t.exp.alpha];
        return acc;
    }

    std::string str(const char* g_name = "g", const char* a_name = "a") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        // print leading terms first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Rational c = it->coeff;
            if (!first) {
                os << (c.sign() < 0 ? " - " : " + ");
                if (c.sign() < 0) c = -c;
            }
            first = false;
            const bool has_vars = it->exp.gamma > 0 || it->exp.alpha > 0;
            if (!has_vars || !(c.is_one())) {
                os << c.str();
                if (has_vars) os << "*";
            }
            if (it->exp.gamma > 0) {
                os << g_name;
                if (it->exp.gamma > 1) os << "^" << it->exp.gamma;
                if (it->exp.alpha > 0) os << "*";
            }
            if (it->exp.alpha > 0) {
                os << a_name;
                if (it->exp.alpha > 1) os << "^" << it->exp.alpha;
            }
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const BivariatePoly& p) { return os << p.str(); }

private:
    std::vector<Term> terms_;  // ascending graded-lex, no zero coefficients

    BivariatePoly times_term(const Term& t) const {
        if (t.coeff.is_zero()) return {};
        BivariatePoly r;
        r.terms_.reserve(terms_.size());
        for (const auto& u : terms_)
            r.terms_.push_back({{u.exp.gamma + t.exp.gamma, u.exp.alpha + t.exp.alpha}, u.coeff * t.coeff});
        return r;
    }

    static std::vector<Rational> powers(const Rational& x, std::uint32_t up_to) {
        std::vector<Rational> p{1};
        for (std::uint32_t i = 1; i <= up_to; ++i) p.push_back(p.back() * x);
        return p;
    }

    static BivariatePoly gcd_with_monomial(const BivariatePoly& p, const Exponents& m) {
        std::uint32_t g = m.gamma, a = m.alpha;
        for (const auto& t : p.terms_) {
            g = std::min(g, t.exp.gamma);
            a = std::min(a, t.exp.alpha);
            if (g == 0 && a == 0) break;
        }
        return monomial(1, g, a);
    }

    // --- subresultant PRS with a designated main variable ---
    //
    // Main == &Exponents::alpha means "univariate in alpha over Q[gamma]".
    // Coefficients with respect to the main variable are polynomials in the
    // other variable only, so their gcds recurse into gcd(). The univariate
    // cases run through the same code with constant coefficients.

    template <std::uint32_t Exponents::* Other, std::uint32_t Exponents::* Main>
    static std::uint32_t deg_main(const BivariatePoly& p) {
        std::uint32_t d = 0;
        for (const auto& t : p.terms_) d = std::max(d, t.exp.*Main);
        return d;
    }

    template <std::uint32_t Exponents::* Other, std::uint32_t Exponents::* Main>
    static std::vector<BivariatePoly> main_coeffs(const BivariatePoly& p) {
        std::vector<BivariatePoly> cs(deg_main<Other, Main>(p) + 1);
        for (const auto& t : p.terms_) {
            Exponents e{};
            e.*Other = t.exp.*Other;
            cs[t.exp.*Main] += monomial(t.coeff, e.gamma, e.alpha);
        }
        return cs;
    }

    template <std::uint32_t Exponents::* Other, std::uint32_t Exponents::* Main>
    static BivariatePoly from_main_coeffs(const std::vector<BivariatePoly>& cs) {
        BivariatePoly p;
        for (std::uint32_t d = 0; d < cs.size(); ++d) {
            Exponents e{};
            e.*Main = d;
            p += cs[d] * monomial(1, e.gamma, e.alpha);
        }
        return p;
    }

    template <std::uint32_t Exponents::* Other, std::uint32_t Exponents::* Main>
    static BivariatePoly content_main(const BivariatePoly& p) {
        BivariatePoly c;
        for (const auto& coeff : main_coeffs<Other, Main>(p)) {
            if (coeff.is_zero()) continue;
            c = c.is_zero() ? coeff.primitive() : gcd(c, coeff);
            if (c.is_constant()) return BivariatePoly(1);
        }
        return c.is_zero() ? BivariatePoly(1) : c;
    }

    // Strict pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g.
    template <std::uint32_t Exponents::* Other, std::uint32_t Exponents::* Main>
    static BivariatePoly prem_main(BivariatePoly f, const BivariatePoly& g) {
        const std::uint32_t dg = deg_main<Other, Main>(g);
        const std::uint32_t df0 = deg_main<Other, Main>(f);
        if (df0 < dg) return f;
        const BivariatePoly lc_g = main_coeffs<Other, Main>(g)[dg];
        std::uint32_t passes = 0;
        while (!f.is_zero()) {
            const std::uint32_t df = deg_main<Other, Main>(f);
            if (df < dg) break;
            auto fcs = main_coeffs<Other, Main>(f);
            Exponents shift{};
            shift.*Main = df - dg;
            f = f * lc_g - g * (fcs[df] * monomial(1, shift.gamma, shift.alpha));
            ++passes;
        }
        // top up to the exact power expected by the subresultant recurrences
        for (std::uint32_t k = passes; k < df0 - dg + 1; ++k) f *= lc_g;
        return f;
    }

    template <std::uint32_t Exponents::* Other, std::uint32_t Exponents::* Main>
    static BivariatePoly pow_poly(BivariatePoly base, std::uint32_t e) {
        BivariatePoly r(1);
        for (std::uint32_t k = 0; k < e; ++k) r *= base;
        return r;
    }

    template <std::uint32_t Exponents::* Other, std::uint32_t Exponents::* Main>
    static BivariatePoly gcd_main(const BivariatePoly& p, const BivariatePoly& q) {
        const BivariatePoly cp = content_main<Other, Main>(p);
        const BivariatePoly cq = content_main<Other, Main>(q);
        const BivariatePoly c = gcd(cp, cq);
        BivariatePoly a = *divide_exact(p.primitive(), cp);
        BivariatePoly b = *divide_exact(q.primitive(), cq);
        if (deg_main<Other, Main>(a) < deg_main<Other, Main>(b)) std::swap(a, b);

        std::uint32_t d = deg_main<Other, Main>(a) - deg_main<Other, Main>(b);
        BivariatePoly beta = (d % 2 == 0) ? BivariatePoly(-1) : BivariatePoly(1);
        BivariatePoly psi(-1);
        for (;;) {
            BivariatePoly r = prem_main<Other, Main>(a, b);
            if (r.is_zero()) {
                // b divides a up to content: its main-primitive part is the gcd part
                const BivariatePoly h = *divide_exact(b.primitive(), content_main<Other, Main>(b));
                return (c * h).primitive();
            }
            r = *divide_exact(r, beta);
            if (deg_main<Other, Main>(r) == 0) {
                // a nonzero coefficient-ring element: primitive parts are coprime
                return c.primitive();
            }
            const BivariatePoly lc_b = main_coeffs<Other, Main>(b)[deg_main<Other, Main>(b)];
            const std::uint32_t d_next = deg_main<Other, Main>(b) - deg_main<Other, Main>(r);
            // psi' = (-lc_b)^d / psi^(d-1); the division is exact
            if (d > 0) psi = *divide_exact(pow_poly<Other, Main>(-lc_b, d), pow_poly<Other, Main>(psi, d - 1));
            beta = -lc_b * pow_poly<Other, Main>(psi, d_next);
            a = std::move(b);
            b = std::move(r);
            d = d_next;
        }
    }
};

} // namespace vff
