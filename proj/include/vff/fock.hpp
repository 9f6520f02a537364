#pragma once

/*
 * The graded polynomial space F = C[(phi_n)_{n>=1}], the Heisenberg
 * operators A_n acting on it, and the Gaussian pairing.
 *
 * A monomial phi^k = prod phi_n^{k_n} is keyed by the partition whose
 * multiplicity form is k; its level is sum n*k_n. On holomorphic
 * polynomials the operators act as
 *
 *     A_n     = (i/2) d/d(phi_n)          n >= 1
 *     A_{-n}  = -i n phi_n                n >= 1   (the d/d(conj phi) part kills F)
 *     A_0     = (i/2) alpha
 *
 * giving [A_n, A_m] = (n/2) delta_{n,-m}.
 */

#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "vff/partition.hpp"
#include "vff/scalar.hpp"

namespace vff {

class FockVector {
public:
    FockVector() = default;

    // the constant polynomial 1
    static FockVector vacuum() { return monomial(Partition{}, Scalar::one()); }

    static FockVector monomial(const Partition& k, const Scalar& coeff) {
        FockVector v;
        if (!coeff.is_zero()) v.terms_.emplace(k, coeff);
        return v;
    }

    const std::map<Partition, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coefficient(const Partition& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar::zero() : it->second;
    }

    // highest monomial level present (0 for the zero vector)
    std::uint32_t top_level() const {
        std::uint32_t n = 0;
        for (const auto& [k, c] : terms_) n = std::max(n, k.level());
        return n;
    }

    void add_term(const Partition& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend FockVector operator+(const FockVector& u, const FockVector& v) {
        FockVector r = u;
        for (const auto& [k, c] : v.terms_) r.add_term(k, c);
        return r;
    }
    friend FockVector operator-(const FockVector& u, const FockVector& v) { return u + (-v); }
    FockVector operator-() const {
        FockVector r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    FockVector& operator+=(const FockVector& v) {
        for (const auto& [k, c] : v.terms_) add_term(k, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& v) { return *this += -v; }

    friend FockVector operator*(const Scalar& c, const FockVector& v) {
        FockVector r;
        if (c.is_zero()) return r;
        for (const auto& [k, coeff] : v.terms_) r.terms_.emplace(k, c * coeff);
        return r;
    }

    friend bool operator==(const FockVector& u, const FockVector& v) { return u.terms_ == v.terms_; }
    friend bool operator!=(const FockVector& u, const FockVector& v) { return !(u == v); }

    // splits by monomial level; the parts sum back to the vector
    std::map<std::uint32_t, FockVector> grade() const {
        std::map<std::uint32_t, FockVector> parts;
        for (const auto& [k, c] : terms_) parts[k.level()].add_term(k, c);
        return parts;
    }

    // substitute g and/or a by exact values in every coefficient
    FockVector substitute(const Scalar& g_val, const Scalar& a_val) const {
        FockVector r;
        for (const auto& [k, c] : terms_) r.add_term(k, c.substitute(g_val, a_val));
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            if (!k.empty()) {
                for (auto [n, kn] : k.multiplicities()) {
                    os << "*phi" << n;
                    if (kn > 1) os << "^" << kn;
                }
            }
        }
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const FockVector& v) { return os << v.str(); }

private:
    std::map<Partition, Scalar> terms_;
};

// d/d(phi_n)
inline FockVector phi_derivative(std::uint32_t n, const FockVector& v) {
    FockVector r;
    for (const auto& [k, c] : v.terms()) {
        auto m = k.multiplicities();
        auto it = m.find(n);
        if (it == m.end()) continue;
        const std::uint32_t kn = it->second;
        if (kn == 1)
            m.erase(it);
        else
            it->second -= 1;
        r.add_term(Partition::from_multiplicities(m), Scalar(Rational(kn)) * c);
    }
    return r;
}

// multiplication by phi_n
inline FockVector phi_multiply(std::uint32_t n, const FockVector& v) {
    FockVector r;
    for (const auto& [k, c] : v.terms()) {
        auto m = k.multiplicities();
        m[n] += 1;
        r.add_term(Partition::from_multiplicities(m), c);
    }
    return r;
}

// Heisenberg mode A_n; alpha enters only through the zero mode.
inline FockVector apply_a(int n, const FockVector& v, const Scalar& alpha = Scalar::zero()) {
    const Scalar i = Scalar::i();
    if (n == 0) return (i * alpha * Scalar(Rational(1, 2))) * v;
    if (n > 0) return (i * Scalar(Rational(1, 2))) * phi_derivative(std::uint32_t(n), v);
    const std::uint32_t p = std::uint32_t(-n);
    return (-i * Scalar(Rational(p))) * phi_multiply(p, v);
}

// coefficient relating pi_k to phi^k: pi_k = pi_normalization(k) * phi^k
inline Scalar pi_normalization(const Partition& k) {
    Scalar c = Scalar::one();
    const Scalar minus_i = -Scalar::i();
    for (auto [n, kn] : k.multiplicities())
        for (std::uint32_t j = 0; j < kn; ++j) c *= minus_i * Scalar(Rational(n));
    return c;
}

// pi_k = A_{-k} 1 = (-i)^{len(k)} (prod n^{k_n}) phi^k
inline FockVector pi_basis(const Partition& k) {
    return FockVector::monomial(k, pi_normalization(k));
}

// Sesquilinear Gaussian pairing <u,v> = sum_k conj(u_k) v_k w(k),
// w(k) = prod_n k_n! (2n)^{-k_n}, from phi_n ~ N_C(0, 1/(2n)) independent.
inline Scalar gaussian_pairing(const FockVector& u, const FockVector& v) {
    Scalar acc = Scalar::zero();
    for (const auto& [k, uc] : u.terms()) {
        const Scalar vc = v.coefficient(k);
        if (vc.is_zero()) continue;
        Rational w(1);
        for (auto [n, kn] : k.multiplicities()) {
            for (std::uint32_t j = 1; j <= kn; ++j) w *= Rational(j);
            for (std::uint32_t j = 0; j < kn; ++j) w /= Rational(2 * long(n));
        }
        acc += uc.conjugate() * vc * Scalar(w);
    }
    return acc;
}

} // namespace vff
