#pragma once

/*
 * Virasoro generators in the free-field realization,
 *
 *   L_n = i(alpha - (n+1)Q) A_n + sum_{m != 0,n} A_{n-m} A_m     (n != 0)
 *   L_0 = D(alpha) + 2 sum_{m>=1} A_{-m} A_m
 *
 * acting on FockVector. The bilinear sum is truncated to the finite window
 * of modes that can act non-trivially on the input's levels; enlarging the
 * window must not change the result (tested, and checkable via the
 * window_scale parameter).
 *
 * closed_form_l expands the same operators into explicit polynomial
 * differential operators; it exists purely as a cross-check for apply_l.
 */

#include <cstdlib>

#include "vff/fock.hpp"
#include "vff/partition.hpp"
#include "vff/scalar.hpp"

namespace vff {

inline FockVector apply_l(int n, const Scalar& alpha, const FockVector& v, unsigned window_scale = 1) {
    if (v.is_zero()) return {};
    const Scalar q = background_charge();
    const long top = long(v.top_level());
    if (n == 0) {
        FockVector acc = conformal_weight(alpha) * v;
        const long w = (top + 1) * long(window_scale);
        for (long m = 1; m <= w; ++m)
            acc += Scalar(2) * apply_a(-int(m), apply_a(int(m), v));
        return acc;
    }
    const Scalar linear = Scalar::i() * (alpha - Scalar(Rational(n + 1)) * q);
    FockVector acc = linear * apply_a(n, v);
    const long w = (top + std::labs(n) + 1) * long(window_scale);
    for (long m = -w; m <= w; ++m) {
        if (m == 0 || m == n) continue;
        acc += apply_a(n - int(m), apply_a(int(m), v));
    }
    return acc;
}

// Hand-expanded form of the same generators; used only as an oracle.
inline FockVector closed_form_l(int n, const Scalar& alpha, const FockVector& v) {
    if (v.is_zero()) return {};
    const Scalar q = background_charge();
    const std::uint32_t top = v.top_level();
    const Scalar half = Scalar(Rational(1, 2));
    if (n == 0) {
        FockVector acc = conformal_weight(alpha) * v;
        for (std::uint32_t m = 1; m <= top; ++m)
            acc += Scalar(Rational(m)) * phi_multiply(m, phi_derivative(m, v));
        return acc;
    }
    if (n > 0) {
        const std::uint32_t p = std::uint32_t(n);
        FockVector acc = (-half * (alpha - Scalar(Rational(n + 1)) * q)) * phi_derivative(p, v);
        for (std::uint32_t m = 1; m + 1 <= p; ++m)
            acc += Scalar(Rational(-1, 4)) * phi_derivative(m, phi_derivative(p - m, v));
        for (std::uint32_t k = 1; k + p <= top; ++k)
            acc += Scalar(Rational(k)) * phi_multiply(k, phi_derivative(p + k, v));
        return acc;
    }
    const std::uint32_t p = std::uint32_t(-n);
    FockVector acc = (Scalar(Rational(p)) * (alpha + Scalar(Rational(long(p) - 1)) * q)) * phi_multiply(p, v);
    for (std::uint32_t k = 1; k + 1 <= p; ++k)
        acc += Scalar(-Rational(k) * Rational(p - k)) * phi_multiply(k, phi_multiply(p - k, v));
    for (std::uint32_t j = 1; j <= top; ++j)
        acc += Scalar(Rational(p + j)) * phi_multiply(p + j, phi_derivative(j, v));
    return acc;
}

// Q_{alpha,nu} = L_{-nu_l} ... L_{-nu_1} 1, the largest mode acting first.
inline FockVector descendant(const Scalar& alpha, const Partition& nu) {
    FockVector v = FockVector::vacuum();
    for (std::uint32_t part : nu.columns()) v = apply_l(-int(part), alpha, v);
    return v;
}

// ([L_n, L_m] - (n-m) L_{n+m} - c/12 (n^3-n) delta_{n,-m}) v; zero by contract.
inline FockVector commutator_defect(int n, int m, const Scalar& alpha, const FockVector& v) {
    FockVector acc = apply_l(n, alpha, apply_l(m, alpha, v)) - apply_l(m, alpha, apply_l(n, alpha, v));
    acc -= Scalar(Rational(n - m)) * apply_l(n + m, alpha, v);
    if (n == -m) {
        const Scalar central =
            central_charge() * Scalar(Rational(1, 12)) * Scalar(Rational(long(n) * n * n - n));
        acc -= central * v;
    }
    return acc;
}

// <L_n^{0,alpha} u, v> - <u, L_{-n}^{0,2Q-alpha} v>; zero by contract
// under the formally-real-alpha convention.
inline Scalar hermiticity_defect(int n, const Scalar& alpha, const FockVector& u, const FockVector& v) {
    return gaussian_pairing(apply_l(n, alpha, u), v) - gaussian_pairing(u, apply_l(-n, reflect(alpha), v));
}

// L_n 1 = 0 for 1 <= n <= n_max and L_0 1 = D(alpha) 1.
inline bool highest_weight_check(const Scalar& alpha, unsigned n_max) {
    const FockVector vac = FockVector::vacuum();
    for (unsigned n = 1; n <= n_max; ++n)
        if (!apply_l(int(n), alpha, vac).is_zero()) return false;
    return apply_l(0, alpha, vac) == conformal_weight(alpha) * vac;
}

} // namespace vff
