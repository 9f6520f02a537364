#pragma once

/*
 * Structure of the highest-weight modules in the free-field realization:
 * descendant matrices, the Shapovalov form and its determinant against the
 * Kac product formula, the canonical projection, kernels at Kac points,
 * singular vectors, and the classification of the module types.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vff/errors.hpp"
#include "vff/matrix.hpp"
#include "vff/partition.hpp"
#include "vff/sugawara.hpp"

namespace vff {

enum class Basis { Phi, Pi };

// Row nu holds the coordinates of the level-N descendant Q_{alpha,nu} in the
// monomial basis phi^k (or the oscillator basis pi_k) of F_N.
inline ScalarMatrix descendant_matrix(std::uint32_t level, const Scalar& alpha, Basis basis = Basis::Phi) {
    if (level < 1) throw Error("descendant_matrix requires level >= 1");
    const std::vector<Partition> idx = enumerate_level(level);
    ScalarMatrix m(idx.size(), idx.size());
    m.row_index = idx;
    m.col_index = idx;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const FockVector d = descendant(alpha, idx[i]);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            Scalar c = d.coefficient(idx[j]);
            if (basis == Basis::Pi) c = c / pi_normalization(idx[j]);
            m.at(i, j) = c;
        }
    }
    return m;
}

// Entry (nu, nu') is the vacuum coefficient of L_{nu'_1} ... L_{nu'_l}
// applied to Q_{alpha,nu}, the rightmost (smallest) raising mode acting
// first. Symmetry of the resulting matrix is part of the test contract.
inline ScalarMatrix shapovalov_matrix(std::uint32_t level, const Scalar& alpha) {
    if (level < 1) throw Error("shapovalov_matrix requires level >= 1");
    const std::vector<Partition> idx = enumerate_level(level);
    ScalarMatrix m(idx.size(), idx.size());
    m.row_index = idx;
    m.col_index = idx;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        const FockVector d = descendant(alpha, idx[i]);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            FockVector w = d;
            const auto& word = idx[j].columns();
            for (auto it = word.rbegin(); it != word.rend(); ++it)
                w = apply_l(int(*it), alpha, w);
            m.at(i, j) = w.coefficient(Partition{});
        }
    }
    return m;
}

struct KacFactor {
    std::uint32_t r, s;
    std::uint64_t exponent;  // p(N - rs)
};

struct KacDeterminantResult {
    Scalar det;               // det S_N(alpha)
    Scalar product;           // prod (D_alpha - D_{a_{r,s}})^{p(N-rs)}
    Scalar ratio;             // det / product, alpha-free by contract
    std::vector<KacFactor> factors;
};

// det S_N against the Kac product; the ratio must be a nonzero element of
// Q(g). Throws FactorizationMismatch if any alpha dependence survives.
inline KacDeterminantResult kac_determinant_check(std::uint32_t level,
                                                  P0Convention p0 = P0Convention::One) {
    if (level < 1) throw Error("kac_determinant_check requires level >= 1");
    const Scalar alpha = Scalar::alpha();
    const Scalar delta = conformal_weight(alpha);

    KacDeterminantResult out;
    out.det = linalg::determinant(shapovalov_matrix(level, alpha));

    out.product = Scalar::one();
    for (std::uint32_t r = 1; r <= level; ++r)
        for (std::uint32_t s = 1; r * s <= level; ++s) {
            const std::uint64_t e = partition_count(level - r * s, p0);
            out.factors.push_back({r, s, e});
            const Scalar factor = delta - conformal_weight(kac_alpha(long(r), Rational(long(s))));
            for (std::uint64_t k = 0; k < e; ++k) out.product *= factor;
        }

    out.ratio = out.det / out.product;
    const bool alpha_free = out.ratio.is_real() && out.ratio.re().num().alpha_free() &&
                            out.ratio.re().den().alpha_free();
    if (!alpha_free || out.ratio.is_zero())
        throw FactorizationMismatch("det S_" + std::to_string(level) +
                                    " does not match the Kac product up to an alpha-free factor");
    return out;
}

// Matrix of the canonical projection on the level-N subspace in the phi
// basis: the unique map sending the coordinates of Q_{2Q-alpha,nu} to the
// coordinates of Q_{alpha,nu}. Computed symbolically; at a Kac point the
// symbolic solution is substituted afterwards (the dual-side matrix is
// invertible there, so the substitution is pole-free).
inline ScalarMatrix projection_matrix(std::uint32_t level, const Scalar& alpha,
                                      std::optional<std::pair<std::uint32_t, std::uint32_t>> at_kac = {}) {
    const ScalarMatrix dual = descendant_matrix(level, reflect(alpha));
    const ScalarMatrix direct = descendant_matrix(level, alpha);
    const auto phi_t = linalg::solve(dual, direct);
    if (!phi_t) throw SingularDualMatrix();
    ScalarMatrix phi = phi_t->transpose();
    phi.row_index = dual.row_index;
    phi.col_index = dual.col_index;
    if (at_kac) {
        const Scalar a_rs = kac_alpha(long(at_kac->first), Rational(long(at_kac->second)));
        phi = phi.substitute(Scalar::gamma(), a_rs);
    }
    return phi;
}

// Basis of ker Phi^{0,N} at alpha_{r,s} in nu-coordinates of the dual Verma:
// vectors c with sum_nu c_nu Q_{alpha_{r,s},nu} = 0. Dimension p(N - rs) at
// symbolic gamma. An exact rational gamma may be substituted in first.
inline std::vector<std::vector<Scalar>> kernel_basis(std::uint32_t r, std::uint32_t s, std::uint32_t level,
                                                     std::optional<Rational> gamma_value = {}) {
    Scalar a_rs = kac_alpha(long(r), Rational(long(s)));
    ScalarMatrix m = descendant_matrix(level, a_rs);
    if (gamma_value) m = m.substitute(Scalar(*gamma_value), Scalar::alpha());
    return linalg::kernel(m.transpose());
}

struct SingularVectorResult {
    std::uint32_t r = 0, s = 0;
    std::map<Partition, Scalar> sigma;   // normalised so sigma[(1,...,1)] = 1
    FockVector realized_at_dual;         // sum sigma_nu Q_{2Q-a_{r,s},nu}, nonzero
    FockVector realized_at_kac;          // sum sigma_nu Q_{a_{r,s},nu}, zero
};

// Solves L_1 chi = L_2 chi = 0 inside the level-rs subspace of the module at
// the dual parameter 2Q - alpha_{r,s}; the solution is unique up to scale.
inline SingularVectorResult singular_vector(std::uint32_t r, std::uint32_t s) {
    if (r < 1 || s < 1) throw InvalidIndex();
    const std::uint32_t level = r * s;
    const Scalar a_kac = kac_alpha(long(r), Rational(long(s)));
    const Scalar a_dual = reflect(a_kac);

    const std::vector<Partition> idx = enumerate_level(level);
    std::vector<FockVector> dual_desc;
    dual_desc.reserve(idx.size());
    for (const auto& nu : idx) dual_desc.push_back(descendant(a_dual, nu));

    // rows: one equation per monomial coordinate of L_1 chi and L_2 chi
    std::vector<Partition> eq1 = level >= 1 ? enumerate_level(level - 1) : std::vector<Partition>{};
    std::vector<Partition> eq2 = level >= 2 ? enumerate_level(level - 2) : std::vector<Partition>{};
    ScalarMatrix system(eq1.size() + eq2.size(), idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        const FockVector l1 = apply_l(1, a_dual, dual_desc[j]);
        const FockVector l2 = apply_l(2, a_dual, dual_desc[j]);
        for (std::size_t i = 0; i < eq1.size(); ++i) system.at(i, j) = l1.coefficient(eq1[i]);
        for (std::size_t i = 0; i < eq2.size(); ++i) system.at(eq1.size() + i, j) = l2.coefficient(eq2[i]);
    }

    const auto null_basis = linalg::kernel(system);
    if (null_basis.empty()) throw NoSolution("no singular vector at (" + std::to_string(r) + "," + std::to_string(s) + ")");
    if (null_basis.size() > 1) throw NonUniqueSolution("singular vector at (" + std::to_string(r) + "," + std::to_string(s) + ") is not unique");

    std::vector<Scalar> sigma = null_basis[0];
    const std::size_t ones_pos = idx.size() - 1;  // (1,...,1) is last in the enumeration
    if (sigma[ones_pos].is_zero()) throw NonUniqueSolution("normalisation coefficient vanishes");
    const Scalar norm = sigma[ones_pos].inverse();
    for (auto& c : sigma) c *= norm;

    SingularVectorResult out;
    out.r = r;
    out.s = s;
    for (std::size_t j = 0; j < idx.size(); ++j) {
        out.sigma[idx[j]] = sigma[j];
        out.realized_at_dual += sigma[j] * dual_desc[j];
        out.realized_at_kac += sigma[j] * descendant(a_kac, idx[j]);
    }
    return out;
}

// True iff no nonzero vector of span{Q_{alpha_{r,s},nu} : |nu| = N} is
// annihilated by both L_1 and L_2.
inline bool irreducibility_check(std::uint32_t r, std::uint32_t s, std::uint32_t level,
                                 std::optional<Rational> gamma_value = {}) {
    if (level < 1) throw Error("irreducibility_check requires level >= 1");
    const Scalar a_kac = kac_alpha(long(r), Rational(long(s)));
    const std::vector<Partition> idx = enumerate_level(level);

    std::vector<FockVector> desc;
    desc.reserve(idx.size());
    for (const auto& nu : idx) {
        FockVector d = descendant(a_kac, nu);
        if (gamma_value) d = d.substitute(Scalar(*gamma_value), Scalar::alpha());
        desc.push_back(std::move(d));
    }

    // coordinates of L_1 d_nu and L_2 d_nu stacked
    const std::vector<Partition> eq1 = enumerate_level(level - 1);
    const std::vector<Partition> eq2 = level >= 2 ? enumerate_level(level - 2) : std::vector<Partition>{};
    ScalarMatrix annih(eq1.size() + eq2.size(), idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        const FockVector l1 = apply_l(1, a_kac, desc[j]);
        const FockVector l2 = apply_l(2, a_kac, desc[j]);
        for (std::size_t i = 0; i < eq1.size(); ++i) annih.at(i, j) = l1.coefficient(eq1[i]);
        for (std::size_t i = 0; i < eq2.size(); ++i) annih.at(eq1.size() + i, j) = l2.coefficient(eq2[i]);
    }

    // x annihilated by L_1, L_2 must already be zero as a Fock vector
    for (const auto& x : linalg::kernel(annih)) {
        FockVector image;
        for (std::size_t j = 0; j < idx.size(); ++j) image += x[j] * desc[j];
        if (!image.is_zero()) return false;
    }
    return true;
}

enum class KacBranch { NotKac, KacMinus, KacPlus };
enum class ModuleClass { Verma, IrreducibleQuotient, Zero };

struct GammaMode {
    std::optional<Rational> value;  // empty = symbolic
};

// Classification of the module at the given point. For the kac^+ branch the
// module vanishes exactly when 2Q - a_{r,s} = Q + r g/2 + s 2/g lies in
// (Q + (2/g)N*) u (Q + (g/2)N*), an exact membership test.
inline ModuleClass classify(KacBranch branch, std::uint32_t r, std::uint32_t s, const GammaMode& gamma) {
    if (gamma.value) {
        const Rational g = *gamma.value;
        if (g <= Rational(0) || g >= Rational(2)) throw InvalidGamma();
    }
    switch (branch) {
        case KacBranch::NotKac:
            return ModuleClass::Verma;
        case KacBranch::KacMinus:
            if (r < 1 || s < 1) throw InvalidIndex();
            return ModuleClass::IrreducibleQuotient;
        case KacBranch::KacPlus: {
            if (r < 1 || s < 1) throw InvalidIndex();
            if (!gamma.value) return ModuleClass::IrreducibleQuotient;  // generic gamma misses both lattices
            const Rational g2 = *gamma.value * *gamma.value;
            // r g/2 + 2s/g = k g/2  <=>  4s/g^2 = k - r integer
            // r g/2 + 2s/g = 2k/g   <=>  r g^2/4 = k - s integer
            const Rational from_gamma_lattice = Rational(4 * long(s)) / g2;
            const Rational from_dual_lattice = Rational(long(r)) * g2 / Rational(4);
            if (from_gamma_lattice.is_integer() || from_dual_lattice.is_integer())
                return ModuleClass::Zero;
            return ModuleClass::IrreducibleQuotient;
        }
    }
    throw Error("unreachable");
}

} // namespace vff
