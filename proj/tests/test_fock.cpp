#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vff/fock.hpp"

using namespace vff;

namespace {

const Partition phi1{1};
const Partition phi2{2};
const Partition phi1_sq{1, 1};

FockVector mono(const Partition& k) { return FockVector::monomial(k, Scalar::one()); }

FockVector rnd_vector(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> lvl(0, 5);
    std::uniform_int_distribution<long> coeff(-6, 6);
    FockVector v;
    for (int t = 0; t < 4; ++t) {
        const auto parts = enumerate_level(lvl(rng));
        const Partition& k = parts[rng() % parts.size()];
        Scalar c = Scalar(coeff(rng)) + Scalar::i() * Scalar(coeff(rng));
        v.add_term(k, c);
    }
    return v;
}

} // namespace

TEST_CASE("vacuum") {
    const FockVector vac = FockVector::vacuum();
    const auto g = vac.grade();
    REQUIRE(g.size() == 1);
    CHECK(g.at(0) == vac);
    CHECK(vac + vac == Scalar(2) * vac);
    CHECK(apply_a(1, vac).is_zero());
}

TEST_CASE("heisenberg action") {
    const FockVector vac = FockVector::vacuum();
    CHECK(apply_a(-1, vac) == FockVector::monomial(phi1, -Scalar::i()));

    // [A_1, A_{-1}] phi_1^2 = 1/2 phi_1^2
    const FockVector u = mono(phi1_sq);
    const FockVector lhs = apply_a(1, apply_a(-1, u)) - apply_a(-1, apply_a(1, u));
    CHECK(lhs == Scalar(Rational(1, 2)) * u);

    const Scalar a = Scalar::alpha();
    CHECK(apply_a(0, vac, a) == Scalar(Rational(1, 2)) * (Scalar::i() * a) * vac);
}

TEST_CASE("heisenberg commutation relations exact") {
    for (std::uint32_t lvl = 0; lvl <= 6; ++lvl) {
        for (const auto& k : enumerate_level(lvl)) {
            const FockVector v = mono(k);
            for (int n = -5; n <= 5; ++n)
                for (int m = -5; m <= 5; ++m) {
                    if (n == 0 || m == 0) continue;
                    const FockVector comm = apply_a(n, apply_a(m, v)) - apply_a(m, apply_a(n, v));
                    FockVector expect;
                    if (n == -m) expect = Scalar(Rational(n, 2)) * v;
                    CHECK(comm == expect);
                }
        }
    }
}

TEST_CASE("grading of A_n") {
    for (std::uint32_t lvl = 0; lvl <= 5; ++lvl)
        for (const auto& k : enumerate_level(lvl))
            for (int n = -4; n <= 4; ++n) {
                if (n == 0) continue;
                const FockVector w = apply_a(n, mono(k));
                if (w.is_zero()) continue;
                const auto g = w.grade();
                REQUIRE(g.size() == 1);
                CHECK(g.begin()->first == lvl - n);
            }
}

TEST_CASE("pi basis") {
    CHECK(pi_basis(phi1) == FockVector::monomial(phi1, -Scalar::i()));
    CHECK(pi_basis(phi2) == FockVector::monomial(phi2, Scalar(-2) * Scalar::i()));
    CHECK(pi_basis(phi1_sq) == FockVector::monomial(phi1_sq, Scalar(-1)));

    // pi_k is A_{-k} applied to the vacuum
    for (std::uint32_t lvl = 0; lvl <= 6; ++lvl)
        for (const auto& k : enumerate_level(lvl)) {
            FockVector v = FockVector::vacuum();
            for (auto [n, kn] : k.multiplicities())
                for (std::uint32_t j = 0; j < kn; ++j) v = apply_a(-int(n), v);
            CHECK(v == pi_basis(k));
        }

    // conversion phi -> pi -> phi is the identity on each graded piece (N <= 8)
    for (std::uint32_t lvl = 0; lvl <= 8; ++lvl)
        for (const auto& k : enumerate_level(lvl)) {
            const Scalar c = pi_normalization(k);
            CHECK(!c.is_zero());
            CHECK(c.inverse() * pi_basis(k) == mono(k));
        }
}

TEST_CASE("gaussian pairing") {
    CHECK(gaussian_pairing(mono(phi1), mono(phi1)) == Scalar(Rational(1, 2)));
    CHECK(gaussian_pairing(mono(phi1), mono(phi2)).is_zero());

    const Partition phi2_sq{2, 2};
    CHECK(gaussian_pairing(mono(phi2_sq), mono(phi2_sq)) == Scalar(Rational(1, 8)));

    // hermiticity on random pairs
    std::mt19937_64 rng(5);
    for (int it = 0; it < 20; ++it) {
        const FockVector u = rnd_vector(rng);
        const FockVector v = rnd_vector(rng);
        CHECK(gaussian_pairing(u, v) == gaussian_pairing(v, u).conjugate());
    }

    // A_n adjoint: <A_n u, v> = <u, A_{-n} v> on monomials up to level 5
    for (std::uint32_t lu = 0; lu <= 5; ++lu)
        for (const auto& ku : enumerate_level(lu))
            for (std::uint32_t lv = 0; lv <= 5; ++lv)
                for (const auto& kv : enumerate_level(lv))
                    for (int n = -3; n <= 3; ++n) {
                        if (n == 0) continue;
                        CHECK(gaussian_pairing(apply_a(n, mono(ku)), mono(kv)) ==
                              gaussian_pairing(mono(ku), apply_a(-n, mono(kv))));
                    }
}

TEST_CASE("grade and linear operations") {
    const FockVector v = mono(phi1) + mono(phi2);
    const auto g = v.grade();
    REQUIRE(g.size() == 2);
    CHECK(g.at(1) == mono(phi1));
    CHECK(g.at(2) == mono(phi2));

    CHECK((Scalar::zero() * v).is_zero());
    CHECK((v + Scalar(-1) * v).is_zero());

    // coefficient extraction
    const Scalar q = background_charge();
    const Scalar a = Scalar::alpha();
    FockVector w = FockVector::monomial(phi2, Scalar(2) * (q + a)) - mono(phi1_sq);
    CHECK(w.coefficient(phi2) == Scalar(2) * (q + a));
    CHECK(w.coefficient(phi1_sq) == Scalar(-1));
    CHECK(w.coefficient(Partition{3}).is_zero());
}
