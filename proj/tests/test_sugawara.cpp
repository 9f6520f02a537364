#include <catch2/catch_amalgamated.hpp>

#include "vff/sugawara.hpp"

using namespace vff;

namespace {

const Scalar A = Scalar::alpha();
const Partition phi1{1};
const Partition phi2{2};
const Partition phi1_sq{1, 1};

FockVector mono(const Partition& k) { return FockVector::monomial(k, Scalar::one()); }

// 2(Q+a) phi_2 - phi_1^2
FockVector level_two_descendant(const Scalar& a) {
    return FockVector::monomial(phi2, Scalar(2) * (background_charge() + a)) +
           FockVector::monomial(phi1_sq, Scalar(-1));
}

} // namespace

TEST_CASE("level one and two descendants") {
    CHECK(apply_l(-1, A, FockVector::vacuum()) == FockVector::monomial(phi1, A));
    CHECK(apply_l(-2, A, FockVector::vacuum()) == level_two_descendant(A));

    const FockVector l1l1 = apply_l(-1, A, apply_l(-1, A, FockVector::vacuum()));
    CHECK(l1l1 == FockVector::monomial(phi2, Scalar(2) * A) + FockVector::monomial(phi1_sq, A * A));

    CHECK(descendant(A, Partition{1}) == FockVector::monomial(phi1, A));
    CHECK(descendant(A, Partition{2}) == level_two_descendant(A));
    CHECK(descendant(A, Partition{1, 1}) ==
          FockVector::monomial(phi2, Scalar(2) * A) + FockVector::monomial(phi1_sq, A * A));
}

TEST_CASE("closed form oracle samples") {
    CHECK(closed_form_l(-2, A, FockVector::vacuum()) == level_two_descendant(A));

    const Partition phi1phi2{2, 1};
    CHECK(closed_form_l(0, A, mono(phi1phi2)) == (conformal_weight(A) + Scalar(3)) * mono(phi1phi2));

    const Scalar two_q_minus_a = Scalar(2) * background_charge() - A;
    CHECK(closed_form_l(1, A, mono(phi1)) ==
          (two_q_minus_a * Scalar(Rational(1, 2))) * FockVector::vacuum());
}

TEST_CASE("apply_l agrees with closed form on all monomials of level <= 6") {
    for (std::uint32_t lvl = 0; lvl <= 6; ++lvl)
        for (const auto& k : enumerate_level(lvl))
            for (int n = -5; n <= 5; ++n)
                CHECK(apply_l(n, A, mono(k)) == closed_form_l(n, A, mono(k)));
}

TEST_CASE("truncation window stability") {
    for (std::uint32_t lvl = 0; lvl <= 5; ++lvl)
        for (const auto& k : enumerate_level(lvl))
            for (int n = -4; n <= 4; ++n)
                CHECK(apply_l(n, A, mono(k)) == apply_l(n, A, mono(k), 2));
}

TEST_CASE("virasoro commutation relations") {
    // [L_2, L_{-2}] 1 = (4 D + c/2) 1
    const FockVector vac = FockVector::vacuum();
    const FockVector lhs = apply_l(2, A, apply_l(-2, A, vac)) - apply_l(-2, A, apply_l(2, A, vac));
    CHECK(lhs == (Scalar(4) * conformal_weight(A) + central_charge() * Scalar(Rational(1, 2))) * vac);

    CHECK(commutator_defect(2, -2, A, vac).is_zero());
    CHECK(commutator_defect(1, 1, A, mono(phi2)).is_zero());
    CHECK(commutator_defect(3, -3, A, mono(phi1)).is_zero());

    for (std::uint32_t lvl = 0; lvl <= 4; ++lvl)
        for (const auto& k : enumerate_level(lvl))
            for (int n = -3; n <= 3; ++n)
                for (int m = -3; m <= n; ++m)
                    CHECK(commutator_defect(n, m, A, mono(k)).is_zero());
}

TEST_CASE("grading and reality of descendants") {
    // L_n maps level N to level N - n
    for (std::uint32_t lvl = 0; lvl <= 5; ++lvl)
        for (const auto& k : enumerate_level(lvl))
            for (int n = -3; n <= 3; ++n) {
                const FockVector w = apply_l(n, A, mono(k));
                if (w.is_zero()) continue;
                const auto g = w.grade();
                REQUIRE(g.size() == 1);
                CHECK(g.begin()->first == std::uint32_t(long(lvl) - n));
            }

    // descendants are homogeneous with real coefficients whose denominators
    // are powers of g
    for (std::uint32_t lvl = 1; lvl <= 5; ++lvl)
        for (const auto& nu : enumerate_level(lvl)) {
            const FockVector d = descendant(A, nu);
            for (const auto& [k, c] : d.terms()) {
                CHECK(k.level() == lvl);
                CHECK(c.is_real());
                CHECK(c.re().den().is_monomial());
                CHECK(c.re().den().alpha_free());
            }
        }

    // L_0 acts as D(alpha) + N
    for (std::uint32_t lvl = 0; lvl <= 5; ++lvl)
        for (const auto& k : enumerate_level(lvl))
            CHECK(apply_l(0, A, mono(k)) == (conformal_weight(A) + Scalar(Rational(lvl))) * mono(k));
}

TEST_CASE("hermiticity") {
    CHECK(hermiticity_defect(1, A, mono(phi1), FockVector::vacuum()).is_zero());
    CHECK(hermiticity_defect(0, A, mono(phi1), mono(phi1)).is_zero());
    CHECK(hermiticity_defect(2, A, mono(phi2), FockVector::vacuum()).is_zero());

    for (std::uint32_t lu = 0; lu <= 3; ++lu)
        for (const auto& ku : enumerate_level(lu))
            for (std::uint32_t lv = 0; lv <= 3; ++lv)
                for (const auto& kv : enumerate_level(lv))
                    for (int n = -2; n <= 2; ++n)
                        CHECK(hermiticity_defect(n, A, mono(ku), mono(kv)).is_zero());
}

TEST_CASE("highest weight state") {
    CHECK(highest_weight_check(A, 5));
    CHECK(apply_l(0, A, FockVector::vacuum()).coefficient(Partition{}) == conformal_weight(A));
    CHECK(highest_weight_check(reflect(A), 5));
    CHECK(conformal_weight(reflect(A)) == conformal_weight(A));
}
