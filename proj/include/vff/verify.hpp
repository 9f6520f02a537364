#pragma once

/*
 * Named verification suites shared by the command-line tool. Each item is an
 * independently evaluated assertion bundle; a suite passes when every item
 * does. Levels are capped by the caller (the CLI wires in --max-level and
 * VFF_MAX_LEVEL).
 */

#include <algorithm>
#include <string>
#include <vector>

#include "vff/polerec.hpp"
#include "vff/structure.hpp"
#include "vff/sugawara.hpp"

namespace vff {

struct VerifyItem {
    std::string name;
    bool passed;
};

inline std::vector<VerifyItem> verify_virasoro(std::uint32_t max_level) {
    const Scalar a = Scalar::alpha();
    std::vector<VerifyItem> items;

    bool oracle = true;
    for (std::uint32_t lvl = 0; lvl <= std::min(max_level, 6u) && oracle; ++lvl)
        for (const auto& k : enumerate_level(lvl))
            for (int n = -5; n <= 5 && oracle; ++n) {
                const FockVector v = FockVector::monomial(k, Scalar::one());
                oracle = apply_l(n, a, v) == closed_form_l(n, a, v);
            }
    items.push_back({"sugawara matches closed form", oracle});

    bool stability = true;
    for (std::uint32_t lvl = 0; lvl <= std::min(max_level, 5u) && stability; ++lvl)
        for (const auto& k : enumerate_level(lvl))
            for (int n = -4; n <= 4 && stability; ++n) {
                const FockVector v = FockVector::monomial(k, Scalar::one());
                stability = apply_l(n, a, v) == apply_l(n, a, v, 2);
            }
    items.push_back({"truncation window stable", stability});

    bool commutators = true;
    for (std::uint32_t lvl = 0; lvl <= std::min(max_level, 5u) && commutators; ++lvl)
        for (const auto& k : enumerate_level(lvl))
            for (int n = -4; n <= 4 && commutators; ++n)
                for (int m = -4; m <= n && commutators; ++m)
                    commutators =
                        commutator_defect(n, m, a, FockVector::monomial(k, Scalar::one())).is_zero();
    items.push_back({"virasoro commutation relations", commutators});

    bool hermitian = true;
    const std::uint32_t hl = std::min(max_level, 4u);
    for (std::uint32_t lu = 0; lu <= hl && hermitian; ++lu)
        for (const auto& ku : enumerate_level(lu))
            for (std::uint32_t lv = 0; lv <= hl && hermitian; ++lv)
                for (const auto& kv : enumerate_level(lv))
                    for (int n = -3; n <= 3 && hermitian; ++n)
                        hermitian = hermiticity_defect(n, a, FockVector::monomial(ku, Scalar::one()),
                                                       FockVector::monomial(kv, Scalar::one()))
                                        .is_zero();
    items.push_back({"hermiticity relations", hermitian});

    items.push_back({"vacuum is highest weight", highest_weight_check(a, 5)});
    return items;
}

inline std::vector<VerifyItem> verify_kac(std::uint32_t max_level, P0Convention p0 = P0Convention::One) {
    std::vector<VerifyItem> items;
    for (std::uint32_t n = 1; n <= std::min(max_level, 5u); ++n) {
        bool ok = true;
        Scalar ratio;
        try {
            ratio = kac_determinant_check(n, p0).ratio;
        } catch (const FactorizationMismatch&) {
            ok = false;
        }
        if (ok && n == 2) ok = ratio == Scalar(32);
        items.push_back({"kac determinant level " + std::to_string(n), ok});
    }
    return items;
}

inline std::vector<VerifyItem> verify_poset(std::uint32_t max_level) {
    const std::uint32_t cap = std::min(max_level, 8u);
    std::vector<VerifyItem> items;

    bool counts = true;
    for (std::uint32_t n = 1; n <= std::max(cap, 8u) + 8; ++n)
        counts = counts && enumerate_level(n).size() == partition_count(n);
    items.push_back({"enumeration matches p(N)", counts});

    bool level_preserved = true, order = true, reach = true;
    for (std::uint32_t n = 1; n <= cap; ++n) {
        const auto all = enumerate_level(n);
        const Partition bottom = Partition::all_ones(n);
        const Partition top{n};
        for (const auto& p : all) {
            for (std::uint32_t j = 1; j <= p.length(); ++j)
                level_preserved = level_preserved && tau(j, p).level() == n;
            reach = reach && preceq(bottom, p) && preceq(p, top);
            if (p != bottom) order = order && !preceq(p, bottom);
            if (p != top) order = order && !preceq(top, p);
        }
    }
    items.push_back({"elementary moves preserve the level", level_preserved});
    items.push_back({"unique minimal and maximal partitions", order});
    items.push_back({"every partition reaches the minimum", reach});
    return items;
}

inline std::vector<VerifyItem> verify_poles(std::uint32_t max_level) {
    const std::uint32_t cap = std::min(max_level, 6u);
    std::vector<VerifyItem> items;

    bool ones = true;
    for (std::uint32_t r = 1; r <= std::min(cap, 5u); ++r) {
        std::set<KacPair> expect;
        for (std::uint32_t rp = 1; rp <= r; ++rp) expect.insert({rp, 1});
        ones = ones && pole_candidates(IntegralType(Partition::all_ones(r))) == expect;
    }
    items.push_back({"all-ones candidates are (r',1)", ones});

    bool in_table = true, measure = true;
    for (std::uint32_t lvl = 1; lvl <= cap; ++lvl)
        for (const auto& p : enumerate_level(lvl)) {
            for (const auto& [r, s] : pole_candidates(IntegralType(p)))
                in_table = in_table && r >= 1 && s >= 1;
            for (const auto& [child, labels] : reduce(IntegralType(p)).children) {
                if (child.level() < lvl) continue;
                measure = measure && preceq(child.singular, p) && child.singular != p &&
                          distance_to_minimal(child.singular) < distance_to_minimal(p);
            }
        }
    items.push_back({"pole candidates lie in the kac table", in_table});
    items.push_back({"reduction measure strictly decreases", measure});

    bool regular = true;
    for (std::uint32_t r = 1; r <= cap; ++r)
        for (std::uint32_t s = 1; r * s <= cap; ++s) regular = regular && verify_regularity(r, s);
    items.push_back({"rectangle points are regular", regular});
    return items;
}

} // namespace vff
