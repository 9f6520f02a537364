#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "vff/polerec.hpp"

using namespace vff;

TEST_CASE("single reduction steps") {
    // one singularity of order one
    const auto one = reduce(IntegralType(Partition{1}));
    CHECK(one.factor == KacPair{1, 1});
    REQUIRE(one.children.size() == 1);
    CHECK(one.children.begin()->first == IntegralType(Partition{}));

    // (1,1): factor (2,1), single child (1)
    const auto ones2 = reduce(IntegralType(Partition{1, 1}));
    CHECK(ones2.factor == KacPair{2, 1});
    REQUIRE(ones2.children.size() == 1);
    CHECK(ones2.children.begin()->first == IntegralType(Partition{1}));

    CHECK_THROWS_AS(reduce(IntegralType(Partition{})), EmptyType);
}

TEST_CASE("reduction of (3,1)") {
    const auto step = reduce(IntegralType(Partition{3, 1}));
    CHECK(step.factor == KacPair{1, 3});

    auto has = [&](Partition p, std::uint32_t smooth, ReductionTerm t) {
        auto it = step.children.find(IntegralType(std::move(p), smooth));
        return it != step.children.end() && it->second.count(t) > 0;
    };
    CHECK(has(Partition{2, 2}, 0, ReductionTerm::J1));
    CHECK(has(Partition{2, 1}, 0, ReductionTerm::J2));
    CHECK(has(Partition{1, 1}, 0, ReductionTerm::J2));
    CHECK(has(Partition{1}, 1, ReductionTerm::J2));  // fully cleared column turns smooth
    CHECK(has(Partition{2, 1, 1}, 0, ReductionTerm::J3));
    CHECK(has(Partition{1}, 0, ReductionTerm::J4t));

    // the complete deduplicated set
    CHECK(step.children.size() == 6);
}

TEST_CASE("reduction trees") {
    const auto leaf_tree = reduction_tree(IntegralType(Partition{1}));
    REQUIRE(leaf_tree->factor.has_value());
    CHECK(*leaf_tree->factor == KacPair{1, 1});
    REQUIRE(leaf_tree->children.size() == 1);
    CHECK(leaf_tree->children[0].second->terminal == ReductionNode::Terminal::EmptyType);

    const auto t2 = reduction_tree(IntegralType(Partition{1, 1}));
    CHECK(*t2->factor == KacPair{2, 1});
    CHECK(*t2->children[0].second->factor == KacPair{1, 1});

    // rectangle bases terminate the recursion
    const auto rect = reduction_tree(IntegralType(Partition{2, 2}), ReductionBase::rect(2, 2));
    CHECK(rect->terminal == ReductionNode::Terminal::RectangleBase);
    CHECK(!rect->factor.has_value());
}

TEST_CASE("measure decreases along every edge") {
    for (std::uint32_t lvl = 1; lvl <= 6; ++lvl)
        for (const auto& p : enumerate_level(lvl)) {
            const auto step = reduce(IntegralType(p));
            for (const auto& [child, labels] : step.children) {
                CHECK(child.level() <= lvl);
                if (child.level() == lvl) {
                    // same-level children are strictly below in the move order
                    CHECK(preceq(child.singular, p));
                    CHECK(child.singular != p);
                    CHECK(distance_to_minimal(child.singular) < distance_to_minimal(p));
                }
            }
        }
}

TEST_CASE("factor partition is a sub-diagram of the node type") {
    for (std::uint32_t lvl = 1; lvl <= 6; ++lvl)
        for (const auto& p : enumerate_level(lvl)) {
            const auto step = reduce(IntegralType(p));
            const auto [rs, s1] = step.factor;
            REQUIRE(rs <= p.length());
            for (std::uint32_t j = 1; j <= rs; ++j) CHECK(p.columns()[j - 1] == s1);
        }
}

TEST_CASE("pole candidates") {
    // all-ones types: exactly {(r',1) : r' <= r}
    for (std::uint32_t r = 1; r <= 5; ++r) {
        std::set<KacPair> expect;
        for (std::uint32_t rp = 1; rp <= r; ++rp) expect.insert({rp, 1});
        CHECK(pole_candidates(IntegralType(Partition::all_ones(r))) == expect);
    }

    CHECK(pole_candidates(IntegralType(Partition{2})) ==
          std::set<KacPair>{{1, 2}, {1, 1}, {2, 1}});

    CHECK(pole_candidates(IntegralType(Partition{})).empty());

    // all candidates of level <= 6 lie in the Kac table (positive indices)
    for (std::uint32_t lvl = 1; lvl <= 6; ++lvl)
        for (const auto& p : enumerate_level(lvl))
            for (const auto& [r, s] : pole_candidates(IntegralType(p))) {
                CHECK(r >= 1);
                CHECK(s >= 1);
            }
}

TEST_CASE("regularity at the rectangle point") {
    CHECK(verify_regularity(2, 1));
    CHECK(verify_regularity(1, 2));
    CHECK(verify_regularity(2, 2));
    for (std::uint32_t r = 1; r <= 6; ++r)
        for (std::uint32_t s = 1; r * s <= 6; ++s) CHECK(verify_regularity(r, s));
}

TEST_CASE("window indices") {
    CHECK(window_index(IntegralType(Partition::rectangle(3, 5))) == Rational(5, 2));
    CHECK(window_index(IntegralType(Partition{3, 1})) == Rational(1));
    CHECK(integrability_index(IntegralType(Partition{3, 1})) == Rational(2));
    CHECK_THROWS_AS(window_index(IntegralType(Partition{})), EmptyType);

    for (std::uint32_t r = 1; r <= 10; ++r)
        for (std::uint32_t s = 1; s <= 10; ++s) CHECK(rectangle_in_window(r, s));
}

TEST_CASE("smooth count bookkeeping") {
    // smooth insertions ride along unchanged except through J2 full clearing
    const auto step = reduce(IntegralType(Partition{2}, 3));
    auto it = step.children.find(IntegralType(Partition{}, 4));
    REQUIRE(it != step.children.end());
    CHECK(it->second.count(ReductionTerm::J2) > 0);
    CHECK(step.children.count(IntegralType(Partition{}, 3)) > 0);  // J4t keeps the count
    CHECK(step.children.count(IntegralType(Partition{1}, 3)) > 0);
    CHECK(step.children.count(IntegralType(Partition{1, 1}, 3)) > 0);
}
