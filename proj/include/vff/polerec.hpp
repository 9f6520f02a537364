#pragma once

/*
 * Formal reduction of singular-integral types.
 *
 * A type is a Young diagram of singularity orders plus a count of smooth
 * insertions. Clearing the factor (alpha - a_{r*,s1}) expresses a type in
 * terms of strictly lower types:
 *
 *   all-ones case: the gradient and unit-circle boundary terms leave a
 *   single type with one singularity fewer; the exchange term vanishes by
 *   antisymmetry and the small circles vanish in the limit.
 *
 *   s1 >= 2: J1 moves boxes from the first column to a lower column of the
 *   same diagram, J2 lowers the first column (fully cleared columns become
 *   smooth insertions), J3 splits the first column against a fresh
 *   insertion, and the boundary term J4t drops the first column; the
 *   remaining terms vanish in the limit.
 *
 * Children are canonical deduplicated types; reduction trees are built as
 * DAGs with shared subtrees, memoised per call.
 */

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vff/errors.hpp"
#include "vff/partition.hpp"
#include "vff/rational.hpp"

namespace vff {

struct IntegralType {
    Partition singular;          // the s-vector, possibly empty
    std::uint32_t smooth_count;  // insertions with no singularity

    IntegralType() : smooth_count(0) {}
    explicit IntegralType(Partition s, std::uint32_t smooth = 0)
        : singular(std::move(s)), smooth_count(smooth) {}

    std::uint32_t level() const { return singular.level(); }

    friend bool operator==(const IntegralType& a, const IntegralType& b) {
        return a.singular == b.singular && a.smooth_count == b.smooth_count;
    }
    friend bool operator<(const IntegralType& a, const IntegralType& b) {
        if (!(a.singular == b.singular)) return a.singular < b.singular;
        return a.smooth_count < b.smooth_count;
    }

    std::string str() const {
        std::string s = singular.str();
        if (smooth_count > 0) s += "+" + std::to_string(smooth_count) + "sm";
        return s;
    }
};

// originating term of a reduction child
enum class ReductionTerm { GradientBoundary, J1, J2, J3, J4t };

inline const char* term_name(ReductionTerm t) {
    switch (t) {
        case ReductionTerm::GradientBoundary: return "I1+I3t";
        case ReductionTerm::J1: return "J1";
        case ReductionTerm::J2: return "J2";
        case ReductionTerm::J3: return "J3";
        case ReductionTerm::J4t: return "J4t";
    }
    return "?";
}

using KacPair = std::pair<std::uint32_t, std::uint32_t>;

struct ReductionStep {
    KacPair factor;  // (r*, s1): the cleared linear factor alpha - a_{r*,s1}
    std::map<IntegralType, std::set<ReductionTerm>> children;
};

inline ReductionStep reduce(const IntegralType& t) {
    if (t.singular.empty()) throw EmptyType();
    const auto& s = t.singular.columns();
    const std::uint32_t r = t.singular.length();
    const std::uint32_t s1 = s[0];
    const std::uint32_t rs = r_star(t.singular);

    ReductionStep out;
    out.factor = {rs, s1};

    auto emit = [&out](Partition p, std::uint32_t smooth, ReductionTerm label) {
        out.children[IntegralType(std::move(p), smooth)].insert(label);
    };

    if (s1 == 1) {
        emit(Partition::all_ones(r - 1), t.smooth_count, ReductionTerm::GradientBoundary);
        return out;
    }

    std::vector<std::uint32_t> rest(s.begin() + 1, s.end());

    // J1: move l boxes from the first column onto a strictly lower column
    for (std::uint32_t j = rs + 1; j <= r; ++j)
        for (std::uint32_t l = 1; s[j - 1] + l + 1 <= s1; ++l) {
            std::vector<std::uint32_t> cols = s;
            cols[0] = s1 - l;
            cols[j - 1] = s[j - 1] + l;
            emit(Partition::sorted(std::move(cols)), t.smooth_count, ReductionTerm::J1);
        }

    // J2: lower the first column by k; a fully cleared column turns smooth
    for (std::uint32_t k = 1; k <= s1; ++k) {
        if (k == s1) {
            emit(Partition(rest), t.smooth_count + 1, ReductionTerm::J2);
        } else {
            std::vector<std::uint32_t> cols = rest;
            cols.push_back(s1 - k);
            emit(Partition::sorted(std::move(cols)), t.smooth_count, ReductionTerm::J2);
        }
    }

    // J3: split the first column against a fresh insertion
    for (std::uint32_t l = 1; l + 1 <= s1; ++l) {
        std::vector<std::uint32_t> cols = rest;
        cols.push_back(s1 - l);
        cols.push_back(l);
        emit(Partition::sorted(std::move(cols)), t.smooth_count, ReductionTerm::J3);
    }

    // J4t: unit-circle boundary removes the first singularity
    emit(Partition(rest), t.smooth_count, ReductionTerm::J4t);

    return out;
}

struct ReductionBase {
    // empty: reduce all the way to the empty type
    std::optional<KacPair> rectangle;

    static ReductionBase empty_only() { return {}; }
    static ReductionBase rect(std::uint32_t r, std::uint32_t s) { return {KacPair{r, s}}; }
};

struct ReductionNode;
using ReductionNodePtr = std::shared_ptr<const ReductionNode>;

struct ReductionNode {
    enum class Terminal { None, EmptyType, RectangleBase };

    IntegralType type;
    Terminal terminal = Terminal::None;
    std::optional<KacPair> factor;  // present iff the node reduces
    std::vector<std::pair<std::set<ReductionTerm>, ReductionNodePtr>> children;
};

namespace detail {

inline ReductionNodePtr build_tree(const IntegralType& t, const ReductionBase& base,
                                   std::map<IntegralType, ReductionNodePtr>& memo) {
    auto found = memo.find(t);
    if (found != memo.end()) return found->second;

    auto node = std::make_shared<ReductionNode>();
    node->type = t;
    if (t.singular.empty()) {
        node->terminal = ReductionNode::Terminal::EmptyType;
    } else if (base.rectangle &&
               t.singular == Partition::rectangle(base.rectangle->first, base.rectangle->second)) {
        node->terminal = ReductionNode::Terminal::RectangleBase;
    } else {
        const ReductionStep step = reduce(t);
        node->factor = step.factor;
        for (const auto& [child, labels] : step.children)
            node->children.emplace_back(labels, build_tree(child, base, memo));
    }
    ReductionNodePtr ptr = node;
    memo.emplace(t, ptr);
    return ptr;
}

} // namespace detail

inline ReductionNodePtr reduction_tree(const IntegralType& t,
                                       const ReductionBase& base = ReductionBase::empty_only()) {
    std::map<IntegralType, ReductionNodePtr> memo;
    return detail::build_tree(t, base, memo);
}

// Union of the cleared factors over the whole reduction tree.
inline std::set<KacPair> pole_candidates(const IntegralType& t,
                                         const ReductionBase& base = ReductionBase::empty_only()) {
    std::set<KacPair> out;
    std::set<const ReductionNode*> seen;
    auto walk = [&](auto&& self, const ReductionNode* n) -> void {
        if (!seen.insert(n).second) return;
        if (n->factor) out.insert(*n->factor);
        for (const auto& [labels, child] : n->children) self(self, child.get());
    };
    const ReductionNodePtr root = reduction_tree(t, base);
    walk(walk, root.get());
    return out;
}

// Combinatorial check that the reduction with base (r,(s)) never clears the
// factor alpha - a_{r,s}: true iff no type of level <= rs produces the pair
// (r,s) as a pole candidate.
inline bool verify_regularity(std::uint32_t r, std::uint32_t s) {
    const ReductionBase base = ReductionBase::rect(r, s);
    for (std::uint32_t level = 1; level <= r * s; ++level)
        for (const auto& p : enumerate_level(level))
            if (pole_candidates(IntegralType(p), base).count({r, s})) return false;
    return true;
}

// |s| / (2r), the window index of the integrability region.
inline Rational window_index(const IntegralType& t) {
    if (t.singular.empty()) throw EmptyType();
    return Rational(t.level(), 2 * long(t.singular.length()));
}

// |s| / r, the first-sentence variant; both indices are exposed.
inline Rational integrability_index(const IntegralType& t) {
    if (t.singular.empty()) throw EmptyType();
    return Rational(t.level(), long(t.singular.length()));
}

// The rectangle (r,(s)) lies inside its own window: s > s/2.
inline bool rectangle_in_window(std::uint32_t r, std::uint32_t s) {
    (void)r;
    return Rational(long(s)) > Rational(long(s), 2);
}

} // namespace vff
