#pragma once

/*
 * Young diagrams, the elementary-move algorithm, the induced partial order
 * on fixed-level partitions, and partition counting.
 *
 * A Partition stores its columns in non-increasing order (s_1 >= ... >= s_r >= 1).
 * The j-th elementary move takes a box from the j-th column and moves it to
 * the first column on the right that still yields a diagram; repeated moves
 * flatten every diagram to the minimal one-box-per-column partition (1^N).
 */

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vff/errors.hpp"

namespace vff {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::uint32_t> columns) : cols_(std::move(columns)) {
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            if (cols_[i] < 1) throw Error("partition entries must be positive");
            if (i > 0 && cols_[i] > cols_[i - 1]) throw Error("partition entries must be non-increasing");
        }
    }
    Partition(std::initializer_list<std::uint32_t> columns) : Partition(std::vector<std::uint32_t>(columns)) {}

    static Partition sorted(std::vector<std::uint32_t> entries) {
        std::sort(entries.begin(), entries.end(), std::greater<>());
        return Partition(std::move(entries));
    }

    // n ones
    static Partition all_ones(std::uint32_t n) { return Partition(std::vector<std::uint32_t>(n, 1)); }
    // r columns of height s
    static Partition rectangle(std::uint32_t r, std::uint32_t s) {
        return Partition(std::vector<std::uint32_t>(r, s));
    }

    const std::vector<std::uint32_t>& columns() const { return cols_; }
    bool empty() const { return cols_.empty(); }
    std::uint32_t length() const { return static_cast<std::uint32_t>(cols_.size()); }
    std::uint32_t level() const {
        std::uint32_t n = 0;
        for (auto c : cols_) n += c;
        return n;
    }

    // multiplicity form: n -> number of columns of height n
    std::map<std::uint32_t, std::uint32_t> multiplicities() const {
        std::map<std::uint32_t, std::uint32_t> m;
        for (auto c : cols_) ++m[c];
        return m;
    }
    static Partition from_multiplicities(const std::map<std::uint32_t, std::uint32_t>& m) {
        std::vector<std::uint32_t> cols;
        for (auto it = m.rbegin(); it != m.rend(); ++it) {
            if (it->first < 1) throw Error("multiplicity keys must be positive");
            cols.insert(cols.end(), it->second, it->first);
        }
        return Partition(std::move(cols));
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.cols_ == b.cols_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.cols_ != b.cols_; }
    // graded, then lexicographically descending on columns: within one level,
    // (N) comes first and (1^N) last, matching the enumeration order.
    friend bool operator<(const Partition& a, const Partition& b) {
        const std::uint32_t la = a.level(), lb = b.level();
        if (la != lb) return la < lb;
        return std::lexicographical_compare(b.cols_.begin(), b.cols_.end(), a.cols_.begin(), a.cols_.end());
    }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < cols_.size(); ++i) {
            if (i) os << ',';
            os << cols_[i];
        }
        os << ')';
        return os.str();
    }
    friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.str(); }

private:
    std::vector<std::uint32_t> cols_;
};

// All partitions of N, each exactly once, largest-first lexicographic order.
inline std::vector<Partition> enumerate_level(std::uint32_t n) {
    std::vector<Partition> out;
    std::vector<std::uint32_t> cur;
    auto rec = [&](auto&& self, std::uint32_t remaining, std::uint32_t max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (std::uint32_t h = std::min(remaining, max_part); h >= 1; --h) {
            cur.push_back(h);
            self(self, remaining - h, h);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

enum class P0Convention { One, Zero };

// p(N). The flag selects the value at N = 0: the determinant formula needs
// p(0) = 1 (default); the alternative convention p(0) = 0 is kept selectable.
inline std::uint64_t partition_count(std::uint32_t n, P0Convention p0 = P0Convention::One) {
    if (n == 0) return p0 == P0Convention::One ? 1 : 0;
    // p(n, k): partitions of n into parts <= k
    std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::uint32_t k = 0; k <= n; ++k) t[0][k] = 1;
    for (std::uint32_t m = 1; m <= n; ++m)
        for (std::uint32_t k = 1; k <= n; ++k)
            t[m][k] = t[m][k - 1] + (m >= k ? t[m - k][k] : 0);
    return t[n][n];
}

// index of the last column of maximal height
inline std::uint32_t r_star(const Partition& p) {
    if (p.empty()) throw EmptyPartition();
    const auto& s = p.columns();
    std::uint32_t j = 1;
    while (j < s.size() && s[j] == s[0]) ++j;
    return j;
}

// The j-th elementary move (1-based). Fixed point when s_j = 1.
inline Partition tau(std::uint32_t j, const Partition& p) {
    if (j < 1 || j > p.length()) throw IndexOutOfRange("tau index " + std::to_string(j) + " out of range");
    std::vector<std::uint32_t> s = p.columns();
    const std::uint32_t sj = s[j - 1];
    if (sj == 1) return p;
    // last column of height s_j
    std::uint32_t jstar = j;
    while (jstar < s.size() && s[jstar] == sj) ++jstar;
    const std::uint32_t sr = s.back();
    if (sj == sr || sj == sr + 1) {
        s[jstar - 1] -= 1;
        s.push_back(1);
    } else {
        // first column of height <= s_j - 2 receives the box
        std::uint32_t k = 0;
        while (s[k] > sj - 2) ++k;
        s[jstar - 1] -= 1;
        s[k] += 1;
    }
    return Partition(std::move(s));
}

namespace detail {

// Partitions reachable from p by sequences of elementary moves (p included).
inline std::set<Partition> reachable_set(const Partition& p) {
    std::set<Partition> seen{p};
    std::queue<Partition> todo;
    todo.push(p);
    while (!todo.empty()) {
        const Partition cur = todo.front();
        todo.pop();
        for (std::uint32_t j = 1; j <= cur.length(); ++j) {
            Partition next = tau(j, cur);
            if (next != cur && seen.insert(next).second) todo.push(next);
        }
    }
    return seen;
}

} // namespace detail

// a <= b in the elementary-move order (same level required).
inline bool preceq(const Partition& a, const Partition& b) {
    if (a.level() != b.level()) throw LevelMismatch();
    if (a == b) return true;
    return detail::reachable_set(b).count(a) > 0;
}

// BFS distance from p to the minimal partition (1^N).
inline std::uint32_t distance_to_minimal(const Partition& p) {
    const Partition target = Partition::all_ones(p.level());
    if (p == target) return 0;
    std::map<Partition, std::uint32_t> dist{{p, 0}};
    std::queue<Partition> todo;
    todo.push(p);
    while (!todo.empty()) {
        const Partition cur = todo.front();
        todo.pop();
        for (std::uint32_t j = 1; j <= cur.length(); ++j) {
            Partition next = tau(j, cur);
            if (next == cur || dist.count(next)) continue;
            dist[next] = dist[cur] + 1;
            if (next == target) return dist[next];
            todo.push(next);
        }
    }
    throw Error("minimal partition unreachable from " + p.str());
}

} // namespace vff
