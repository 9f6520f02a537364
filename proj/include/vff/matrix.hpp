#pragma once

/*
 * Dense matrices over Scalar, indexed by partitions of a fixed level, with
 * the exact linear algebra the module-structure computations need:
 *
 *  - determinant by fraction-free Bareiss elimination after clearing
 *    denominators row by row (divisions are exact polynomial divisions),
 *  - reduced row echelon form over the fraction field for rank, kernels
 *    and linear solves (first-nonzero pivoting keeps results deterministic).
 */

#include <optional>
#include <utility>
#include <vector>

#include "vff/errors.hpp"
#include "vff/partition.hpp"
#include "vff/scalar.hpp"

namespace vff {

class ScalarMatrix {
public:
    ScalarMatrix() = default;
    ScalarMatrix(std::size_t rows, std::size_t cols)
        : entries_(rows, std::vector<Scalar>(cols, Scalar::zero())) {}

    std::vector<Partition> row_index;
    std::vector<Partition> col_index;

    std::size_t rows() const { return entries_.size(); }
    std::size_t cols() const { return entries_.empty() ? 0 : entries_[0].size(); }

    Scalar& at(std::size_t i, std::size_t j) { return entries_[i][j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }

    static ScalarMatrix identity(std::size_t n) {
        ScalarMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
        return m;
    }

    ScalarMatrix transpose() const {
        ScalarMatrix t(cols(), rows());
        t.row_index = col_index;
        t.col_index = row_index;
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
        if (a.cols() != b.rows()) throw Error("matrix shape mismatch");
        ScalarMatrix c(a.rows(), b.cols());
        c.row_index = a.row_index;
        c.col_index = b.col_index;
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a.at(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < b.cols(); ++j)
                    c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        return c;
    }

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
        return a.entries_ == b.entries_;
    }

    ScalarMatrix substitute(const Scalar& g_val, const Scalar& a_val) const {
        ScalarMatrix m(rows(), cols());
        m.row_index = row_index;
        m.col_index = col_index;
        for (std::size_t i = 0; i < rows(); ++i)
            for (std::size_t j = 0; j < cols(); ++j) m.at(i, j) = at(i, j).substitute(g_val, a_val);
        return m;
    }

private:
    std::vector<std::vector<Scalar>> entries_;
};

namespace linalg {

inline BivariatePoly poly_lcm(const BivariatePoly& a, const BivariatePoly& b) {
    const BivariatePoly g = BivariatePoly::gcd(a, b);
    return (*BivariatePoly::divide_exact(a, g) * b).primitive();
}

// Determinant of a real-entry matrix by Bareiss elimination on the
// denominator-cleared polynomial matrix. Entries must be real (no i part),
// which holds for every matrix this library builds.
inline Scalar determinant(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) throw Error("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Scalar::one();

    std::vector<std::vector<BivariatePoly>> a(n, std::vector<BivariatePoly>(n));
    PolyFraction scale(Rational(1));  // det = bareiss / scale
    for (std::size_t i = 0; i < n; ++i) {
        BivariatePoly row_den(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (!m.at(i, j).is_real()) throw Error("determinant requires real entries");
            row_den = poly_lcm(row_den, m.at(i, j).re().den());
        }
        for (std::size_t j = 0; j < n; ++j) {
            const PolyFraction& e = m.at(i, j).re();
            a[i][j] = e.num() * *BivariatePoly::divide_exact(row_den, e.den());
        }
        scale = scale * PolyFraction(row_den);
    }

    int sign = 1;
    BivariatePoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return Scalar::zero();
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BivariatePoly t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                a[i][j] = *BivariatePoly::divide_exact(t, prev);
            }
            a[i][k] = {};
        }
        prev = a[k][k];
    }
    Scalar det{PolyFraction(a[n - 1][n - 1]), PolyFraction()};
    if (sign < 0) det = -det;
    return det / Scalar{scale, PolyFraction()};
}

// In-place reduced row echelon form over the fraction field.
// Returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(std::vector<std::vector<Scalar>>& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[r], a[p]);
        const Scalar inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] = inv * a[r][j];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const Scalar f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(const ScalarMatrix& m) {
    std::vector<std::vector<Scalar>> a(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i].push_back(m.at(i, j));
    return rref(a).size();
}

// Basis of { x : M x = 0 }, one vector per free column, deterministic:
// the free coordinate is 1, pivot coordinates are solved from the rref.
inline std::vector<std::vector<Scalar>> kernel(const ScalarMatrix& m) {
    const std::size_t cols = m.cols();
    std::vector<std::vector<Scalar>> a(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < cols; ++j) a[i].push_back(m.at(i, j));
    const std::vector<std::size_t> pivots = rref(a);

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> x(cols, Scalar::zero());
        x[free] = Scalar::one();
        for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = -a[pr][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

// Solves A X = B for square invertible A; nullopt when A is singular.
// Real-entry systems run through fraction-free Bareiss forward elimination
// (intermediate entries stay polynomial) with a fraction back-substitution;
// anything else falls back to field elimination.
inline std::optional<ScalarMatrix> solve(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows()) throw Error("solve: shape mismatch");
    const std::size_t n = a.rows(), m = b.cols();

    bool all_real = true;
    for (std::size_t i = 0; i < n && all_real; ++i) {
        for (std::size_t j = 0; j < n; ++j) all_real = all_real && a.at(i, j).is_real();
        for (std::size_t j = 0; j < m; ++j) all_real = all_real && b.at(i, j).is_real();
    }

    if (!all_real) {
        std::vector<std::vector<Scalar>> aug(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) aug[i].push_back(a.at(i, j));
            for (std::size_t j = 0; j < m; ++j) aug[i].push_back(b.at(i, j));
        }
        const auto pivots = rref(aug);
        if (pivots.size() != n) return std::nullopt;
        ScalarMatrix x(n, m);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) x.at(i, j) = aug[i][n + j];
        return x;
    }

    // denominator-cleared augmented matrix [A|B]
    const std::size_t w = n + m;
    std::vector<std::vector<BivariatePoly>> t(n, std::vector<BivariatePoly>(w));
    for (std::size_t i = 0; i < n; ++i) {
        BivariatePoly row_den(1);
        for (std::size_t j = 0; j < n; ++j) row_den = poly_lcm(row_den, a.at(i, j).re().den());
        for (std::size_t j = 0; j < m; ++j) row_den = poly_lcm(row_den, b.at(i, j).re().den());
        for (std::size_t j = 0; j < w; ++j) {
            const PolyFraction& e = j < n ? a.at(i, j).re() : b.at(i, j - n).re();
            t[i][j] = e.num() * *BivariatePoly::divide_exact(row_den, e.den());
        }
    }

    BivariatePoly prev(1);
    for (std::size_t k = 0; k < n; ++k) {
        if (t[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && t[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return std::nullopt;
            std::swap(t[k], t[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < w; ++j) {
                BivariatePoly u = t[k][k] * t[i][j] - t[i][k] * t[k][j];
                t[i][j] = *BivariatePoly::divide_exact(u, prev);
            }
            t[i][k] = {};
        }
        prev = t[k][k];
    }

    ScalarMatrix x(n, m);
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t i = n; i-- > 0;) {
            Scalar acc{PolyFraction(t[i][n + c]), PolyFraction()};
            for (std::size_t j = i + 1; j < n; ++j)
                acc -= Scalar{PolyFraction(t[i][j]), PolyFraction()} * x.at(j, c);
            x.at(i, c) = acc / Scalar{PolyFraction(t[i][i]), PolyFraction()};
        }
    }
    return x;
}

} // namespace linalg

} // namespace vff
