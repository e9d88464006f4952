#pragma once
// Small exact linear algebra over Z and Q: ranks, determinants, integer
// kernels and lattice saturation. Matrices are row lists.

#include "vanish/exact.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace vanish {

using IntMatrix = std::vector<IntVec>;

/// Fraction-free (Bareiss) determinant of a square integer matrix.
inline Int determinant(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    for (const auto& row : m)
        if (row.size() != n) throw InputError("determinant of a non-square matrix");
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace detail {

// Row echelon form over Q; returns the pivot columns.
inline std::vector<std::size_t> echelon(std::vector<std::vector<Rat>>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[row], m[p]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || m[i][c] == 0) continue;
            Rat f = m[i][c] / m[row][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

inline std::vector<std::vector<Rat>> to_rat(const IntMatrix& a) {
    std::vector<std::vector<Rat>> m;
    m.reserve(a.size());
    for (const auto& row : a) {
        std::vector<Rat> r;
        r.reserve(row.size());
        for (const auto& x : row) r.emplace_back(x);
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace detail

inline std::size_t rank(const IntMatrix& rows) {
    if (rows.empty()) return 0;
    auto m = detail::to_rat(rows);
    return detail::echelon(m, rows.front().size()).size();
}

/// Columns that carry pivots when the rows are brought to echelon form.
/// Projecting onto them is injective on the row span.
inline std::vector<std::size_t> pivot_columns(const IntMatrix& rows) {
    if (rows.empty()) return {};
    auto m = detail::to_rat(rows);
    return detail::echelon(m, rows.front().size());
}

/// Basis of the integer kernel {x in Z^d : A x = 0}. The basis spans a
/// saturated sublattice. Column-style extended-gcd reduction.
inline IntMatrix integer_kernel(const IntMatrix& a, std::size_t d) {
    IntMatrix cols(d, IntVec(a.size()));  // columns of A
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != d) throw InputError("integer_kernel: ragged matrix");
        for (std::size_t j = 0; j < d; ++j) cols[j][i] = a[i][j];
    }
    IntMatrix u(d, zero_vec(d));  // columns of the unimodular transform
    for (std::size_t j = 0; j < d; ++j) u[j][j] = 1;

    auto combine = [&](std::size_t p, std::size_t q, const Int& s, const Int& t, const Int& x,
                       const Int& y) {
        // col_p <- s col_p + t col_q ; col_q <- x col_p + y col_q
        for (auto* m : {&cols, &u}) {
            auto& cp = (*m)[p];
            auto& cq = (*m)[q];
            for (std::size_t i = 0; i < cp.size(); ++i) {
                Int np = s * cp[i] + t * cq[i];
                Int nq = x * cp[i] + y * cq[i];
                cp[i] = std::move(np);
                cq[i] = std::move(nq);
            }
        }
    };

    std::size_t col = 0;
    for (std::size_t r = 0; r < a.size() && col < d; ++r) {
        for (std::size_t j = col + 1; j < d; ++j) {
            if (cols[j][r] == 0) continue;
            if (cols[col][r] == 0) {
                std::swap(cols[col], cols[j]);
                std::swap(u[col], u[j]);
                continue;
            }
            Int a0 = cols[col][r], b0 = cols[j][r];
            // extended gcd
            Int old_r = a0, rr = b0, old_s = 1, s = 0, old_t = 0, t = 1;
            while (rr != 0) {
                Int q = old_r / rr;
                Int tmp = old_r - q * rr;
                old_r = rr;
                rr = tmp;
                tmp = old_s - q * s;
                old_s = s;
                s = tmp;
                tmp = old_t - q * t;
                old_t = t;
                t = tmp;
            }
            Int g = old_r;
            combine(col, j, old_s, old_t, -b0 / g, a0 / g);
        }
        if (cols[col][r] != 0) ++col;
    }
    IntMatrix kernel;
    for (std::size_t j = col; j < d; ++j) kernel.push_back(u[j]);
    return kernel;
}

/// Integer basis of span_R(vectors) ∩ Z^d. Returns the standard basis when
/// the vectors span R^d, so full-rank callers keep their coordinates.
inline IntMatrix saturated_basis(const IntMatrix& vectors, std::size_t d) {
    IntMatrix nonzero;
    for (const auto& v : vectors)
        if (!is_zero(v)) nonzero.push_back(v);
    if (nonzero.empty()) return {};
    if (rank(nonzero) == d) {
        IntMatrix id;
        for (std::size_t i = 0; i < d; ++i) id.push_back(unit_vec(d, i));
        return id;
    }
    IntMatrix orth = integer_kernel(nonzero, d);
    return integer_kernel(orth, d);
}

/// Coordinates of w in the basis (rows of `basis`), exact over Q; nullopt
/// if w is outside the span.
inline std::optional<std::vector<Rat>> coordinates(const IntMatrix& basis, const IntVec& w) {
    const std::size_t r = basis.size();
    const std::size_t d = w.size();
    // Solve sum_i x_i basis_i = w: d equations, r unknowns.
    std::vector<std::vector<Rat>> m(d, std::vector<Rat>(r + 1));
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < r; ++i) m[j][i] = Rat(basis[i][j]);
        m[j][r] = Rat(w[j]);
    }
    auto piv = detail::echelon(m, r + 1);
    if (!piv.empty() && piv.back() == r) return std::nullopt;
    std::vector<Rat> x(r);
    for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = m[k][r] / m[k][piv[k]];
    return x;
}

/// Integer normal to the hyperplane through the origin spanned by the
/// r-1 rows of `dirs` in R^r (generalised cross product).
inline IntVec cross_normal(const IntMatrix& dirs, std::size_t r) {
    IntVec n(r);
    for (std::size_t j = 0; j < r; ++j) {
        IntMatrix minor;
        minor.reserve(dirs.size());
        for (const auto& row : dirs) {
            IntVec m;
            m.reserve(r - 1);
            for (std::size_t c = 0; c < r; ++c)
                if (c != j) m.push_back(row[c]);
            minor.push_back(std::move(m));
        }
        Int det = determinant(std::move(minor));
        n[j] = (j % 2 == 0) ? det : Int(-det);
    }
    return n;
}

}  // namespace vanish
