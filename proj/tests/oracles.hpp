#pragma once
// Brute-force reference computations used by the test suites. None of them
// touch the incremental hull: they work from point subsets directly.

#include "vanish/exact.hpp"
#include "vanish/linalg.hpp"

#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using vanish::Int;
using vanish::IntMatrix;
using vanish::IntVec;
using vanish::Rat;

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

// p ∈ conv(S), by Carathéodory over affinely independent subsets.
inline bool in_hull(const std::vector<IntVec>& S, const IntVec& p) {
    const std::size_t d = p.size();
    bool found = false;
    for (std::size_t k = 1; k <= std::min(S.size(), d + 1) && !found; ++k) {
        for_each_subset(S.size(), k, [&](const std::vector<std::size_t>& ids) {
            if (found) return;
            IntMatrix dirs;
            for (std::size_t i = 1; i < k; ++i) dirs.push_back(vanish::sub(S[ids[i]], S[ids[0]]));
            if (vanish::rank(dirs) != dirs.size()) return;
            auto x = vanish::coordinates(dirs, vanish::sub(p, S[ids[0]]));
            if (!x) return;
            Rat sum = 0;
            for (const auto& c : *x) {
                if (c < 0) return;
                sum += c;
            }
            if (sum <= 1) found = true;
        });
    }
    return found;
}

inline std::vector<IntVec> extreme_points(std::vector<IntVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<IntVec> others;
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (others.empty() || !in_hull(others, pts[i])) out.push_back(pts[i]);
    }
    return out;
}

// Facet inequalities <n, x> >= off of a full-dimensional point set, found by
// testing every hyperplane through d of the points.
inline std::map<IntVec, Int> facet_inequalities(const std::vector<IntVec>& pts) {
    const std::size_t d = pts.front().size();
    std::map<IntVec, Int> out;
    for_each_subset(pts.size(), d, [&](const std::vector<std::size_t>& ids) {
        IntMatrix dirs;
        for (std::size_t i = 1; i < d; ++i) dirs.push_back(vanish::sub(pts[ids[i]], pts[ids[0]]));
        IntVec n = vanish::cross_normal(dirs, d);
        if (vanish::is_zero(n)) return;
        n = vanish::primitive_vector(n);
        Int off = vanish::dot(n, pts[ids[0]]);
        bool ge = true, le = true;
        for (const auto& p : pts) {
            Int v = vanish::dot(n, p);
            if (v < off) ge = false;
            if (v > off) le = false;
        }
        if (ge) out.emplace(n, off);
        if (le) out.emplace(vanish::negate(n), -off);
    });
    return out;
}

// Lattice points of t·conv(pts), counted with the brute-force H-description.
inline Int lattice_points(const std::map<IntVec, Int>& ineq, const std::vector<IntVec>& pts, long t) {
    const std::size_t d = pts.front().size();
    IntVec lo(d), hi(d);
    for (std::size_t c = 0; c < d; ++c) {
        lo[c] = pts[0][c];
        hi[c] = pts[0][c];
        for (const auto& p : pts) {
            lo[c] = std::min(lo[c], p[c]);
            hi[c] = std::max(hi[c], p[c]);
        }
        lo[c] *= t;
        hi[c] *= t;
    }
    Int count = 0;
    IntVec x = lo;
    while (true) {
        bool inside = true;
        for (const auto& [n, off] : ineq)
            if (vanish::dot(n, x) < off * t) {
                inside = false;
                break;
            }
        if (inside) ++count;
        std::size_t c = 0;
        while (c < d && x[c] == hi[c]) {
            x[c] = lo[c];
            ++c;
        }
        if (c == d) break;
        ++x[c];
    }
    return count;
}

// d! · vol via the d-th finite difference of the Ehrhart polynomial.
inline Int ehrhart_normalized_volume(const std::vector<IntVec>& pts) {
    const std::size_t d = pts.front().size();
    IntMatrix diffs;
    for (const auto& p : pts) diffs.push_back(vanish::sub(p, pts[0]));
    if (vanish::rank(diffs) < d) return 0;
    auto ineq = facet_inequalities(pts);
    Int acc = 0;
    Int binom = 1;
    for (std::size_t t = 0; t <= d; ++t) {
        Int L = lattice_points(ineq, pts, static_cast<long>(t));
        if ((d - t) % 2 == 0) {
            acc += binom * L;
        } else {
            acc -= binom * L;
        }
        binom = binom * (d - t) / (t + 1);
    }
    return acc;
}

inline std::vector<IntVec> random_points(std::mt19937& rng, std::size_t d, std::size_t count, int lo,
                                         int hi) {
    std::uniform_int_distribution<int> coord(lo, hi);
    std::vector<IntVec> pts;
    for (std::size_t i = 0; i < count; ++i) {
        IntVec p;
        for (std::size_t c = 0; c < d; ++c) p.emplace_back(coord(rng));
        pts.push_back(std::move(p));
    }
    return pts;
}

}  // namespace oracle
