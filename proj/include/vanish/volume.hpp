#pragma once
// Normalized lattice volumes and mixed volumes.
//
// mixed_volume evaluates the inclusion-exclusion formula over sub-sums;
// mixed_volume_oracle recovers the same number as a coefficient of the
// volume polynomial λ ↦ Vol_Z(Σ λ_i P_i), found by exact interpolation.

#include "vanish/exact.hpp"
#include "vanish/polytope.hpp"

#include <numeric>
#include <vector>

namespace vanish {

inline Int normalized_volume(const LatticePolytope& P) { return P.normalized_volume(); }

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// n polytopes in R^n in compact form: distinct polytopes with multiplicities.
struct MixedVolumeQuery {
    std::vector<LatticePolytope> polytopes;
    std::vector<unsigned> counts;

    static MixedVolumeQuery compact(const std::vector<LatticePolytope>& Ps,
                                    const std::vector<unsigned>& cs) {
        if (Ps.size() != cs.size()) throw InputError("mixed volume: counts do not match polytopes");
        MixedVolumeQuery q;
        for (std::size_t i = 0; i < Ps.size(); ++i) {
            if (cs[i] == 0) continue;
            auto it = std::find(q.polytopes.begin(), q.polytopes.end(), Ps[i]);
            if (it == q.polytopes.end()) {
                q.polytopes.push_back(Ps[i]);
                q.counts.push_back(cs[i]);
            } else {
                q.counts[static_cast<std::size_t>(it - q.polytopes.begin())] += cs[i];
            }
        }
        q.validate();
        return q;
    }

    static MixedVolumeQuery from_list(const std::vector<LatticePolytope>& Ps) {
        return compact(Ps, std::vector<unsigned>(Ps.size(), 1));
    }

    [[nodiscard]] unsigned total() const { return std::accumulate(counts.begin(), counts.end(), 0U); }

    void validate() const {
        if (polytopes.empty()) throw InputError("mixed volume of an empty list");
        const unsigned n = total();
        for (const auto& P : polytopes)
            if (P.ambient_dim() != n)
                throw InputError("mixed volume needs exactly n polytopes in R^n");
    }
};

/// Hull of Σ w_i P_i for nonnegative integer weights.
inline LatticePolytope weighted_sum(const std::vector<LatticePolytope>& Ps,
                                    const std::vector<unsigned>& w) {
    std::vector<LatticePolytope> parts;
    for (std::size_t i = 0; i < Ps.size(); ++i)
        if (w[i] > 0) parts.push_back(w[i] == 1 ? Ps[i] : Ps[i].dilated(Int(w[i])));
    if (parts.empty()) return hull({zero_vec(Ps.front().ambient_dim())});
    return minkowski_sum(parts);
}

namespace detail {

// Calls f on every vector c with 0 <= c_i <= bound_i.
template <class F>
void for_each_box_point(const std::vector<unsigned>& bound, F&& f) {
    std::vector<unsigned> c(bound.size(), 0);
    while (true) {
        f(c);
        std::size_t i = 0;
        while (i < c.size() && c[i] == bound[i]) c[i++] = 0;
        if (i == c.size()) return;
        ++c[i];
    }
}

// Calls f on every vector of p nonnegative integers summing to n.
template <class F>
void for_each_composition(std::size_t p, unsigned n, F&& f) {
    std::vector<unsigned> a(p, 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == p) {
            a[i] = left;
            f(a);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            a[i] = v;
            self(self, i + 1, left - v);
        }
    };
    if (p > 0) rec(rec, 0, n);
}

}  // namespace detail

/// Inclusion-exclusion over sub-sums, grouped by multiplicity.
inline Int mixed_volume(const MixedVolumeQuery& q) {
    q.validate();
    const unsigned n = q.total();
    Int acc = 0;
    detail::for_each_box_point(q.counts, [&](const std::vector<unsigned>& c) {
        const unsigned s = std::accumulate(c.begin(), c.end(), 0U);
        if (s == 0) return;
        Int weight = 1;
        for (std::size_t i = 0; i < c.size(); ++i) weight *= binomial(q.counts[i], c[i]);
        Int vol = weighted_sum(q.polytopes, c).normalized_volume();
        if ((n - s) % 2 == 0) {
            acc += weight * vol;
        } else {
            acc -= weight * vol;
        }
    });
    Int nf = factorial(n);
    if (acc % nf != 0) throw std::logic_error("mixed_volume: non-integral result");
    return acc / nf;
}

inline Int mixed_volume(const std::vector<LatticePolytope>& Ps) {
    return mixed_volume(MixedVolumeQuery::from_list(Ps));
}

/// Coefficient extraction from the volume polynomial. Vol_Z(Σ λ_i Q_i) is
/// homogeneous of degree n with coefficient (n!/α!)·MV(Q^α) on λ^α; it is
/// sampled on {α : |α| = n}, which determines it uniquely.
inline Int mixed_volume_oracle(const MixedVolumeQuery& q) {
    q.validate();
    const unsigned n = q.total();
    const std::size_t p = q.polytopes.size();
    std::vector<std::vector<unsigned>> monomials;
    detail::for_each_composition(p, n, [&](const std::vector<unsigned>& a) { monomials.push_back(a); });
    const std::size_t N = monomials.size();

    // Row per sample point: [λ^α for each α | Vol_Z]
    std::vector<std::vector<Rat>> m(N, std::vector<Rat>(N + 1));
    for (std::size_t r = 0; r < N; ++r) {
        const auto& lambda = monomials[r];
        for (std::size_t c = 0; c < N; ++c) {
            Int v = 1;
            for (std::size_t i = 0; i < p; ++i) v *= pow(Int(lambda[i]), monomials[c][i]);
            m[r][c] = Rat(v);
        }
        m[r][N] = Rat(weighted_sum(q.polytopes, lambda).normalized_volume());
    }
    auto piv = detail::echelon(m, N + 1);
    if (piv.size() != N || piv.back() != N - 1) throw std::logic_error("mixed_volume_oracle: singular interpolation");
    std::size_t target = 0;
    while (monomials[target] != q.counts) ++target;
    Rat coeff = m[target][N] / m[target][target];
    Rat mv = coeff;
    for (auto c : q.counts) mv *= Rat(factorial(c));
    mv /= Rat(factorial(n));
    if (!is_integer(mv)) throw std::logic_error("mixed_volume_oracle: non-integral result");
    return numer(mv);
}

inline Int mixed_volume_oracle(const std::vector<LatticePolytope>& Ps) {
    return mixed_volume_oracle(MixedVolumeQuery::from_list(Ps));
}

/// Σ over compositions (m_1..m_i) of n with positive parts of
/// MV(Δ_1 × m_1, ..., Δ_i × m_i).
inline Int mixed_volume_sum(const std::vector<LatticePolytope>& Ds, unsigned n) {
    const std::size_t i = Ds.size();
    if (i < 1 || i > n) throw InputError("mixed_volume_sum needs 1 <= i <= n polytopes");
    Int total = 0;
    detail::for_each_composition(i, n - static_cast<unsigned>(i), [&](const std::vector<unsigned>& a) {
        std::vector<unsigned> m(a);
        for (auto& x : m) ++x;
        total += mixed_volume(MixedVolumeQuery::compact(Ds, m));
    });
    return total;
}

}  // namespace vanish
