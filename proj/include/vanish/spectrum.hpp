#pragma once
// Newton polyhedron of a germ at the origin and the finite set E_p of
// candidate monodromy eigenvalues, kept as congruence data.
//
// A pair (d, δ) stands for {λ : λ^d = exp(2πi βδ)}. With λ = exp(2πi q),
// λ lies in that set exactly when q·d - βδ is an integer.

#include "vanish/exact.hpp"
#include "vanish/laurent.hpp"
#include "vanish/nondegeneracy.hpp"
#include "vanish/polytope.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vanish {

struct PolyhedronFacet {
    std::vector<std::size_t> I;  // 0-based coordinates, containing the last one
    IntVec u;                    // primitive, supported on I
    Int d;                       // lattice distance from the origin
    Int delta;                   // last coordinate of u
    std::vector<IntVec> vertices;
};

struct NewtonPolyhedron {
    std::size_t dim = 0;
    std::vector<IntVec> generators;
    std::vector<PolyhedronFacet> facets;
};

inline NewtonPolyhedron newton_polyhedron(const LaurentPoly& f) {
    const std::size_t m = f.ambient_dim();
    if (m == 0) throw InputError("newton_polyhedron needs at least one variable");
    if (f.is_zero()) throw InputError("newton_polyhedron of the zero polynomial");
    NewtonPolyhedron np;
    np.dim = m;
    np.generators = f.support();
    for (const auto& e : np.generators) {
        for (const auto& x : e)
            if (x < 0) throw InputError("support must lie in the nonnegative orthant");
        if (is_zero(e)) throw InputError("f must vanish at the origin");
    }
    const std::size_t last = m - 1;
    for (std::size_t mask = 0; mask < (std::size_t{1} << last); ++mask) {
        std::vector<std::size_t> I;
        for (std::size_t j = 0; j < last; ++j)
            if (mask & (std::size_t{1} << j)) I.push_back(j);
        I.push_back(last);
        std::vector<IntVec> S;
        for (const auto& e : np.generators) {
            bool inside = true;
            for (std::size_t j = 0; j < m; ++j)
                if (e[j] != 0 && std::find(I.begin(), I.end(), j) == I.end()) inside = false;
            if (!inside) continue;
            IntVec p;
            for (auto j : I) p.push_back(e[j]);
            S.push_back(std::move(p));
        }
        if (S.empty()) continue;
        for (const auto& cf : compact_facets(S)) {
            PolyhedronFacet pf;
            pf.I = I;
            pf.u = zero_vec(m);
            for (std::size_t t = 0; t < I.size(); ++t) pf.u[I[t]] = cf.normal[t];
            pf.d = cf.offset;
            pf.delta = pf.u[last];
            for (const auto& v : cf.vertices) {
                IntVec w = zero_vec(m);
                for (std::size_t t = 0; t < I.size(); ++t) w[I[t]] = v[t];
                pf.vertices.push_back(std::move(w));
            }
            np.facets.push_back(std::move(pf));
        }
    }
    return np;
}

struct EigenPair {
    Int d;
    Int delta;
    friend bool operator==(const EigenPair&, const EigenPair&) = default;
};

/// Pairs (d, δ) with the exponent β; β may be left unbound.
struct EigenvalueSet {
    std::vector<EigenPair> pairs;
    std::optional<GaussRat> beta;

    [[nodiscard]] GaussRat phase(const EigenPair& p) const {
        if (!beta) throw InputError("eigenvalue set: β is not bound");
        return GaussRat(Rat(p.delta)) * *beta;
    }
    [[nodiscard]] EigenvalueSet bind(const GaussRat& b) const {
        EigenvalueSet out;
        out.beta = b;
        for (const auto& p : pairs) {
            bool dup = std::any_of(out.pairs.begin(), out.pairs.end(), [&](const EigenPair& q) {
                return q.d == p.d && is_integer(out.phase(q) - out.phase(p));
            });
            if (!dup) out.pairs.push_back(p);
        }
        return out;
    }
};

/// E_p with β left symbolic.
inline EigenvalueSet eigenvalue_set(const NewtonPolyhedron& np) {
    EigenvalueSet es;
    for (const auto& f : np.facets) {
        EigenPair p{f.d, f.delta};
        if (std::find(es.pairs.begin(), es.pairs.end(), p) == es.pairs.end()) es.pairs.push_back(p);
    }
    return es;
}

inline EigenvalueSet eigenvalue_set(const NewtonPolyhedron& np, const GaussRat& beta) {
    return eigenvalue_set(np).bind(beta);
}

/// Pairs of es containing exp(2πi q).
inline std::vector<EigenPair> matching_pairs(const EigenvalueSet& es, const GaussRat& q) {
    std::vector<EigenPair> out;
    for (const auto& p : es.pairs)
        if (is_integer(q * GaussRat(Rat(p.d)) - es.phase(p))) out.push_back(p);
    return out;
}

inline bool contains(const EigenvalueSet& es, const GaussRat& q) { return !matching_pairs(es, q).empty(); }

struct StalkLeg {
    std::string name;
    Status status = Status::Pass;
    std::string reason;
};

struct StalkVanishingVerdict {
    std::vector<StalkLeg> legs;
    [[nodiscard]] Status overall() const {
        Status s = Status::Pass;
        for (const auto& l : legs) s = combine(s, l.status);
        return s;
    }
    [[nodiscard]] bool pass() const {
        auto s = overall();
        return s == Status::Pass || s == Status::AssumedGeneric;
    }
};

/// The three hypotheses for vanishing of the stalk at p: nonresonance of c,
/// Newton non-degeneracy of f, and exp(2πi q) ∉ E_p with q = c_n.
inline StalkVanishingVerdict stalk_vanishing_check(const LaurentPoly& f, bool nonresonant, const GaussRat& q,
                                                   const GaussRat& beta, std::uint64_t seed = 1) {
    StalkVanishingVerdict v;
    v.legs.push_back({"nonresonance", nonresonant ? Status::Pass : Status::Fail,
                      nonresonant ? "" : "c is resonant"});
    auto nd = f.is_generic() ? Status::AssumedGeneric : newton_nondegenerate_at_origin(f, seed);
    v.legs.push_back({"newton-nondegenerate", nd, nd == Status::Fail ? "a compact face part is singular" : ""});
    auto es = eigenvalue_set(newton_polyhedron(f), beta);
    auto hits = matching_pairs(es, q);
    StalkLeg leg{"eigenvalue-excluded", hits.empty() ? Status::Pass : Status::Fail, {}};
    for (const auto& h : hits)
        leg.reason += (leg.reason.empty() ? "" : ", ") + std::string("(d=") + h.d.str() + ", delta=" + h.delta.str() + ")";
    v.legs.push_back(std::move(leg));
    return v;
}

}  // namespace vanish
