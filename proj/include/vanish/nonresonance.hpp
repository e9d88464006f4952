#pragma once
// Nonresonance of a parameter vector with respect to the Cayley cone
// K = R_{>=0}{(b, e_i)} of the supports.
//
// A facet Γ with primitive inner conormal ν̃ is resonant for c exactly when
// <ν̃, c> is an integer. Facets induced by a facet γ of Δ = ΣΔ_i carry the
// order m(γ) as a second, equivalent certificate.

#include "vanish/exact.hpp"
#include "vanish/polytope.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vanish {

enum class Convention { Section3, Section5 };

inline const char* to_string(Convention c) { return c == Convention::Section3 ? "section3" : "section5"; }

inline Convention parse_convention(const std::string& s) {
    if (s == "section3") return Convention::Section3;
    if (s == "section5") return Convention::Section5;
    throw InputError("unknown convention '" + s + "' (expected section3 or section5)");
}

/// c = (c_1, ..., c_{n-k}, c̃_1, ..., c̃_k).
///
/// Section3: the local system P_1^{-c̃_1}⋯P_k^{-c̃_k} x^{c-1}.
/// Section5: the local system P_1^{c̃_1}⋯P_k^{c̃_k} x^{c}.
struct ParameterVector {
    std::vector<GaussRat> c;
    Convention convention = Convention::Section3;
    std::size_t k = 1;

    [[nodiscard]] std::size_t n() const { return c.size(); }
    [[nodiscard]] std::size_t torus_dim() const { return c.size() - k; }

    void validate() const {
        if (k == 0) throw InputError("parameter vector needs k >= 1");
        if (c.size() <= k) throw InputError("parameter vector has length " + std::to_string(c.size()) +
                                            ", needs more than k = " + std::to_string(k));
    }

    /// The vector in the coordinates of the first convention, where the
    /// resonance test is <ν̃, c> ∈ Z.
    [[nodiscard]] std::vector<GaussRat> raw() const {
        validate();
        if (convention == Convention::Section3) return c;
        std::vector<GaussRat> r(c.size());
        const std::size_t d = torus_dim();
        for (std::size_t j = 0; j < d; ++j) r[j] = c[j] + GaussRat(1);
        for (std::size_t i = 0; i < k; ++i) r[d + i] = -c[d + i];
        return r;
    }
};

struct DeltaFacet {
    Face face;             // facet γ of Δ
    IntVec nu;             // primitive inner conormal of γ
    std::vector<Int> m;    // m_i = min_{Δ_i} <ν, .>
    GaussRat m_gamma;
};

struct FacetCertificate {
    std::vector<std::size_t> generator_ids;
    IntVec conormal;
    GaussRat pairing;
    bool resonant = false;
    std::optional<DeltaFacet> delta_facet;
};

struct NonresonanceVerdict {
    bool nonresonant = true;
    std::vector<FacetCertificate> certificates;
    std::vector<std::size_t> failing_facets;  // indices into certificates
};

namespace detail {

inline std::vector<LatticePolytope> support_polytopes(const std::vector<std::vector<IntVec>>& Bs) {
    std::vector<LatticePolytope> Ds;
    for (const auto& B : Bs) {
        if (B.empty()) throw InputError("empty support");
        Ds.push_back(hull(B));
    }
    return Ds;
}

inline GaussRat m_gamma_raw(const IntVec& nu, const std::vector<Int>& m, const std::vector<GaussRat>& raw) {
    const std::size_t d = nu.size();
    GaussRat acc;
    for (std::size_t j = 0; j < d; ++j) acc += GaussRat(Rat(nu[j])) * (raw[j] - GaussRat(1));
    for (std::size_t i = 0; i < m.size(); ++i) acc -= GaussRat(Rat(m[i])) * raw[d + i];
    return acc;
}

}  // namespace detail

/// m(γ) = <ν, (c_1 - 1, ..., c_{n-k} - 1)> - Σ m_i c̃_i, evaluated on the
/// first-convention coordinates of c.
inline GaussRat m_gamma(const std::vector<std::vector<IntVec>>& Bs, const Face& gamma, const ParameterVector& c) {
    c.validate();
    if (Bs.size() != c.k) throw InputError("m_gamma: number of supports differs from k");
    auto Ds = detail::support_polytopes(Bs);
    auto Delta = minkowski_sum(Ds);
    if (Delta.ambient_dim() != c.torus_dim()) throw InputError("m_gamma: parameter length does not match supports");
    auto [nu, offset] = facet_conormal(Delta, gamma);
    std::vector<Int> m;
    for (const auto& D : Ds) m.push_back(D.min_pairing(nu));
    return detail::m_gamma_raw(nu, m, c.raw());
}

/// True when some entry of c is not an integer.
inline bool check_c_not_integer(const ParameterVector& c) {
    return std::any_of(c.c.begin(), c.c.end(), [](const GaussRat& x) { return !is_integer(x); });
}

inline NonresonanceVerdict check_nonresonance(const std::vector<std::vector<IntVec>>& Bs, const ParameterVector& c) {
    c.validate();
    if (Bs.size() != c.k) throw InputError("nonresonance: number of supports differs from k");
    const auto raw = c.raw();
    auto K = cayley_cone(Bs);
    if (K.ambient_dim != c.n()) throw InputError("nonresonance: parameter length does not match supports");
    auto Ds = detail::support_polytopes(Bs);
    auto Delta = minkowski_sum(Ds);

    // facets of Δ keyed by the conormal (ν, -m_1, ..., -m_k) they induce
    std::map<IntVec, DeltaFacet> induced;
    if (Delta.full_dimensional()) {
        for (const auto& f : Delta.facets()) {
            DeltaFacet df;
            for (auto i : f.vertex_ids) df.face.vertices.push_back(Delta.vertices()[i]);
            df.face.dim = Delta.dim() - 1;
            df.face.witness = f.normal;
            df.nu = f.normal;
            IntVec key = f.normal;
            for (const auto& D : Ds) {
                df.m.push_back(D.min_pairing(f.normal));
                key.push_back(-df.m.back());
            }
            df.m_gamma = detail::m_gamma_raw(df.nu, df.m, raw);
            induced.emplace(std::move(key), std::move(df));
        }
    }

    NonresonanceVerdict v;
    for (const auto& f : K.facets) {
        FacetCertificate cert;
        cert.generator_ids = f.generator_ids;
        cert.conormal = f.conormal;
        for (std::size_t j = 0; j < raw.size(); ++j) cert.pairing += GaussRat(Rat(f.conormal[j])) * raw[j];
        cert.resonant = is_integer(cert.pairing);
        if (auto it = induced.find(f.conormal); it != induced.end()) cert.delta_facet = it->second;
        if (cert.resonant) v.failing_facets.push_back(v.certificates.size());
        v.certificates.push_back(std::move(cert));
    }
    v.nonresonant = v.failing_facets.empty();
    return v;
}

}  // namespace vanish
