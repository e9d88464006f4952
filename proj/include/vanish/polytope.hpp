#pragma once
// Lattice polytopes and polyhedral cones with exact integer arithmetic.
//
// The hull is an incremental beneath-beyond construction run in the affine
// hull of the input (projected onto pivot coordinates), so lower-dimensional
// point sets are handled the same way as full-dimensional ones. Facets are
// kept as triangulated simplices during construction and merged by
// hyperplane at the end; that triangulation also yields the volume.

#include "vanish/exact.hpp"
#include "vanish/linalg.hpp"

#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace vanish {

struct Facet {
    IntVec normal;  // primitive inner conormal
    Int offset;     // min of <normal, .> over the polytope
    std::vector<std::size_t> vertex_ids;
};

class LatticePolytope;
LatticePolytope hull(std::vector<IntVec> points);

class LatticePolytope {
public:
    LatticePolytope() = default;

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] const std::vector<IntVec>& points() const { return points_; }
    [[nodiscard]] const std::vector<IntVec>& vertices() const { return vertices_; }
    [[nodiscard]] const std::vector<Facet>& facets() const { return facets_; }
    /// Integer basis of the covectors that are constant on the polytope.
    [[nodiscard]] const IntMatrix& lineality() const { return lineality_; }
    [[nodiscard]] bool full_dimensional() const {
        return dim_ == static_cast<int>(ambient_dim_);
    }
    /// n! times the Euclidean volume; zero unless full-dimensional.
    [[nodiscard]] const Int& normalized_volume() const { return volume_; }

    [[nodiscard]] Int min_pairing(const IntVec& u) const {
        Int best = dot(u, vertices_.front());
        for (const auto& v : vertices_) best = std::min(best, dot(u, v));
        return best;
    }

    /// Same vertex set.
    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
    }

    [[nodiscard]] LatticePolytope translated(const IntVec& t) const {
        std::vector<IntVec> pts;
        for (const auto& v : vertices_) pts.push_back(add(v, t));
        return hull(std::move(pts));
    }
    [[nodiscard]] LatticePolytope dilated(const Int& lambda) const {
        std::vector<IntVec> pts;
        if (lambda == 0) {
            pts.push_back(zero_vec(ambient_dim_));
        } else {
            for (const auto& v : vertices_) pts.push_back(scale(v, lambda));
        }
        return hull(std::move(pts));
    }

private:
    friend LatticePolytope hull(std::vector<IntVec> points);

    std::size_t ambient_dim_ = 0;
    int dim_ = -1;
    std::vector<IntVec> points_;
    std::vector<IntVec> vertices_;
    std::vector<Facet> facets_;
    IntMatrix lineality_;
    Int volume_ = 0;
};

namespace detail {

struct Simplex {
    std::vector<std::size_t> ids;  // sorted
    IntVec normal;
    Int offset;
};

inline Simplex make_simplex(std::vector<std::size_t> ids, const std::vector<IntVec>& pts,
                            const IntVec& interior, const Int& interior_weight, std::size_t r) {
    std::sort(ids.begin(), ids.end());
    IntMatrix dirs;
    for (std::size_t i = 1; i < ids.size(); ++i) dirs.push_back(sub(pts[ids[i]], pts[ids[0]]));
    IntVec n = cross_normal(dirs, r);
    n = primitive_vector(n);
    Int off = dot(n, pts[ids[0]]);
    if (dot(n, interior) < interior_weight * off) {
        n = negate(n);
        off = -off;
    }
    return {std::move(ids), std::move(n), std::move(off)};
}

// Boundary triangulation of conv(pts) for full-dimensional pts in R^r, r >= 1.
inline std::vector<Simplex> beneath_beyond(const std::vector<IntVec>& pts, std::size_t r) {
    // initial simplex
    std::vector<std::size_t> base{0};
    IntMatrix dirs;
    for (std::size_t i = 1; i < pts.size() && base.size() < r + 1; ++i) {
        dirs.push_back(sub(pts[i], pts[0]));
        if (rank(dirs) == dirs.size()) {
            base.push_back(i);
        } else {
            dirs.pop_back();
        }
    }
    if (base.size() != r + 1) throw std::logic_error("beneath_beyond: input not full-dimensional");
    IntVec interior = zero_vec(r);
    for (auto i : base) interior = add(interior, pts[i]);
    const Int weight = static_cast<long>(r + 1);

    std::vector<Simplex> facets;
    for (std::size_t skip = 0; skip <= r; ++skip) {
        std::vector<std::size_t> ids;
        for (std::size_t j = 0; j <= r; ++j)
            if (j != skip) ids.push_back(base[j]);
        facets.push_back(make_simplex(std::move(ids), pts, interior, weight, r));
    }
    std::vector<bool> in_base(pts.size(), false);
    for (auto i : base) in_base[i] = true;

    for (std::size_t p = 0; p < pts.size(); ++p) {
        if (in_base[p]) continue;
        std::vector<std::size_t> visible;
        for (std::size_t f = 0; f < facets.size(); ++f)
            if (dot(facets[f].normal, pts[p]) < facets[f].offset) visible.push_back(f);
        if (visible.empty()) continue;
        std::map<std::vector<std::size_t>, int> ridge_count;
        for (auto f : visible) {
            const auto& ids = facets[f].ids;
            for (std::size_t drop = 0; drop < ids.size(); ++drop) {
                std::vector<std::size_t> ridge;
                for (std::size_t j = 0; j < ids.size(); ++j)
                    if (j != drop) ridge.push_back(ids[j]);
                ++ridge_count[ridge];
            }
        }
        std::vector<bool> dead(facets.size(), false);
        for (auto f : visible) dead[f] = true;
        std::vector<Simplex> next;
        next.reserve(facets.size() + ridge_count.size());
        for (std::size_t f = 0; f < facets.size(); ++f)
            if (!dead[f]) next.push_back(std::move(facets[f]));
        for (auto& [ridge, count] : ridge_count) {
            if (count != 1) continue;
            auto ids = ridge;
            ids.push_back(p);
            next.push_back(make_simplex(std::move(ids), pts, interior, weight, r));
        }
        facets = std::move(next);
    }
    return facets;
}

}  // namespace detail

/// Convex hull of a non-empty finite point set.
inline LatticePolytope hull(std::vector<IntVec> points) {
    if (points.empty()) throw InputError("hull of an empty point set");
    const std::size_t d = points.front().size();
    for (const auto& p : points)
        if (p.size() != d) throw InputError("hull: points of different dimensions");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    LatticePolytope P;
    P.ambient_dim_ = d;
    P.points_ = points;

    IntMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
    const std::size_t r = rank(diffs);
    P.dim_ = static_cast<int>(r);
    P.lineality_ = integer_kernel(diffs, d);

    if (r == 0) {
        P.vertices_ = {points.front()};
        if (d == 0) P.volume_ = 1;
        return P;
    }

    auto piv = pivot_columns(diffs);
    std::vector<IntVec> proj;
    proj.reserve(points.size());
    for (const auto& p : points) {
        IntVec q;
        for (auto c : piv) q.push_back(p[c]);
        proj.push_back(std::move(q));
    }
    auto simplices = detail::beneath_beyond(proj, r);

    // Merge simplices lying on a common hyperplane.
    std::map<IntVec, Int> planes;
    for (const auto& s : simplices) planes.emplace(s.normal, s.offset);

    std::vector<std::pair<IntVec, Int>> plane_list(planes.begin(), planes.end());
    std::vector<bool> is_vertex(points.size(), false);
    for (std::size_t i = 0; i < proj.size(); ++i) {
        IntMatrix tight;
        for (const auto& [n, off] : plane_list)
            if (dot(n, proj[i]) == off) tight.push_back(n);
        if (tight.size() >= r && rank(tight) == r) is_vertex[i] = true;
    }
    std::vector<std::size_t> vertex_index(points.size(), SIZE_MAX);
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (is_vertex[i]) {
            vertex_index[i] = P.vertices_.size();
            P.vertices_.push_back(points[i]);
        }
    }
    for (const auto& [n, off] : plane_list) {
        Facet f;
        f.normal = zero_vec(d);
        for (std::size_t j = 0; j < piv.size(); ++j) f.normal[piv[j]] = n[j];
        f.offset = off;
        for (std::size_t i = 0; i < proj.size(); ++i)
            if (is_vertex[i] && dot(n, proj[i]) == off) f.vertex_ids.push_back(vertex_index[i]);
        P.facets_.push_back(std::move(f));
    }
    std::sort(P.facets_.begin(), P.facets_.end(),
              [](const Facet& a, const Facet& b) { return a.vertex_ids < b.vertex_ids; });

    if (r == d) {
        // Cone the boundary triangulation from one point.
        const std::size_t apex = simplices.front().ids.front();
        Int vol = 0;
        for (const auto& s : simplices) {
            if (std::binary_search(s.ids.begin(), s.ids.end(), apex)) continue;
            IntMatrix m;
            for (auto id : s.ids) m.push_back(sub(proj[id], proj[apex]));
            vol += abs(determinant(std::move(m)));
        }
        P.volume_ = vol;
    }
    return P;
}

// ---------------------------------------------------------------------------
// Faces

struct Face {
    std::vector<IntVec> vertices;  // sorted
    int dim = 0;
    IntVec witness;  // some u with supporting_face(P, u) == this face

    friend bool operator==(const Face& a, const Face& b) { return a.vertices == b.vertices; }
    friend bool operator<(const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
    }
};

inline int affine_dim(const std::vector<IntVec>& pts) {
    if (pts.empty()) return -1;
    IntMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(sub(pts[i], pts[0]));
    return static_cast<int>(rank(diffs));
}

/// The face of minimisers of <u, .> over P.
inline Face supporting_face(const LatticePolytope& P, const IntVec& u) {
    if (u.size() != P.ambient_dim()) throw InputError("supporting_face: covector dimension mismatch");
    Int best = P.min_pairing(u);
    Face f;
    for (const auto& v : P.vertices())
        if (dot(u, v) == best) f.vertices.push_back(v);
    f.dim = affine_dim(f.vertices);
    f.witness = u;
    return f;
}

inline Face whole_face(const LatticePolytope& P) {
    return {P.vertices(), P.dim(), zero_vec(P.ambient_dim())};
}

/// Indices of the facets of P containing every vertex of the face.
inline std::vector<std::size_t> facets_containing(const LatticePolytope& P, const Face& F) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < P.facets().size(); ++i) {
        const auto& fac = P.facets()[i];
        bool all = std::all_of(F.vertices.begin(), F.vertices.end(),
                               [&](const IntVec& v) { return dot(fac.normal, v) == fac.offset; });
        if (all) out.push_back(i);
    }
    return out;
}

/// Complete face lattice (without the empty face), sorted by dimension.
inline std::vector<Face> faces(const LatticePolytope& P) {
    const auto& V = P.vertices();
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> queue;
    std::vector<std::size_t> all(V.size());
    for (std::size_t i = 0; i < V.size(); ++i) all[i] = i;
    seen.insert(all);
    queue.push_back(all);
    for (const auto& f : P.facets()) {
        if (seen.insert(f.vertex_ids).second) queue.push_back(f.vertex_ids);
    }
    for (std::size_t q = 1; q < queue.size(); ++q) {
        for (const auto& f : P.facets()) {
            std::vector<std::size_t> meet;
            std::set_intersection(queue[q].begin(), queue[q].end(), f.vertex_ids.begin(),
                                  f.vertex_ids.end(), std::back_inserter(meet));
            if (meet.empty()) continue;
            if (seen.insert(meet).second) queue.push_back(std::move(meet));
        }
    }
    std::vector<Face> out;
    out.reserve(queue.size());
    for (const auto& ids : queue) {
        Face F;
        for (auto i : ids) F.vertices.push_back(V[i]);
        F.dim = affine_dim(F.vertices);
        F.witness = zero_vec(P.ambient_dim());
        if (ids.size() != V.size()) {
            for (auto fi : facets_containing(P, F)) F.witness = add(F.witness, P.facets()[fi].normal);
        }
        out.push_back(std::move(F));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// A covector whose supporting face is F, or nullopt when F (given by its
/// vertices) is not a face of P. Uses the stored witness when it is valid,
/// otherwise the sum of the conormals of the facets containing F.
inline std::optional<IntVec> face_witness(const LatticePolytope& P, const Face& F) {
    if (F.vertices.empty()) return std::nullopt;
    if (F.witness.size() == P.ambient_dim() && supporting_face(P, F.witness) == F) return F.witness;
    IntVec u = zero_vec(P.ambient_dim());
    if (F.vertices != P.vertices())
        for (auto i : facets_containing(P, F)) u = add(u, P.facets()[i].normal);
    if (supporting_face(P, u) == F) return u;
    return std::nullopt;
}

inline bool is_face_of(const LatticePolytope& P, const Face& F) { return face_witness(P, F).has_value(); }

/// Compact faces of conv(S) + R_{>=0}^d for S in the nonnegative orthant:
/// the faces of conv(S ∪ (S + e_j)) whose vertices all lie in S.
inline std::vector<Face> compact_faces(const std::vector<IntVec>& S) {
    if (S.empty()) return {};
    const std::size_t d = S.front().size();
    std::vector<IntVec> pts = S;
    for (const auto& s : S)
        for (std::size_t j = 0; j < d; ++j) pts.push_back(add(s, unit_vec(d, j)));
    auto Q = hull(pts);
    std::set<IntVec> in_s(S.begin(), S.end());
    std::vector<Face> out;
    for (auto& F : faces(Q)) {
        bool compact = std::all_of(F.vertices.begin(), F.vertices.end(),
                                   [&](const IntVec& v) { return in_s.count(v) > 0; });
        if (compact) out.push_back(std::move(F));
    }
    return out;
}

struct CompactFacet {
    IntVec normal;  // primitive, strictly positive
    Int offset;     // lattice distance from the origin
    std::vector<IntVec> vertices;
};

/// The compact facets of conv(S) + R_{>=0}^d.
inline std::vector<CompactFacet> compact_facets(const std::vector<IntVec>& S) {
    if (S.empty()) return {};
    const std::size_t d = S.front().size();
    std::vector<IntVec> pts = S;
    for (const auto& s : S)
        for (std::size_t j = 0; j < d; ++j) pts.push_back(add(s, unit_vec(d, j)));
    auto Q = hull(pts);
    std::set<IntVec> in_s(S.begin(), S.end());
    std::vector<CompactFacet> out;
    for (const auto& f : Q.facets()) {
        bool compact = std::all_of(f.vertex_ids.begin(), f.vertex_ids.end(),
                                   [&](std::size_t i) { return in_s.count(Q.vertices()[i]) > 0; });
        if (!compact) continue;
        CompactFacet g{f.normal, f.offset, {}};
        for (auto i : f.vertex_ids) g.vertices.push_back(Q.vertices()[i]);
        out.push_back(std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dual cones and fans

struct DualCone {
    Face face;
    IntMatrix generators;  // primitive extreme rays (facet conormals)
    IntMatrix lineality;   // basis of the lineality space (empty if P is full-dimensional)
    int dim = 0;
};

struct Fan {
    std::vector<DualCone> cones;
    std::size_t ambient_dim = 0;
};

/// Whether u lies in the closed dual cone σ(F) of a face F of P.
inline bool in_dual_cone(const LatticePolytope& P, const Face& F, const IntVec& u) {
    Int best = P.min_pairing(u);
    return std::all_of(F.vertices.begin(), F.vertices.end(),
                       [&](const IntVec& v) { return dot(u, v) == best; });
}

inline DualCone dual_cone(const LatticePolytope& P, const Face& F) {
    DualCone c;
    c.face = F;
    for (auto i : facets_containing(P, F)) c.generators.push_back(P.facets()[i].normal);
    std::sort(c.generators.begin(), c.generators.end());
    if (!P.full_dimensional()) c.lineality = P.lineality();
    IntMatrix span = c.generators;
    span.insert(span.end(), c.lineality.begin(), c.lineality.end());
    c.dim = static_cast<int>(rank(span));
    return c;
}

/// The dual subdivision: one cone per face. A fan when P is full-dimensional.
inline Fan dual_fan(const LatticePolytope& P) {
    Fan fan;
    fan.ambient_dim = P.ambient_dim();
    for (const auto& F : faces(P)) fan.cones.push_back(dual_cone(P, F));
    return fan;
}

// ---------------------------------------------------------------------------
// Minkowski sums, joins

inline LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& Ps) {
    if (Ps.empty()) throw InputError("minkowski_sum of an empty list");
    const std::size_t d = Ps.front().ambient_dim();
    for (const auto& P : Ps)
        if (P.ambient_dim() != d) throw InputError("minkowski_sum: ambient dimension mismatch");
    LatticePolytope acc = Ps.front();
    for (std::size_t i = 1; i < Ps.size(); ++i) {
        std::vector<IntVec> pts;
        pts.reserve(acc.vertices().size() * Ps[i].vertices().size());
        for (const auto& a : acc.vertices())
            for (const auto& b : Ps[i].vertices()) pts.push_back(add(a, b));
        acc = hull(std::move(pts));
    }
    return acc;
}

/// (γ_1, ..., γ_p) with γ = γ_1 + ... + γ_p for a face γ of the sum.
inline std::vector<Face> face_decompose(const std::vector<LatticePolytope>& Ps, const Face& gamma) {
    LatticePolytope S = minkowski_sum(Ps);
    auto w = face_witness(S, gamma);
    if (!w) throw InputError("face_decompose: not a face of the Minkowski sum");
    const IntVec& u = *w;
    std::vector<Face> parts;
    parts.reserve(Ps.size());
    for (const auto& P : Ps) parts.push_back(supporting_face(P, u));
    return parts;
}

/// Primitive inner conormal ν of a facet of a full-dimensional polytope and
/// m = min_P <ν, .>.
inline std::pair<IntVec, Int> facet_conormal(const LatticePolytope& P, const Face& gamma) {
    if (!P.full_dimensional()) throw InputError("facet_conormal: polytope is not full-dimensional");
    if (gamma.dim != P.dim() - 1) throw InputError("facet_conormal: face is not a facet");
    for (const auto& f : P.facets()) {
        std::vector<IntVec> vs;
        for (auto i : f.vertex_ids) vs.push_back(P.vertices()[i]);
        if (vs == gamma.vertices) return {f.normal, f.offset};
    }
    throw InputError("facet_conormal: face is not a facet of the polytope");
}

/// conv(∪ Δ_i × {e_i}) in R^{d+k}.
inline LatticePolytope join_polytope(const std::vector<LatticePolytope>& Ps) {
    if (Ps.empty()) throw InputError("join_polytope of an empty list");
    const std::size_t d = Ps.front().ambient_dim();
    const std::size_t k = Ps.size();
    std::vector<IntVec> pts;
    for (std::size_t i = 0; i < k; ++i) {
        if (Ps[i].ambient_dim() != d) throw InputError("join_polytope: ambient dimension mismatch");
        for (const auto& v : Ps[i].vertices()) {
            IntVec w = v;
            for (std::size_t j = 0; j < k; ++j) w.emplace_back(j == i ? 1 : 0);
            pts.push_back(std::move(w));
        }
    }
    return hull(std::move(pts));
}

// ---------------------------------------------------------------------------
// Cones

struct ConeFacet {
    IntVec conormal;                         // primitive, inner
    std::vector<std::size_t> generator_ids;  // generators on the facet
};

struct PolyCone {
    std::size_t ambient_dim = 0;
    IntMatrix generators;
    std::vector<ConeFacet> facets;
};

/// Full-dimensional pointed cone generated by `gens`.
inline PolyCone cone_over(const IntMatrix& gens) {
    if (gens.empty()) throw InputError("cone over an empty generator set");
    const std::size_t n = gens.front().size();
    if (rank(gens) != n) throw InputError("cone is not full-dimensional");
    std::vector<IntVec> pts = gens;
    pts.push_back(zero_vec(n));
    auto Q = hull(pts);
    const IntVec origin = zero_vec(n);
    if (std::find(Q.vertices().begin(), Q.vertices().end(), origin) == Q.vertices().end())
        throw InputError("cone is not pointed");
    PolyCone K;
    K.ambient_dim = n;
    K.generators = gens;
    for (const auto& f : Q.facets()) {
        if (f.offset != 0) continue;
        ConeFacet cf;
        cf.conormal = f.normal;
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (dot(f.normal, gens[g]) == 0) cf.generator_ids.push_back(g);
        K.facets.push_back(std::move(cf));
    }
    std::sort(K.facets.begin(), K.facets.end(),
              [](const ConeFacet& a, const ConeFacet& b) { return a.conormal < b.conormal; });
    return K;
}

/// Generators a_i(j) = (b_i(j), e_i) of the Cayley cone.
inline IntMatrix cayley_generators(const std::vector<std::vector<IntVec>>& Bs) {
    if (Bs.empty()) throw InputError("cayley_cone: no supports");
    const std::size_t k = Bs.size();
    std::size_t d = SIZE_MAX;
    IntMatrix gens;
    for (std::size_t i = 0; i < k; ++i) {
        if (Bs[i].empty()) throw InputError("cayley_cone: empty support");
        for (const auto& b : Bs[i]) {
            if (d == SIZE_MAX) d = b.size();
            if (b.size() != d) throw InputError("cayley_cone: support dimension mismatch");
            IntVec a = b;
            for (std::size_t j = 0; j < k; ++j) a.emplace_back(j == i ? 1 : 0);
            gens.push_back(std::move(a));
        }
    }
    return gens;
}

inline PolyCone cayley_cone(const std::vector<std::vector<IntVec>>& Bs) {
    return cone_over(cayley_generators(Bs));
}

// ---------------------------------------------------------------------------
// Similarity: Q = λ P + t for a positive rational λ and rational t.

inline bool similar(const LatticePolytope& P, const LatticePolytope& Q) {
    if (P.ambient_dim() != Q.ambient_dim()) return false;
    const auto& V = P.vertices();
    const auto& W = Q.vertices();
    if (V.size() != W.size()) return false;
    if (V.size() == 1) return true;
    // Positive dilation plus translation preserves lexicographic order.
    std::size_t j = 0;
    while (j < V[1].size() && V[1][j] == V[0][j]) ++j;
    Rat lambda(W[1][j] - W[0][j], V[1][j] - V[0][j]);
    if (lambda <= 0) return false;
    for (std::size_t i = 0; i < V.size(); ++i)
        for (std::size_t c = 0; c < V[i].size(); ++c)
            if (Rat(W[i][c] - W[0][c]) != lambda * Rat(V[i][c] - V[0][c])) return false;
    return true;
}

}  // namespace vanish
