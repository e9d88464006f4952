#pragma once
// Weak and strong non-degeneracy, singular loci of hypersurfaces and Milnor
// numbers.
//
// Every face system is first rewritten in coordinates of the lattice spanned
// by the face, so it lives on a torus of dimension dim γ. Systems on tori of
// dimension at most two are decided exactly by elimination; larger ones are
// reported as undecided, or assumed when the coefficients are generic.

#include "vanish/elimination.hpp"
#include "vanish/laurent.hpp"
#include "vanish/linalg.hpp"
#include "vanish/polytope.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace vanish {

enum class Status { Pass, Fail, AssumedGeneric, Undecided };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::AssumedGeneric: return "ASSUMED_GENERIC";
        case Status::Undecided: return "UNDECIDED";
    }
    return "?";
}

/// Fail beats Undecided beats AssumedGeneric beats Pass.
inline Status combine(Status a, Status b) {
    auto rank = [](Status s) {
        switch (s) {
            case Status::Pass: return 0;
            case Status::AssumedGeneric: return 1;
            case Status::Undecided: return 2;
            case Status::Fail: return 3;
        }
        return 3;
    };
    return rank(a) >= rank(b) ? a : b;
}

enum class Level { Weak, Strong };

struct CIResult {
    Status status = Status::Pass;
    std::string witness;  // failing point(s) or gcd, empty on PASS
};

struct FaceCheck {
    Face face;                   // face of Δ = Σ NP(P_i)
    std::vector<std::size_t> J;  // 0-based indices
    Status status = Status::Pass;
    std::string witness;
};

struct NondegeneracyReport {
    Level level = Level::Weak;
    std::vector<FaceCheck> per_face;

    [[nodiscard]] Status overall() const {
        Status s = Status::Pass;
        for (const auto& f : per_face) s = combine(s, f.status);
        return s;
    }
    /// Passed, possibly only by assumption.
    [[nodiscard]] bool pass() const {
        auto s = overall();
        return s == Status::Pass || s == Status::AssumedGeneric;
    }
    [[nodiscard]] bool conditional() const { return overall() == Status::AssumedGeneric; }
};

namespace detail {

inline std::string format_rat_point(const std::vector<Rat>& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + to_string(p[i]);
    return s + ")";
}

template <class K>
std::string format_upoly(const UPoly<K>& p, const char* var = "z") {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.c.size(); i-- > 0;) {
        if (is_zero_k(p.c[i])) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << p.c[i] << ")";
        if (i > 0) os << "*" << var << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

struct LatticeReduction {
    IntMatrix basis;  // rows: saturated basis of the direction lattice
    std::vector<LaurentPoly> polys;
};

/// Rewrites each polynomial (times a monomial) in coordinates of the lattice
/// spanned by the differences of its exponents.
inline LatticeReduction reduce_to_lattice(const std::vector<LaurentPoly>& polys, std::size_t d) {
    IntMatrix dirs;
    for (const auto& p : polys) {
        const auto& e0 = p.terms().begin()->first;
        for (const auto& [e, c] : p.terms())
            if (e != e0) dirs.push_back(sub(e, e0));
    }
    LatticeReduction out;
    out.basis = saturated_basis(dirs, d);
    const std::size_t r = out.basis.size();
    for (const auto& p : polys) {
        const auto& e0 = p.terms().begin()->first;
        LaurentPoly q(r);
        for (const auto& [e, c] : p.terms()) {
            IntVec t(r);
            if (r > 0) {
                auto x = coordinates(out.basis, sub(e, e0));
                if (!x) throw std::logic_error("reduce_to_lattice: exponent outside the span");
                for (std::size_t k = 0; k < r; ++k) {
                    if (!is_integer((*x)[k])) throw std::logic_error("reduce_to_lattice: basis not saturated");
                    t[k] = numer((*x)[k]);
                }
            }
            q.add_term(t, c);
        }
        out.polys.push_back(std::move(q));
    }
    return out;
}

inline bool all_real(const std::vector<LaurentPoly>& ps) {
    return std::all_of(ps.begin(), ps.end(), [](const LaurentPoly& p) { return p.is_real(); });
}

template <class K>
K coeff_as(const Coeff& c) {
    if constexpr (std::is_same_v<K, Rat>) {
        return c.value.re;
    } else {
        return c.value;
    }
}

template <class K>
UPoly<K> to_upoly(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    Int lo = p.terms().begin()->first[0];
    for (const auto& [e, c] : p.terms()) lo = std::min(lo, e[0]);
    std::vector<K> v;
    for (const auto& [e, c] : p.terms()) {
        auto i = static_cast<std::size_t>(Int(e[0] - lo));
        if (v.size() <= i) v.resize(i + 1);
        v[i] += coeff_as<K>(c);
    }
    return UPoly<K>(std::move(v));
}

template <class K>
BPoly<K> to_bpoly(const LaurentPoly& p) {
    BPoly<K> b;
    if (p.is_zero()) return b;
    Int lo0 = p.terms().begin()->first[0], lo1 = p.terms().begin()->first[1];
    for (const auto& [e, c] : p.terms()) {
        lo0 = std::min(lo0, e[0]);
        lo1 = std::min(lo1, e[1]);
    }
    for (const auto& [e, c] : p.terms())
        b.add_term(static_cast<std::size_t>(Int(e[0] - lo0)), static_cast<std::size_t>(Int(e[1] - lo1)), coeff_as<K>(c));
    b.trim();
    return b;
}

struct CommonZeros {
    ZeroCount zeros;
    std::vector<std::vector<Rat>> rational_points;  // when recoverable
    std::string description;
};

template <class K>
CommonZeros common_zeros_as(const std::vector<LaurentPoly>& ps, std::size_t r, std::mt19937_64& rng) {
    CommonZeros out;
    if (r == 1) {
        std::vector<UPoly<K>> us;
        UPoly<K> g;
        for (const auto& p : ps) {
            us.push_back(to_upoly<K>(p));
            if (!us.back().is_zero()) g = gcd(g, cleared(us.back()));
        }
        out.zeros = torus_zeros(us);
        if (out.zeros.finite && out.zeros.count > 0) {
            out.description = "common factor " + format_upoly(g);
            if constexpr (std::is_same_v<K, Rat>) {
                if (auto roots = rational_roots(g))
                    for (const auto& z : *roots)
                        if (z != 0) out.rational_points.push_back({z});
            }
        }
        return out;
    }
    std::vector<BPoly<K>> bs;
    for (const auto& p : ps) bs.push_back(to_bpoly<K>(p));
    if constexpr (std::is_same_v<K, Rat>) {
        auto tp = torus_points(bs, rng);
        out.zeros = tp.total;
        for (const auto& [x, y] : tp.rational) out.rational_points.push_back({x, y});
    } else {
        out.zeros = torus_zeros(bs, rng);
    }
    return out;
}

/// Common zeros on the r-torus (r <= 2) of exact Laurent polynomials.
inline CommonZeros common_zeros(const std::vector<LaurentPoly>& ps, std::size_t r, std::mt19937_64& rng) {
    if (r == 0) {
        // the 0-torus is a point; only constants remain
        bool all_zero = std::all_of(ps.begin(), ps.end(), [](const LaurentPoly& p) { return p.is_zero(); });
        CommonZeros out;
        out.zeros = {true, all_zero ? 1U : 0U};
        return out;
    }
    if (r > 2) throw std::logic_error("common_zeros: more than two variables");
    return all_real(ps) ? common_zeros_as<Rat>(ps, r, rng) : common_zeros_as<GaussRat>(ps, r, rng);
}

inline std::string describe(const CommonZeros& z) {
    if (!z.zeros.finite) return "positive-dimensional common zero set";
    std::string s = std::to_string(z.zeros.count) + " torus point(s)";
    if (!z.rational_points.empty()) {
        s += ":";
        for (const auto& p : z.rational_points) s += " " + format_rat_point(p);
    }
    if (!z.description.empty()) s += "; " + z.description;
    return s;
}

// Face parts with the Jacobian minors that must not vanish on their zeros.
inline std::vector<LaurentPoly> degeneracy_system(const std::vector<LaurentPoly>& Q, std::size_t r) {
    std::vector<LaurentPoly> sys = Q;
    const std::size_t p = Q.size();
    if (p > r) return sys;
    if (p == 1) {
        for (std::size_t k = 0; k < r; ++k) sys.push_back(Q[0].theta(k));
    } else if (p == 2 && r == 2) {
        sys.push_back(Q[0].theta(0) * Q[1].theta(1) - Q[0].theta(1) * Q[1].theta(0));
    } else {
        throw std::logic_error("degeneracy_system: unsupported shape");
    }
    return sys;
}

}  // namespace detail

/// Non-degenerate complete intersection test for the face system
/// {P_i^{γ_i} = 0, i ∈ J}, γ a face of Σ_{i∈J} NP(P_i).
inline CIResult check_nondegenerate_ci(const LaurentSystem& sys, const Face& gamma, const std::vector<std::size_t>& J,
                                       std::uint64_t seed = 1) {
    sys.validate();
    if (J.empty()) throw InputError("check_nondegenerate_ci: empty subset");
    std::vector<LatticePolytope> Ps;
    for (auto i : J) {
        if (i >= sys.size()) throw InputError("check_nondegenerate_ci: index out of range");
        Ps.push_back(newton_polytope(sys.polys[i]));
    }
    if (!gamma.vertices.empty() && gamma.vertices.front().size() != sys.torus_dim())
        throw InputError("check_nondegenerate_ci: face has the wrong dimension");
    auto parts = face_decompose(Ps, gamma);
    if (sys.mode() == CoefficientMode::Generic) return {Status::AssumedGeneric, {}};
    if (gamma.dim == 0) return {Status::Pass, {}};

    std::vector<LaurentPoly> Q;
    for (std::size_t t = 0; t < J.size(); ++t) Q.push_back(face_part(sys.polys[J[t]], parts[t]));
    auto red = detail::reduce_to_lattice(Q, sys.torus_dim());
    const std::size_t r = red.basis.size();
    if (r > 2) return {Status::Undecided, "face system has " + std::to_string(r) + " essential variables"};
    std::mt19937_64 rng(seed);
    auto z = detail::common_zeros(detail::degeneracy_system(red.polys, r), r, rng);
    if (z.zeros.finite && z.zeros.count == 0) return {Status::Pass, {}};
    return {Status::Fail, detail::describe(z)};
}

inline std::vector<std::vector<std::size_t>> nonempty_subsets(std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        std::vector<std::size_t> J;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) J.push_back(i);
        out.push_back(std::move(J));
    }
    return out;
}

inline NondegeneracyReport check_level(const LaurentSystem& sys, Level level, std::uint64_t seed = 1) {
    sys.validate();
    std::vector<LatticePolytope> Ds;
    for (const auto& P : sys.polys) Ds.push_back(newton_polytope(P));
    auto Delta = minkowski_sum(Ds);
    if (Delta.dim() != static_cast<int>(sys.torus_dim()))
        throw InputError("non-degeneracy needs dim Δ = " + std::to_string(sys.torus_dim()) + ", got " +
                         std::to_string(Delta.dim()));
    NondegeneracyReport rep;
    rep.level = level;
    std::map<std::pair<std::vector<std::size_t>, std::vector<IntVec>>, CIResult> cache;
    for (const auto& gamma : faces(Delta)) {
        if (level == Level::Weak && gamma.dim >= Delta.dim()) continue;
        for (const auto& J : nonempty_subsets(sys.size())) {
            std::vector<LatticePolytope> DJ;
            for (auto i : J) DJ.push_back(Ds[i]);
            auto SJ = minkowski_sum(DJ);
            auto gJ = supporting_face(SJ, gamma.witness);
            auto key = std::make_pair(J, gJ.vertices);
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, check_nondegenerate_ci(sys, gJ, J, seed)).first;
            rep.per_face.push_back({gamma, J, it->second.status, it->second.witness});
        }
    }
    return rep;
}

inline NondegeneracyReport check_weak(const LaurentSystem& sys, std::uint64_t seed = 1) {
    return check_level(sys, Level::Weak, seed);
}
inline NondegeneracyReport check_strong(const LaurentSystem& sys, std::uint64_t seed = 1) {
    return check_level(sys, Level::Strong, seed);
}

// ---------------------------------------------------------------------------
// Singular loci and Milnor numbers

struct SingularLocusReport {
    bool decided = true;
    bool isolated = true;
    std::size_t count = 0;  // number of singular torus points when isolated
    std::vector<std::vector<Rat>> points;
    std::size_t residual = 0;  // singular points without exact coordinates
    std::optional<std::vector<std::size_t>> milnor_numbers;
    std::optional<std::size_t> milnor_total;  // Σμ, when known
    std::string note;
};

/// Milnor number of {P = 0} at a torus point, in one or two variables.
inline std::size_t milnor_number(const LaurentPoly& P, const std::vector<Rat>& point) {
    if (P.is_generic()) throw InputError("Milnor numbers need exact coefficients");
    if (!P.is_real()) throw InputError("Milnor numbers are computed for rational coefficients");
    if (point.size() != P.ambient_dim()) throw InputError("point has the wrong dimension");
    for (const auto& x : point)
        if (x == 0) throw InputError("point has a zero coordinate");
    if (P.ambient_dim() == 1) return milnor_number(detail::to_upoly<Rat>(P), point[0]);
    if (P.ambient_dim() == 2) return milnor_number(detail::to_bpoly<Rat>(P), point[0], point[1]);
    throw InputError("Milnor numbers are computed in at most two variables");
}

inline std::size_t milnor_number_plane(const LaurentPoly& P, const std::vector<Rat>& point) {
    if (P.ambient_dim() != 2) throw InputError("milnor_number_plane needs two variables");
    return milnor_number(P, point);
}

inline SingularLocusReport singular_locus_hypersurface(const LaurentPoly& P, std::uint64_t seed = 1) {
    if (P.is_zero()) throw InputError("singular locus of the zero polynomial");
    if (P.is_generic()) throw InputError("singular locus needs exact coefficients");
    const std::size_t d = P.ambient_dim();
    SingularLocusReport rep;
    if (d > 2) {
        rep.decided = false;
        rep.note = "more than two variables";
        return rep;
    }
    std::vector<LaurentPoly> sys{P};
    for (std::size_t j = 0; j < d; ++j) sys.push_back(P.theta(j));
    std::mt19937_64 rng(seed);
    if (d == 1) {
        auto z = detail::common_zeros(sys, 1, rng);
        rep.count = z.zeros.count;
        rep.points = z.rational_points;
        if (P.is_real()) {
            auto f = detail::cleared(detail::to_upoly<Rat>(P));
            rep.milnor_total = static_cast<std::size_t>(f.degree() - distinct_roots(f));
        } else {
            auto f = detail::cleared(detail::to_upoly<GaussRat>(P));
            rep.milnor_total = static_cast<std::size_t>(f.degree() - distinct_roots(f));
        }
    } else {
        auto z = detail::common_zeros(sys, 2, rng);
        rep.isolated = z.zeros.finite;
        rep.count = z.zeros.count;
        rep.points = z.rational_points;
    }
    if (!rep.isolated) {
        rep.note = "singular locus is positive-dimensional";
        return rep;
    }
    rep.residual = rep.count - std::min(rep.count, rep.points.size());
    if (P.is_real()) {
        std::vector<std::size_t> mus;
        for (const auto& p : rep.points) mus.push_back(milnor_number(P, p));
        if (rep.residual == 0) {
            rep.milnor_numbers = mus;
            std::size_t total = 0;
            for (auto m : mus) total += m;
            if (!rep.milnor_total) rep.milnor_total = total;
        }
    }
    return rep;
}

/// Newton non-degeneracy of f at the origin: every compact face part of the
/// Newton polyhedron is smooth and reduced on the torus.
inline Status newton_nondegenerate_at_origin(const LaurentPoly& f, std::uint64_t seed = 1) {
    for (const auto& [e, c] : f.terms()) {
        for (const auto& x : e)
            if (x < 0) throw InputError("support must lie in the nonnegative orthant");
        if (is_zero(e)) throw InputError("f must vanish at the origin");
    }
    LaurentSystem sys{{f}};
    auto NP = newton_polytope(f);
    Status s = Status::Pass;
    for (const auto& F : compact_faces(f.support())) {
        Face g{F.vertices, F.dim, zero_vec(f.ambient_dim())};
        auto w = face_witness(NP, g);
        if (!w) throw std::logic_error("compact face is not a face of the Newton polytope");
        g.witness = *w;
        s = combine(s, check_nondegenerate_ci(sys, g, {0}, seed).status);
    }
    return s;
}

}  // namespace vanish
