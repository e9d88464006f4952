#pragma once
// Hypothesis checking for the vanishing theorems, Betti number predictions,
// and the Euler characteristic and Morse count verifiers.

#include "vanish/elimination.hpp"
#include "vanish/exact.hpp"
#include "vanish/laurent.hpp"
#include "vanish/nondegeneracy.hpp"
#include "vanish/nonresonance.hpp"
#include "vanish/polytope.hpp"
#include "vanish/volume.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace vanish {

enum class TheoremId { VTM, SVTM, MVTM, SMVTM, SSMVTM, NTM, NVTM, BKK };

inline const char* to_string(TheoremId t) {
    switch (t) {
        case TheoremId::VTM: return "VTM";
        case TheoremId::SVTM: return "SVTM";
        case TheoremId::MVTM: return "MVTM";
        case TheoremId::SMVTM: return "SMVTM";
        case TheoremId::SSMVTM: return "SSMVTM";
        case TheoremId::NTM: return "NTM";
        case TheoremId::NVTM: return "NVTM";
        case TheoremId::BKK: return "BKK";
    }
    return "?";
}

inline TheoremId parse_theorem(std::string s) {
    for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    for (auto t : {TheoremId::VTM, TheoremId::SVTM, TheoremId::MVTM, TheoremId::SMVTM, TheoremId::SSMVTM,
                   TheoremId::NTM, TheoremId::NVTM, TheoremId::BKK})
        if (s == to_string(t)) return t;
    throw InputError("unknown theorem '" + s + "'");
}

/// Order tried when no theorem is named.
inline std::vector<TheoremId> auto_order() {
    return {TheoremId::NTM,  TheoremId::MVTM,  TheoremId::VTM,    TheoremId::NVTM,
            TheoremId::SVTM, TheoremId::SMVTM, TheoremId::SSMVTM, TheoremId::BKK};
}

struct Hypothesis {
    std::string name;
    Status status = Status::Pass;
    std::string evidence;
};

struct TheoremVerdict {
    TheoremId theorem = TheoremId::VTM;
    std::vector<Hypothesis> hypotheses;
    bool applicable = false;
    bool conditional = false;
    std::optional<int> concentration_degree;
    std::optional<Int> predicted_dimension;
    std::string dimension_source;  // "closed-form", "euler-derived" or empty
    std::string dimension_formula;
    std::optional<Int> euler_characteristic;
    std::string note;

    [[nodiscard]] Status status() const {
        Status s = Status::Pass;
        for (const auto& h : hypotheses) s = combine(s, h.status);
        return s;
    }
};

struct MilnorDatum {
    std::vector<Rat> point;
    std::size_t mu = 0;
};

/// Everything a prediction needs: P_1..P_k on (C*)^{n-k}, the parameter
/// vector, and optionally declared Milnor numbers.
struct Problem {
    LaurentSystem system;
    ParameterVector parameters;
    std::optional<std::vector<MilnorDatum>> milnor;

    [[nodiscard]] std::size_t k() const { return system.size(); }
    [[nodiscard]] std::size_t torus_dim() const { return system.torus_dim(); }
    [[nodiscard]] std::size_t n() const { return torus_dim() + k(); }
    [[nodiscard]] std::vector<std::vector<IntVec>> supports() const {
        std::vector<std::vector<IntVec>> out;
        for (const auto& p : system.polys) out.push_back(p.support());
        return out;
    }
    void validate() const {
        system.validate();
        if (torus_dim() == 0) throw InputError("the torus must have positive dimension");
        if (parameters.k != k())
            throw InputError("parameters: k = " + std::to_string(parameters.k) + " but the system has " +
                             std::to_string(k()) + " polynomials");
        if (parameters.c.size() != n())
            throw InputError("parameters: expected " + std::to_string(n()) + " entries, got " +
                             std::to_string(parameters.c.size()));
    }
};

// ---------------------------------------------------------------------------
// Euler characteristics

/// χ of a non-degenerate complete intersection with Newton polytopes Δs in
/// (C*)^n.
inline Int bkk_euler(const std::vector<LatticePolytope>& Ds, std::size_t n) {
    const std::size_t p = Ds.size();
    if (p == 0 || p > n) throw InputError("bkk_euler needs 1 <= p <= n polytopes");
    for (const auto& D : Ds)
        if (D.ambient_dim() != n) throw InputError("bkk_euler: polytope in the wrong dimension");
    Int v = mixed_volume_sum(Ds, static_cast<unsigned>(n));
    return (n - p) % 2 == 0 ? v : Int(-v);
}

enum class EulerMethod { Auto, Bkk, Critical, Univariate };

inline const char* to_string(EulerMethod m) {
    switch (m) {
        case EulerMethod::Auto: return "auto";
        case EulerMethod::Bkk: return "bkk";
        case EulerMethod::Critical: return "critical-points";
        case EulerMethod::Univariate: return "univariate";
    }
    return "?";
}

struct EulerReport {
    std::map<std::vector<std::size_t>, Int> chi_strata;  // J -> χ(Z_J), BKK route
    std::optional<Int> chi_complement;
    EulerMethod method = EulerMethod::Auto;
    Status status = Status::Pass;
    std::string note;
};

namespace detail {

inline LaurentPoly product(const LaurentSystem& sys) {
    LaurentPoly h = sys.polys.front();
    for (std::size_t i = 1; i < sys.size(); ++i) h = h * sys.polys[i];
    return h;
}

/// Non-degenerate complete intersection {P_i = 0, i ∈ J}: every face of Δ_J.
inline CIResult ci_status(const LaurentSystem& sys, const std::vector<std::size_t>& J, std::uint64_t seed) {
    std::vector<LatticePolytope> Ds;
    for (auto i : J) Ds.push_back(newton_polytope(sys.polys[i]));
    auto DJ = minkowski_sum(Ds);
    CIResult r;
    for (const auto& g : faces(DJ)) {
        auto c = check_nondegenerate_ci(sys, g, J, seed);
        if (combine(r.status, c.status) != r.status) {
            r.status = combine(r.status, c.status);
            if (!c.witness.empty()) r.witness = c.witness;
        }
        if (r.status == Status::Fail) break;
    }
    return r;
}

/// Torus points of the critical system of h·x^{-a} off {h = 0}, or nullopt
/// when the critical locus is not finite.
inline std::optional<std::size_t> critical_points_off(const LaurentPoly& h, const std::vector<Rat>& a,
                                                      std::uint64_t seed) {
    auto crit = critical_system(h, a).polys;
    std::mt19937_64 rng(seed);
    const std::size_t d = h.ambient_dim();
    auto all = common_zeros(crit, d, rng);
    if (!all.zeros.finite) return std::nullopt;
    crit.push_back(h);
    auto on = common_zeros(crit, d, rng);
    return all.zeros.count - std::min(all.zeros.count, on.zeros.count);
}

inline std::vector<Rat> random_exponent(std::mt19937_64& rng, std::size_t d) {
    std::uniform_int_distribution<long> num(-60, 60), den(7, 13);
    std::vector<Rat> a;
    for (std::size_t j = 0; j < d; ++j) a.emplace_back(num(rng), den(rng));
    return a;
}

}  // namespace detail

/// χ(W), W = (C*)^{n-k} minus the hypersurfaces P_i = 0.
///
/// Bkk: inclusion-exclusion over the strata Z_J, each required to be a
/// non-degenerate complete intersection. Univariate: minus the number of
/// distinct roots of ΠP_i. Critical: the number of critical points in W of
/// ΠP_i·x^{-a} for generic a, which is (-1)^{dim W} χ(W) for the smooth very
/// affine variety W; the maximum over three draws of a is used.
inline EulerReport euler_complement(const LaurentSystem& sys, EulerMethod method = EulerMethod::Auto,
                                    std::uint64_t seed = 1) {
    sys.validate();
    const std::size_t d = sys.torus_dim();
    if (d == 0) throw InputError("euler_complement needs a positive-dimensional torus");
    const std::size_t k = sys.size();
    EulerReport rep;

    auto try_bkk = [&]() -> bool {
        EulerReport r;
        r.method = EulerMethod::Bkk;
        Int chi = 0;
        for (const auto& J : nonempty_subsets(k)) {
            auto st = detail::ci_status(sys, J, seed);
            r.status = combine(r.status, st.status);
            if (st.status == Status::Fail || st.status == Status::Undecided) {
                r.status = st.status;
                std::string js;
                for (auto i : J) js += (js.empty() ? "" : ",") + std::to_string(i + 1);
                r.note = "stratum {" + js + "} is not a non-degenerate complete intersection" +
                         (st.witness.empty() ? "" : ": " + st.witness);
                rep = r;
                return false;
            }
            Int z = 0;
            if (J.size() <= d) {
                std::vector<LatticePolytope> Ds;
                for (auto i : J) Ds.push_back(newton_polytope(sys.polys[i]));
                z = bkk_euler(Ds, d);
            }
            r.chi_strata[J] = z;
            chi += J.size() % 2 == 0 ? z : Int(-z);
        }
        r.chi_complement = chi;
        rep = r;
        return true;
    };

    auto try_univariate = [&]() -> bool {
        rep = {};
        rep.method = EulerMethod::Univariate;
        if (d != 1) {
            rep.status = Status::Undecided;
            rep.note = "the univariate route needs a one-dimensional torus";
            return false;
        }
        if (sys.mode() == CoefficientMode::Generic) {
            rep.status = Status::Undecided;
            rep.note = "the univariate route needs exact coefficients";
            return false;
        }
        auto h = detail::product(sys);
        std::size_t roots = h.is_real() ? torus_zeros(std::vector<UPoly<Rat>>{detail::to_upoly<Rat>(h)}).count
                                        : torus_zeros(std::vector<UPoly<GaussRat>>{detail::to_upoly<GaussRat>(h)}).count;
        rep.chi_complement = -Int(roots);
        return true;
    };

    auto try_critical = [&]() -> bool {
        rep = {};
        rep.method = EulerMethod::Critical;
        if (d > 2 || sys.mode() == CoefficientMode::Generic) {
            rep.status = Status::Undecided;
            rep.note = d > 2 ? "critical-point count needs at most two variables" : "critical-point count needs exact coefficients";
            return false;
        }
        auto h = detail::product(sys);
        std::mt19937_64 rng(seed);
        std::optional<std::size_t> best;
        for (int t = 0; t < 3; ++t) {
            auto a = detail::random_exponent(rng, d);
            auto c = detail::critical_points_off(h, a, seed + static_cast<std::uint64_t>(t));
            if (c && (!best || *c > *best)) best = c;
        }
        if (!best) {
            rep.status = Status::Undecided;
            rep.note = "critical locus is not finite (non-reduced hypersurface?)";
            return false;
        }
        rep.chi_complement = d % 2 == 0 ? Int(*best) : Int(-Int(*best));
        return true;
    };

    switch (method) {
        case EulerMethod::Bkk: try_bkk(); return rep;
        case EulerMethod::Univariate: try_univariate(); return rep;
        case EulerMethod::Critical: try_critical(); return rep;
        case EulerMethod::Auto: break;
    }
    if (try_bkk()) return rep;
    auto bkk_note = rep.note;
    if (d == 1 && try_univariate()) {
        rep.note = bkk_note;
        return rep;
    }
    if (d == 2 && try_critical()) {
        rep.note = bkk_note;
        return rep;
    }
    rep.status = Status::Undecided;
    if (rep.note.empty()) rep.note = bkk_note;
    return rep;
}

// ---------------------------------------------------------------------------
// Closed-form dimension and Morse counts

/// Σ over m_1 + ... + m_i = n, m_j >= 1, of MV(Δ_1^{m_1}, ..., Δ_i^{m_i}).
inline Int nvtm_dimension(const std::vector<LatticePolytope>& Ds, std::size_t n) {
    for (const auto& D : Ds)
        if (D.dim() != static_cast<int>(n))
            throw InputError("nvtm_dimension needs full-dimensional polytopes");
    return mixed_volume_sum(Ds, static_cast<unsigned>(n));
}

struct MorseTrial {
    std::vector<Rat> a;
    std::optional<std::size_t> count;       // torus solutions, nullopt if infinite
    std::optional<std::size_t> off_zero;    // those with h != 0
    bool match = false;
};

struct MorseReport {
    Int volume;
    std::vector<MorseTrial> trials;
    std::size_t matches = 0;
    [[nodiscard]] double match_rate() const {
        return trials.empty() ? 0.0 : static_cast<double>(matches) / static_cast<double>(trials.size());
    }
};

/// Number of torus solutions of x_j ∂_j h = a_j h (and of those off h = 0).
inline MorseTrial critical_count(const LaurentPoly& h, const std::vector<Rat>& a, std::uint64_t seed = 1) {
    if (h.is_generic()) throw InputError("critical counts need exact coefficients");
    const std::size_t d = h.ambient_dim();
    if (d == 0 || d > 2) throw InputError("critical counts are computed in one or two variables");
    MorseTrial t;
    t.a = a;
    auto crit = critical_system(h, a).polys;
    std::mt19937_64 rng(seed);
    auto all = detail::common_zeros(crit, d, rng);
    if (!all.zeros.finite) return t;
    t.count = all.zeros.count;
    crit.push_back(h);
    auto on = detail::common_zeros(crit, d, rng);
    t.off_zero = all.zeros.count - std::min(all.zeros.count, on.zeros.count);
    return t;
}

/// Random a in the interior of NP(h) (a generic point when NP(h) is not
/// full-dimensional), critical count against Vol_Z(NP(h)).
inline MorseReport verify_morse_count(const LaurentPoly& h, std::size_t trials, std::uint64_t seed = 1) {
    auto NP = newton_polytope(h);
    const std::size_t d = h.ambient_dim();
    MorseReport rep;
    rep.volume = NP.full_dimensional() ? NP.normalized_volume() : Int(0);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> w(1, 9);
    for (std::size_t t = 0; t < trials; ++t) {
        std::vector<Rat> a(d);
        if (NP.full_dimensional()) {
            long total = 0;
            for (const auto& v : NP.vertices()) {
                long wt = w(rng);
                total += wt;
                for (std::size_t j = 0; j < d; ++j) a[j] += Rat(wt) * Rat(v[j]);
            }
            for (auto& x : a) x /= Rat(total);
        } else {
            a = detail::random_exponent(rng, d);
        }
        auto trial = critical_count(h, a, seed + t);
        trial.match = trial.count && Int(*trial.count) == rep.volume;
        rep.matches += trial.match;
        rep.trials.push_back(std::move(trial));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Theorem dispatch

namespace detail {

inline std::string join_ids(const std::vector<std::size_t>& J) {
    std::string s = "{";
    for (std::size_t t = 0; t < J.size(); ++t) s += (t ? "," : "") + std::to_string(J[t] + 1);
    return s + "}";
}

inline std::string format_face(const Face& g) {
    std::string s = "[";
    for (std::size_t t = 0; t < g.vertices.size(); ++t) s += (t ? " " : "") + to_string(g.vertices[t]);
    return s + "]";
}

/// Singular points of {Q = 0} in a torus of dimension ambient are isolated.
inline Hypothesis isolated_singularities(const std::string& name, const LaurentPoly& Q, std::size_t ambient,
                                         std::uint64_t seed) {
    if (Q.is_generic()) return {name, Status::AssumedGeneric, "generic coefficients"};
    auto red = reduce_to_lattice({Q}, Q.ambient_dim());
    const std::size_t r = red.basis.size();
    if (r == 0) return {name, Status::Pass, "monomial: empty hypersurface"};
    if (r > 2) return {name, Status::Undecided, std::to_string(r) + " essential variables"};
    auto rep = singular_locus_hypersurface(red.polys.front(), seed);
    if (!rep.decided) return {name, Status::Undecided, rep.note};
    if (!rep.isolated) return {name, Status::Fail, "positive-dimensional singular locus"};
    if (rep.count == 0) return {name, Status::Pass, "smooth"};
    if (r < ambient)
        return {name, Status::Fail,
                std::to_string(rep.count) + " singular point(s) of a polynomial in fewer variables sweep out curves"};
    return {name, Status::Pass, std::to_string(rep.count) + " isolated singular point(s)"};
}

class Context {
public:
    Context(const Problem& p, std::uint64_t seed) : p_(p), seed_(seed) {
        for (const auto& P : p.system.polys) Ds_.push_back(newton_polytope(P));
        Delta_ = minkowski_sum(Ds_);
    }

    [[nodiscard]] const Problem& problem() const { return p_; }
    [[nodiscard]] std::uint64_t seed() const { return seed_; }
    [[nodiscard]] const std::vector<LatticePolytope>& Ds() const { return Ds_; }
    [[nodiscard]] const LatticePolytope& Delta() const { return Delta_; }
    [[nodiscard]] std::size_t d() const { return p_.torus_dim(); }
    [[nodiscard]] bool full() const { return Delta_.dim() == static_cast<int>(d()); }

    Hypothesis dim_delta() const {
        return {"dim Δ = n-k", full() ? Status::Pass : Status::Fail,
                "dim Δ = " + std::to_string(Delta_.dim()) + ", n-k = " + std::to_string(d())};
    }

    Hypothesis each_dim() const {
        for (std::size_t i = 0; i < Ds_.size(); ++i)
            if (Ds_[i].dim() != static_cast<int>(d()))
                return {"dim Δ_i = n-k for every i", Status::Fail,
                        "dim Δ_" + std::to_string(i + 1) + " = " + std::to_string(Ds_[i].dim())};
        return {"dim Δ_i = n-k for every i", Status::Pass, ""};
    }

    Hypothesis single() const {
        return {"k = 1", p_.k() == 1 ? Status::Pass : Status::Fail, "k = " + std::to_string(p_.k())};
    }

    const NonresonanceVerdict* nonresonance() {
        if (!nonres_tried_) {
            nonres_tried_ = true;
            try {
                nonres_ = check_nonresonance(p_.supports(), p_.parameters);
            } catch (const InputError& e) {
                nonres_error_ = e.what();
            }
        }
        return nonres_ ? &*nonres_ : nullptr;
    }

    Hypothesis nonresonant() {
        auto* v = nonresonance();
        if (!v) return {"c nonresonant", Status::Fail, nonres_error_};
        if (v->nonresonant)
            return {"c nonresonant", Status::Pass, std::to_string(v->certificates.size()) + " facets of K checked"};
        const auto& f = v->certificates[v->failing_facets.front()];
        return {"c nonresonant", Status::Fail,
                "facet with conormal " + to_string(f.conormal) + " has pairing " + to_string(f.pairing)};
    }

    Hypothesis generic_c() {
        auto* v = nonresonance();
        if (v && v->nonresonant)
            return {"c generic", Status::AssumedGeneric, "c is nonresonant; the genericity locus is not explicit"};
        return {"c generic", Status::Undecided, "c is resonant; the genericity locus is not explicit"};
    }

    Hypothesis c_not_integer() const {
        bool ok = check_c_not_integer(p_.parameters);
        return {"(c, c~) not in Z^n", ok ? Status::Pass : Status::Fail, ok ? "" : "every entry is an integer"};
    }

    Hypothesis local_system_nontrivial() const {
        auto raw = p_.parameters.raw();
        bool ok = false;
        for (std::size_t j = 0; j < d(); ++j) ok |= !is_integer(raw[j]);
        return {"L non-trivial", ok ? Status::Pass : Status::Fail,
                ok ? "" : "monodromy exp(2πi c_j) is trivial around every x_j"};
    }

    Hypothesis level(Level lv) {
        auto& slot = lv == Level::Weak ? weak_ : strong_;
        const char* name = lv == Level::Weak ? "weakly non-degenerate" : "strongly non-degenerate";
        if (!full()) return {name, Status::Fail, "requires dim Δ = n-k"};
        if (!slot) slot = check_level(p_.system, lv, seed_);
        auto s = slot->overall();
        std::string ev;
        for (const auto& f : slot->per_face)
            if (f.status == s && s != Status::Pass) {
                ev = "face " + format_face(f.face) + ", J = " + join_ids(f.J) + (f.witness.empty() ? "" : ": " + f.witness);
                break;
            }
        return {name, s, ev};
    }

    CIResult ci(const std::vector<std::size_t>& J) {
        auto it = ci_.find(J);
        if (it == ci_.end()) it = ci_.emplace(J, ci_status(p_.system, J, seed_)).first;
        return it->second;
    }

    const EulerReport& euler() {
        if (!euler_) euler_ = euler_complement(p_.system, EulerMethod::Auto, seed_);
        return *euler_;
    }

    /// Σμ over the singular points of P = 0 in T_0, when known.
    std::optional<Int> milnor_total(std::string& how) {
        const auto& P = p_.system.polys.front();
        if (p_.milnor) {
            Int s = 0;
            for (const auto& m : *p_.milnor) s += m.mu;
            how = "declared";
            return s;
        }
        if (P.is_generic()) {
            how = "generic coefficients: no singular points";
            return Int(0);
        }
        auto rep = singular_locus_hypersurface(P, seed_);
        if (!rep.decided || !rep.isolated || !rep.milnor_total) {
            how = rep.note.empty() ? "Milnor numbers of irrational singular points unknown" : rep.note;
            return std::nullopt;
        }
        how = std::to_string(rep.count) + " singular point(s)";
        return Int(*rep.milnor_total);
    }

private:
    const Problem& p_;
    std::uint64_t seed_;
    std::vector<LatticePolytope> Ds_;
    LatticePolytope Delta_;
    bool nonres_tried_ = false;
    std::optional<NonresonanceVerdict> nonres_;
    std::string nonres_error_;
    std::optional<NondegeneracyReport> weak_, strong_;
    std::map<std::vector<std::size_t>, CIResult> ci_;
    std::optional<EulerReport> euler_;
};

inline void finish(TheoremVerdict& v) {
    const auto s = v.status();
    v.applicable = s == Status::Pass || s == Status::AssumedGeneric;
    v.conditional = v.applicable && s == Status::AssumedGeneric;
}

inline void euler_dimension(TheoremVerdict& v, Context& ctx) {
    if (!v.applicable || !v.concentration_degree) return;
    const auto& e = ctx.euler();
    if (!e.chi_complement) {
        v.note = "no dimension: " + e.note;
        return;
    }
    v.euler_characteristic = e.chi_complement;
    v.predicted_dimension = *v.concentration_degree % 2 == 0 ? *e.chi_complement : Int(-*e.chi_complement);
    v.dimension_source = "euler-derived";
    v.dimension_formula = std::string("(-1)^") + std::to_string(*v.concentration_degree) + " χ(W), χ(W) by " +
                          to_string(e.method);
    if (e.status == Status::AssumedGeneric) v.note = "χ(W) assumes generic coefficients";
}

// Face conditions shared by the generic-parameter theorems with k > 1.
inline void face_conditions(TheoremVerdict& v, Context& ctx, bool similar_case) {
    const auto& sys = ctx.problem().system;
    const std::size_t k = sys.size();
    Hypothesis iso{similar_case ? "P_i^{γ_i} = 0 has isolated singular points on every face"
                                : "P_i^{γ_i} = 0 has isolated singular points on facets with dim γ_i = dim γ",
                   Status::Pass, ""};
    Hypothesis cis{"face systems are non-degenerate complete intersections", Status::Pass, ""};
    auto merge = [](Hypothesis& h, const Hypothesis& part, const std::string& where) {
        if (combine(h.status, part.status) != h.status) {
            h.status = combine(h.status, part.status);
            h.evidence = where + (part.evidence.empty() ? "" : ": " + part.evidence);
        }
    };
    for (const auto& g : faces(ctx.Delta())) {
        const bool proper = g.dim < ctx.Delta().dim();
        if (similar_case) {
            for (std::size_t i = 0; i < k; ++i) {
                auto gi = supporting_face(ctx.Ds()[i], g.witness);
                auto part = face_part(sys.polys[i], gi);
                merge(iso, isolated_singularities(iso.name, part, static_cast<std::size_t>(g.dim), ctx.seed()),
                      "P_" + std::to_string(i + 1) + " on face " + format_face(g));
            }
        }
        if (!proper) continue;
        for (const auto& J : nonempty_subsets(k)) {
            if (similar_case && J.size() < 2) continue;
            std::vector<LatticePolytope> DJ;
            for (auto i : J) DJ.push_back(ctx.Ds()[i]);
            auto gJ = supporting_face(minkowski_sum(DJ), g.witness);
            if (!similar_case && J.size() == 1) {
                auto gi = supporting_face(ctx.Ds()[J[0]], g.witness);
                if (gi.dim == g.dim && g.dim == ctx.Delta().dim() - 1) {
                    auto part = face_part(sys.polys[J[0]], gi);
                    merge(iso, isolated_singularities(iso.name, part, static_cast<std::size_t>(g.dim), ctx.seed()),
                          "P_" + std::to_string(J[0] + 1) + " on face " + format_face(g));
                    continue;
                }
            }
            auto r = check_nondegenerate_ci(sys, gJ, J, ctx.seed());
            merge(cis, {cis.name, r.status, r.witness}, "face " + format_face(g) + ", J = " + join_ids(J));
        }
    }
    v.hypotheses.push_back(iso);
    v.hypotheses.push_back(cis);
}

}  // namespace detail

inline TheoremVerdict predict(const Problem& p, TheoremId id, detail::Context& ctx) {
    TheoremVerdict v;
    v.theorem = id;
    const std::size_t d = p.torus_dim();
    const auto& sys = p.system;
    switch (id) {
        case TheoremId::VTM: {
            v.hypotheses = {ctx.single(), ctx.dim_delta(), ctx.nonresonant()};
            if (p.k() == 1) v.hypotheses.push_back(ctx.level(Level::Weak));
            detail::finish(v);
            if (!v.applicable) break;
            v.concentration_degree = static_cast<int>(d);
            std::string how;
            auto mu = ctx.milnor_total(how);
            const Int vol = ctx.Delta().normalized_volume();
            if (mu) {
                v.predicted_dimension = vol - *mu;
                v.dimension_source = "closed-form";
                v.dimension_formula = "Vol_Z(Δ) - Σμ = " + vol.str() + " - " + mu->str() + " (" + how + ")";
            } else {
                v.dimension_formula = "Vol_Z(Δ) - Σμ = " + vol.str() + " - Σμ (" + how + ")";
                detail::euler_dimension(v, ctx);
            }
            break;
        }
        case TheoremId::MVTM: {
            v.hypotheses = {ctx.dim_delta(), ctx.nonresonant(), ctx.level(Level::Weak)};
            detail::finish(v);
            if (v.applicable) v.concentration_degree = static_cast<int>(d);
            detail::euler_dimension(v, ctx);
            break;
        }
        case TheoremId::NTM: {
            v.hypotheses = {ctx.dim_delta(), ctx.level(Level::Strong), ctx.c_not_integer(), ctx.each_dim()};
            detail::finish(v);
            if (v.applicable) v.concentration_degree = static_cast<int>(d);
            detail::euler_dimension(v, ctx);
            break;
        }
        case TheoremId::SVTM: {
            v.hypotheses = {ctx.single(), ctx.dim_delta()};
            if (p.k() == 1 && ctx.full()) {
                Hypothesis iso{"P^γ = 0 has isolated singular points on every face", Status::Pass, ""};
                for (const auto& g : faces(ctx.Delta())) {
                    auto part = face_part(sys.polys.front(), g);
                    auto h = detail::isolated_singularities(iso.name, part, static_cast<std::size_t>(g.dim), ctx.seed());
                    if (combine(iso.status, h.status) != iso.status) {
                        iso.status = combine(iso.status, h.status);
                        iso.evidence = "face " + detail::format_face(g) + ": " + h.evidence;
                    }
                }
                v.hypotheses.push_back(iso);
            }
            v.hypotheses.push_back(ctx.generic_c());
            detail::finish(v);
            if (v.applicable) v.concentration_degree = static_cast<int>(d);
            detail::euler_dimension(v, ctx);
            break;
        }
        case TheoremId::SMVTM: {
            v.hypotheses = {ctx.dim_delta()};
            Hypothesis iso{"each P_i = 0 has isolated singular points in T_0", Status::Pass, ""};
            for (std::size_t i = 0; i < p.k(); ++i) {
                auto h = detail::isolated_singularities(iso.name, sys.polys[i], d, ctx.seed());
                if (combine(iso.status, h.status) != iso.status) {
                    iso.status = combine(iso.status, h.status);
                    iso.evidence = "P_" + std::to_string(i + 1) + ": " + h.evidence;
                }
            }
            v.hypotheses.push_back(iso);
            if (ctx.full()) detail::face_conditions(v, ctx, false);
            v.hypotheses.push_back(ctx.generic_c());
            detail::finish(v);
            if (v.applicable) v.concentration_degree = static_cast<int>(d);
            detail::euler_dimension(v, ctx);
            break;
        }
        case TheoremId::SSMVTM: {
            v.hypotheses = {ctx.dim_delta()};
            Hypothesis sim{"Δ_1, ..., Δ_k similar", Status::Pass, "positive rational dilation and translation"};
            for (std::size_t i = 1; i < p.k(); ++i)
                if (!similar(ctx.Ds()[0], ctx.Ds()[i])) {
                    sim.status = Status::Fail;
                    sim.evidence = "Δ_" + std::to_string(i + 1) + " is not similar to Δ_1";
                }
            v.hypotheses.push_back(sim);
            if (ctx.full() && sim.status == Status::Pass) detail::face_conditions(v, ctx, true);
            v.hypotheses.push_back(ctx.generic_c());
            detail::finish(v);
            if (v.applicable) v.concentration_degree = static_cast<int>(d);
            detail::euler_dimension(v, ctx);
            break;
        }
        case TheoremId::NVTM: {
            const std::size_t l = p.k();
            v.hypotheses = {ctx.local_system_nontrivial(), ctx.each_dim()};
            Hypothesis ci{"Z_1, ..., Z_l non-degenerate complete intersections", Status::Pass, ""};
            if (l > d) {
                ci.status = Status::Fail;
                ci.evidence = "more equations than variables";
            } else if (v.hypotheses.back().status == Status::Pass) {
                std::vector<std::size_t> J;
                for (std::size_t i = 0; i < l; ++i) {
                    J.push_back(i);
                    auto r = ctx.ci(J);
                    if (combine(ci.status, r.status) != ci.status) {
                        ci.status = combine(ci.status, r.status);
                        ci.evidence = "Z_" + std::to_string(i + 1) + (r.witness.empty() ? "" : ": " + r.witness);
                    }
                }
            }
            v.hypotheses.push_back(ci);
            detail::finish(v);
            if (!v.applicable) break;
            v.concentration_degree = static_cast<int>(d - l);
            v.predicted_dimension = nvtm_dimension(ctx.Ds(), d);
            v.dimension_source = "closed-form";
            v.dimension_formula = "Σ_{m_1+...+m_l=n-k} MV(Δ_1^{m_1}, ..., Δ_l^{m_l})";
            v.euler_characteristic = bkk_euler(ctx.Ds(), d);
            v.note = "cohomology of Z_l = {P_1 = ... = P_l = 0} in (C*)^{n-k}";
            break;
        }
        case TheoremId::BKK: {
            Hypothesis sz{"k <= n-k", p.k() <= d ? Status::Pass : Status::Fail, ""};
            v.hypotheses = {sz};
            if (p.k() <= d) {
                std::vector<std::size_t> all(p.k());
                for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
                auto r = ctx.ci(all);
                v.hypotheses.push_back({"Z non-degenerate complete intersection", r.status, r.witness});
            }
            detail::finish(v);
            if (v.applicable) {
                v.euler_characteristic = bkk_euler(ctx.Ds(), d);
                v.note = "χ of Z = {P_1 = ... = P_k = 0} in (C*)^{n-k}";
            }
            break;
        }
    }
    return v;
}

inline TheoremVerdict predict(const Problem& p, TheoremId id, std::uint64_t seed = 1) {
    p.validate();
    detail::Context ctx(p, seed);
    return predict(p, id, ctx);
}

/// Verdicts in auto order.
inline std::vector<TheoremVerdict> predict_all(const Problem& p, std::uint64_t seed = 1) {
    p.validate();
    detail::Context ctx(p, seed);
    std::vector<TheoremVerdict> out;
    for (auto id : auto_order()) out.push_back(predict(p, id, ctx));
    return out;
}

/// Index of the verdict to report: applicable and unconditional first, then
/// one with a closed-form dimension, then auto order.
inline std::size_t select_verdict(const std::vector<TheoremVerdict>& vs) {
    auto score = [](const TheoremVerdict& v) {
        int s = 0;
        if (v.applicable) s += 4;
        if (v.applicable && !v.conditional) s += 2;
        if (v.dimension_source == "closed-form") s += 1;
        return s;
    };
    std::size_t best = 0;
    for (std::size_t i = 1; i < vs.size(); ++i)
        if (score(vs[i]) > score(vs[best])) best = i;
    return best;
}

}  // namespace vanish
