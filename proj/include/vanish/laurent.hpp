#pragma once
// Laurent polynomials with exact or symbolic-generic coefficients, and the
// systems built from them: face parts, the lift t_i - P_i, and the
// logarithmic critical-point equations.

#include "vanish/exact.hpp"
#include "vanish/polytope.hpp"

#include <map>
#include <vector>

namespace vanish {

/// A coefficient: an element of Q(i), or the symbol GENERIC.
struct Coeff {
    bool generic = false;
    GaussRat value;

    Coeff() = default;
    Coeff(GaussRat v) : value(std::move(v)) {}  // NOLINT
    Coeff(long v) : value(v) {}                 // NOLINT
    static Coeff make_generic() {
        Coeff c;
        c.generic = true;
        return c;
    }
    [[nodiscard]] bool is_zero() const { return !generic && value.is_zero(); }
    friend bool operator==(const Coeff& a, const Coeff& b) {
        return a.generic == b.generic && (a.generic || a.value == b.value);
    }
    friend Coeff operator*(const GaussRat& s, const Coeff& c) {
        if (s.is_zero()) return {};
        if (c.generic) return c;
        return {s * c.value};
    }
};

enum class CoefficientMode { Exact, Generic };

class LaurentPoly {
public:
    using Terms = std::map<IntVec, Coeff>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t ambient_dim) : dim_(ambient_dim) {}
    LaurentPoly(std::size_t ambient_dim, const Terms& terms) : dim_(ambient_dim) {
        for (const auto& [e, c] : terms) add_term(e, c);
    }

    /// Adds c·x^e; exact coefficients are summed, zero results removed.
    void add_term(const IntVec& e, const Coeff& c) {
        if (e.size() != dim_) throw InputError("exponent has the wrong dimension");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
            return;
        }
        if (it->second.generic || c.generic) {
            it->second = Coeff::make_generic();
            return;
        }
        it->second.value += c.value;
        if (it->second.is_zero()) terms_.erase(it);
    }

    [[nodiscard]] std::size_t ambient_dim() const { return dim_; }
    [[nodiscard]] const Terms& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_generic() const {
        return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.generic; });
    }
    [[nodiscard]] bool is_real() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [](const auto& t) { return !t.second.generic && t.second.value.is_real(); });
    }
    [[nodiscard]] std::vector<IntVec> support() const {
        std::vector<IntVec> s;
        for (const auto& [e, c] : terms_) s.push_back(e);
        return s;
    }

    /// Value at a torus point (exact coefficients only).
    [[nodiscard]] GaussRat operator()(const std::vector<GaussRat>& x) const {
        if (x.size() != dim_) throw InputError("evaluation point has the wrong dimension");
        GaussRat acc;
        for (const auto& [e, c] : terms_) {
            if (c.generic) throw InputError("cannot evaluate a polynomial with generic coefficients");
            acc += c.value * monomial_value(e, x);
        }
        return acc;
    }

    static GaussRat monomial_value(const IntVec& e, const std::vector<GaussRat>& x) {
        GaussRat m(1);
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (x[j].is_zero()) throw InputError("point has a zero coordinate");
            const long p = e[j].convert_to<long>();
            GaussRat f = p > 0 ? x[j] : GaussRat(1) / x[j];
            for (long t = 0; t < std::abs(p); ++t) m *= f;
        }
        return m;
    }

    /// x_j ∂/∂x_j.
    [[nodiscard]] LaurentPoly theta(std::size_t j) const {
        LaurentPoly r(dim_);
        for (const auto& [e, c] : terms_) r.add_term(e, GaussRat(Rat(e.at(j))) * c);
        return r;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
        for (const auto& [e, c] : b.terms_) a.add_term(e, c);
        return a;
    }
    friend LaurentPoly operator*(const GaussRat& s, const LaurentPoly& a) {
        LaurentPoly r(a.dim_);
        for (const auto& [e, c] : a.terms_) r.add_term(e, s * c);
        return r;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a + GaussRat(-1) * b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a.dim_);
        for (const auto& [e, c] : a.terms_)
            for (const auto& [f, d] : b.terms_) {
                if (c.generic || d.generic) {
                    r.add_term(add(e, f), Coeff::make_generic());
                } else {
                    r.add_term(add(e, f), c.value * d.value);
                }
            }
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }

private:
    std::size_t dim_ = 0;
    Terms terms_;
};

struct LaurentSystem {
    std::vector<LaurentPoly> polys;

    [[nodiscard]] std::size_t torus_dim() const { return polys.empty() ? 0 : polys.front().ambient_dim(); }
    [[nodiscard]] std::size_t size() const { return polys.size(); }
    [[nodiscard]] CoefficientMode mode() const {
        for (const auto& p : polys)
            if (p.is_generic()) return CoefficientMode::Generic;
        return CoefficientMode::Exact;
    }
    void validate() const {
        if (polys.empty()) throw InputError("system has no polynomials");
        for (const auto& p : polys) {
            if (p.ambient_dim() != torus_dim()) throw InputError("polynomials live on different tori");
            if (p.is_zero()) throw InputError("polynomial with empty support");
        }
    }
};

inline LatticePolytope newton_polytope(const LaurentPoly& g) {
    if (g.is_zero()) throw InputError("Newton polytope of the zero polynomial");
    return hull(g.support());
}

/// g^γ: the terms of g whose exponents lie on the face γ of NP(g).
inline LaurentPoly face_part(const LaurentPoly& g, const Face& gamma) {
    auto P = newton_polytope(g);
    auto u = face_witness(P, gamma);
    if (!u) throw InputError("face_part: not a face of the Newton polytope");
    const Int m = P.min_pairing(*u);
    LaurentPoly r(g.ambient_dim());
    for (const auto& [e, c] : g.terms())
        if (dot(*u, e) == m) r.add_term(e, c);
    return r;
}

/// Terms of g minimising <u, .>.
inline LaurentPoly initial_form(const LaurentPoly& g, const IntVec& u) {
    Int m = 0;
    bool first = true;
    for (const auto& [e, c] : g.terms()) {
        Int v = dot(u, e);
        if (first || v < m) m = v;
        first = false;
    }
    LaurentPoly r(g.ambient_dim());
    for (const auto& [e, c] : g.terms())
        if (dot(u, e) == m) r.add_term(e, c);
    return r;
}

/// (t_1 - P_1(x), ..., t_k - P_k(x)) on the torus with coordinates (x, t).
inline LaurentSystem lift_system(const LaurentSystem& sys) {
    sys.validate();
    const std::size_t d = sys.torus_dim();
    const std::size_t k = sys.size();
    LaurentSystem out;
    for (std::size_t i = 0; i < k; ++i) {
        LaurentPoly q(d + k);
        IntVec t = zero_vec(d + k);
        t[d + i] = 1;
        q.add_term(t, Coeff(1));
        for (const auto& [e, c] : sys.polys[i].terms()) {
            IntVec w = e;
            w.resize(d + k, Int(0));
            q.add_term(w, GaussRat(-1) * c);
        }
        out.polys.push_back(std::move(q));
    }
    return out;
}

/// x_j ∂_j h - a_j h for j = 1..n: the critical points of h·x^{-a}.
inline LaurentSystem critical_system(const LaurentPoly& h, const std::vector<Rat>& a) {
    if (a.size() != h.ambient_dim()) throw InputError("critical_system: exponent has the wrong dimension");
    LaurentSystem out;
    for (std::size_t j = 0; j < a.size(); ++j) out.polys.push_back(h.theta(j) - GaussRat(a[j]) * h);
    return out;
}

inline LaurentSystem critical_system(const LaurentPoly& h, const IntVec& a) {
    std::vector<Rat> r;
    for (const auto& x : a) r.emplace_back(x);
    return critical_system(h, r);
}

using GaussMatrix = std::vector<std::vector<GaussRat>>;

/// k × d matrix of x_j ∂P_i/∂x_j at a torus point.
inline GaussMatrix log_derivative_matrix(const LaurentSystem& sys, const std::vector<GaussRat>& point) {
    sys.validate();
    if (sys.mode() != CoefficientMode::Exact) throw InputError("log_derivative_matrix needs exact coefficients");
    for (const auto& x : point)
        if (x.is_zero()) throw InputError("point has a zero coordinate");
    GaussMatrix m;
    for (const auto& P : sys.polys) {
        std::vector<GaussRat> row;
        for (std::size_t j = 0; j < sys.torus_dim(); ++j) row.push_back(P.theta(j)(point));
        m.push_back(std::move(row));
    }
    return m;
}

inline std::size_t rank(GaussMatrix m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m.front().size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c].is_zero()) continue;
            GaussRat f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace vanish
