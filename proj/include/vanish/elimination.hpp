#pragma once
// Exact zero counting on the torus in one or two variables, rational point
// recovery, and local intersection multiplicities.
//
// Two-variable systems are sheared (x = u - λy) so every polynomial has a
// constant leading coefficient in y; Res_y then becomes a polynomial in u
// recovered by interpolation, and for a separating λ its distinct roots are
// in bijection with the common zeros.

#include "vanish/exact.hpp"
#include "vanish/poly.hpp"

#include <optional>
#include <random>
#include <set>
#include <vector>

namespace vanish {

struct ZeroCount {
    bool finite = true;
    std::size_t count = 0;  // distinct zeros in the torus when finite

    friend bool operator==(const ZeroCount&, const ZeroCount&) = default;
};

class NotSingularError : public InputError {
public:
    NotSingularError() : InputError("point is not a singular point of the hypersurface") {}
};

class NonIsolatedError : public InputError {
public:
    NonIsolatedError() : InputError("singular point is not isolated") {}
};

namespace detail {

template <class K>
UPoly<K> cleared(const UPoly<K>& p) {
    std::size_t k = 0;
    while (k < p.c.size() && is_zero_k(p.c[k])) ++k;
    return UPoly<K>(std::vector<K>(p.c.begin() + static_cast<std::ptrdiff_t>(k), p.c.end()));
}

// Coefficient of y^deg in F(u - λy, y), independent of u.
template <class K>
K sheared_lead(const BPoly<K>& F, const K& lambda) {
    const int d = F.total_degree();
    K acc{};
    F.for_each([&](std::size_t i, std::size_t j, const K& a) {
        if (static_cast<int>(i + j) != d) return;
        K p(1);
        for (std::size_t t = 0; t < i; ++t) p *= -lambda;
        acc += a * p;
    });
    return acc;
}

template <class K>
UPoly<K> shear_resultant(const BPoly<K>& F, const BPoly<K>& G, const K& lambda) {
    const auto D = static_cast<std::size_t>(F.total_degree() * G.total_degree());
    std::vector<K> xs, ys;
    xs.reserve(D + 1);
    ys.reserve(D + 1);
    for (std::size_t t = 0; t <= D; ++t) {
        K u(static_cast<long>(t));
        xs.push_back(u);
        ys.push_back(resultant(F.sheared(u, lambda), G.sheared(u, lambda)));
    }
    return interpolate(xs, ys);
}

// Polynomial whose roots are the u-values λy of common zeros with x = 0,
// times the one for y = 0.
template <class K>
UPoly<K> axis_polynomial(const std::vector<BPoly<K>>& Fs, const K& lambda) {
    UPoly<K> A, B;
    const K inv = K(1) / lambda;
    for (const auto& F : Fs) {
        A = gcd(A, F.at_y(K{}));
        UPoly<K> b = F.at_x(K{});
        K p(1);
        for (auto& c : b.c) {
            c *= p;
            p *= inv;
        }
        B = gcd(B, b);
    }
    return A * B;
}

template <class K>
K random_scalar(std::mt19937_64& rng, long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return K(dist(rng));
}

template <class K>
struct Elimination {
    std::vector<BPoly<K>> system;  // cleared, nonzero, at least two entries
    K lambda;
    std::vector<UPoly<K>> resultants;  // Res(G1, Gj) for j >= 2
    UPoly<K> eliminant;                // squarefree gcd of the resultants
    UPoly<K> torus_eliminant;          // eliminant with axis roots removed
};

// Elimination of the system G along the shear λ. Empty when some leading
// form vanishes after shearing; a zero resultant sets common_factor.
template <class K>
std::optional<Elimination<K>> eliminate_along(const std::vector<BPoly<K>>& G, const K& lambda, bool& common_factor) {
    common_factor = false;
    for (const auto& g : G)
        if (is_zero_k(sheared_lead(g, lambda))) return std::nullopt;
    Elimination<K> e;
    e.system = G;
    e.lambda = lambda;
    for (std::size_t j = 1; j < G.size(); ++j) {
        auto R = shear_resultant(G[0], G[j], lambda);
        if (R.is_zero()) {
            common_factor = true;
            return std::nullopt;
        }
        e.resultants.push_back(std::move(R));
    }
    UPoly<K> g;
    for (const auto& R : e.resultants) g = gcd(g, R);
    e.eliminant = squarefree_part(g);
    auto shared = gcd(e.eliminant, axis_polynomial(G, lambda));
    e.torus_eliminant = shared.degree() > 0 ? divmod(e.eliminant, shared).first : e.eliminant;
    return e;
}

// Prepares the shear elimination. Returns nullopt when some pair keeps a
// common factor for every random combination (positive-dimensional zeros).
template <class K>
std::optional<Elimination<K>> eliminate(const std::vector<BPoly<K>>& Fs, std::mt19937_64& rng) {
    const std::size_t m = Fs.size();
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<BPoly<K>> G;
        if (m == 2 && attempt == 0) {
            G = Fs;
        } else {
            BPoly<K> g1;
            for (const auto& F : Fs) g1 = g1 + random_scalar<K>(rng, 1, 997) * F;
            g1 = g1.cleared();
            if (g1.is_zero()) continue;
            G.push_back(std::move(g1));
            for (std::size_t j = 1; j < m; ++j) G.push_back(Fs[j]);
        }
        if (G.front().is_constant()) {
            // a monomial combination: no common zeros on the torus
            Elimination<K> none;
            none.system = G;
            none.lambda = K(1);
            none.eliminant = UPoly<K>::constant(K(1));
            none.torus_eliminant = none.eliminant;
            return none;
        }
        bool common_factor = false;
        std::optional<Elimination<K>> best;
        int best_sep = -1;
        int tried = 0;
        for (int draw = 0; draw < 40 && tried < 3; ++draw) {
            auto e = eliminate_along(G, random_scalar<K>(rng, 1, 1 << 20), common_factor);
            if (common_factor) break;
            if (!e) continue;
            ++tried;
            UPoly<K> product = UPoly<K>::constant(K(1));
            for (const auto& R : e->resultants) product = product * squarefree_part(R);
            const int sep = distinct_roots(product);
            if (sep > best_sep) {
                best_sep = sep;
                best = std::move(e);
            }
        }
        if (common_factor) {
            if (m == 2) return std::nullopt;
            continue;
        }
        if (best) return best;
    }
    return std::nullopt;
}

}  // namespace detail

/// Distinct common zeros in C* of univariate Laurent polynomials (given
/// as polynomials; monomial factors are ignored).
template <class K>
ZeroCount torus_zeros(const std::vector<UPoly<K>>& polys) {
    UPoly<K> g;
    bool any = false;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        any = true;
        g = gcd(g, detail::cleared(p));
    }
    if (!any) return {false, 0};
    return {true, static_cast<std::size_t>(std::max(0, squarefree_part(g).degree()))};
}

/// Distinct common zeros in (C*)^2.
template <class K>
ZeroCount torus_zeros(const std::vector<BPoly<K>>& polys, std::mt19937_64& rng) {
    std::vector<BPoly<K>> Fs;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        auto q = p.cleared();
        if (q.is_constant()) return {true, 0};
        Fs.push_back(std::move(q));
    }
    if (Fs.size() < 2) return {false, 0};
    auto e = detail::eliminate(Fs, rng);
    if (!e) return {false, 0};
    return {true, static_cast<std::size_t>(std::max(0, e->torus_eliminant.degree()))};
}

// ---------------------------------------------------------------------------
// Rational roots and points

/// Rational roots of a polynomial over Q, or nullopt when the candidate
/// search would need to factor integers that are too large.
inline std::optional<std::vector<Rat>> rational_roots(const UPoly<Rat>& p) {
    std::vector<Rat> roots;
    if (p.is_zero()) return std::nullopt;
    auto f = squarefree_part(p);
    if (f.degree() >= 1 && f.c[0] == 0) {
        roots.emplace_back(0);
        f = detail::cleared(f);
    }
    if (f.degree() < 1) return roots;
    if (f.degree() == 1) {
        roots.push_back(-f.c[0] / f.c[1]);
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    Int l = 1;
    for (const auto& c : f.c) l = boost::multiprecision::lcm(l, denom(c));
    std::vector<Int> a;
    for (const auto& c : f.c) a.push_back(numer(c * Rat(l)));
    auto divisors = [](Int v) -> std::optional<std::vector<Int>> {
        v = abs(v);
        if (v > Int("1000000000000")) return std::nullopt;
        std::vector<std::pair<Int, unsigned>> fac;
        for (Int q = 2; q * q <= v; ++q) {
            unsigned e = 0;
            while (v % q == 0) {
                v /= q;
                ++e;
            }
            if (e) fac.emplace_back(q, e);
        }
        if (v > 1) fac.emplace_back(v, 1);
        std::vector<Int> ds{1};
        for (const auto& [q, e] : fac) {
            std::size_t n = ds.size();
            Int pw = 1;
            for (unsigned k = 1; k <= e; ++k) {
                pw *= q;
                for (std::size_t i = 0; i < n; ++i) ds.push_back(ds[i] * pw);
            }
        }
        return ds;
    };
    auto ps = divisors(a.front());
    auto qs = divisors(a.back());
    if (!ps || !qs) return std::nullopt;
    Rat bound = 0;
    for (const auto& c : f.c) bound = std::max(bound, Rat(abs(c / f.lead())));
    bound += 1;
    std::set<Rat> found;
    for (const auto& den : *qs)
        for (const auto& num : *ps) {
            Rat r(num, den);
            if (r > bound) continue;
            for (int s : {1, -1})
                if (f(Rat(s) * r) == 0) found.insert(Rat(s) * r);
        }
    roots.insert(roots.end(), found.begin(), found.end());
    std::sort(roots.begin(), roots.end());
    return roots;
}

template <class K>
struct TorusPoints {
    ZeroCount total;
    std::vector<std::pair<Rat, Rat>> rational;  // exactly recovered points
    std::size_t residual = 0;                   // zeros not recovered exactly
};

/// Common torus zeros of a two-variable system with rational coefficients,
/// with the rational ones listed.
inline TorusPoints<Rat> torus_points(const std::vector<BPoly<Rat>>& polys, std::mt19937_64& rng) {
    TorusPoints<Rat> out;
    std::vector<BPoly<Rat>> Fs;
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        auto q = p.cleared();
        if (q.is_constant()) {
            out.total = {true, 0};
            return out;
        }
        Fs.push_back(std::move(q));
    }
    if (Fs.size() < 2) {
        out.total = {false, 0};
        return out;
    }
    auto e = detail::eliminate(Fs, rng);
    if (!e) {
        out.total = {false, 0};
        return out;
    }
    out.total = {true, static_cast<std::size_t>(std::max(0, e->torus_eliminant.degree()))};
    // a small separating shear keeps the eliminant's coefficients small
    for (long l = 1; l <= 64; ++l) {
        bool common = false;
        auto small = detail::eliminate_along(e->system, Rat(l), common);
        if (small && small->torus_eliminant.degree() == e->torus_eliminant.degree()) {
            e = std::move(small);
            break;
        }
    }
    auto us = rational_roots(e->torus_eliminant);
    if (us) {
        for (const auto& u : *us) {
            UPoly<Rat> g;
            for (const auto& F : Fs) g = gcd(g, F.sheared(u, e->lambda));
            auto ys = rational_roots(g);
            if (!ys) continue;
            for (const auto& y : *ys) {
                Rat x = u - e->lambda * y;
                if (x == 0 || y == 0) continue;
                bool all = std::all_of(Fs.begin(), Fs.end(), [&](const BPoly<Rat>& F) { return F(x, y) == 0; });
                if (all) out.rational.emplace_back(x, y);
            }
        }
    }
    std::sort(out.rational.begin(), out.rational.end());
    out.rational.erase(std::unique(out.rational.begin(), out.rational.end()), out.rational.end());
    out.residual = out.total.count - std::min(out.total.count, out.rational.size());
    return out;
}

// ---------------------------------------------------------------------------
// Local intersection multiplicity (Fulton's algorithm)

/// I_0(F, G) at the origin; nullopt when F and G share a component there.
template <class K>
std::optional<std::size_t> intersection_multiplicity(BPoly<K> F, BPoly<K> G) {
    std::size_t acc = 0;
    while (true) {
        F.trim();
        G.trim();
        if (F.is_zero() || G.is_zero()) return std::nullopt;
        if (!is_zero_k(F.coeff(0, 0)) || !is_zero_k(G.coeff(0, 0))) return acc;
        UPoly<K> f0 = F.at_y(K{});
        UPoly<K> g0 = G.at_y(K{});
        if (f0.is_zero() && g0.is_zero()) return std::nullopt;
        if (f0.is_zero()) {
            std::swap(F, G);
            std::swap(f0, g0);
        }
        if (g0.is_zero()) {
            // G = y·H: I(F, G) = I(F, y) + I(F, H), and I(F, y) = ord_x F(x, 0)
            std::size_t ord = 0;
            while (is_zero_k(f0.c[ord])) ++ord;
            acc += ord;
            BPoly<K> H;
            G.for_each([&](std::size_t i, std::size_t j, const K& a) { H.add_term(i, j - 1, a); });
            G = std::move(H);
            continue;
        }
        if (f0.degree() > g0.degree()) {
            std::swap(F, G);
            std::swap(f0, g0);
        }
        const auto shift = static_cast<std::size_t>(g0.degree() - f0.degree());
        BPoly<K> xF;
        F.for_each([&](std::size_t i, std::size_t j, const K& a) { xF.add_term(i + shift, j, a); });
        G = f0.lead() * G - g0.lead() * xF;
    }
}

/// Milnor number of {F = 0} at (a, b): I_p(∂_x F, ∂_y F).
template <class K>
std::size_t milnor_number(const BPoly<K>& F, const K& a, const K& b) {
    auto Fx = F.partial(0), Fy = F.partial(1);
    if (!is_zero_k(F(a, b)) || !is_zero_k(Fx(a, b)) || !is_zero_k(Fy(a, b))) throw NotSingularError();
    auto mu = intersection_multiplicity(Fx.translated(a, b), Fy.translated(a, b));
    if (!mu) throw NonIsolatedError();
    return *mu;
}

/// Milnor number of a root of a univariate polynomial: multiplicity - 1.
template <class K>
std::size_t milnor_number(const UPoly<K>& f, const K& a) {
    if (!is_zero_k(f(a)) || !is_zero_k(derivative(f)(a))) throw NotSingularError();
    std::size_t mult = 0;
    UPoly<K> g = f;
    const UPoly<K> lin(std::vector<K>{-a, K(1)});
    while (!g.is_zero() && is_zero_k(g(a))) {
        g = divmod(g, lin).first;
        ++mult;
    }
    return mult - 1;
}

}  // namespace vanish
