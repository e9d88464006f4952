#pragma once
// Dense univariate and bivariate polynomials over an exact field K (Rat or
// GaussRat), with the gcd / resultant / interpolation tools used for
// elimination in at most two variables.

#include "vanish/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace vanish {

template <class K>
inline bool is_zero_k(const K& x) {
    return x == K{};
}

template <class K>
struct UPoly {
    std::vector<K> c;  // c[i] multiplies t^i; no trailing zeros

    UPoly() = default;
    explicit UPoly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }
    static UPoly constant(const K& a) { return UPoly(std::vector<K>{a}); }
    static UPoly monomial(const K& a, std::size_t deg) {
        std::vector<K> v(deg + 1);
        v[deg] = a;
        return UPoly(std::move(v));
    }

    void trim() {
        while (!c.empty() && is_zero_k(c.back())) c.pop_back();
    }
    [[nodiscard]] bool is_zero() const { return c.empty(); }
    [[nodiscard]] int degree() const { return static_cast<int>(c.size()) - 1; }
    [[nodiscard]] const K& lead() const { return c.back(); }
    [[nodiscard]] K coeff(std::size_t i) const { return i < c.size() ? c[i] : K{}; }

    K operator()(const K& t) const {
        K acc{};
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    UPoly& operator+=(const UPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size());
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    UPoly& operator-=(const UPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size());
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<K> r(a.c.size() + b.c.size() - 1);
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (is_zero_k(a.c[i])) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
        }
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const K& s, UPoly a) {
        for (auto& x : a.c) x *= s;
        a.trim();
        return a;
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c == b.c; }
};

template <class K>
std::pair<UPoly<K>, UPoly<K>> divmod(UPoly<K> a, const UPoly<K>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly<K>{}, std::move(a)};
    std::vector<K> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const K inv = K(1) / b.lead();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const auto shift = static_cast<std::size_t>(a.degree() - b.degree());
        K f = a.lead() * inv;
        q[shift] = f;
        for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i + shift] -= f * b.c[i];
        a.c.pop_back();
        a.trim();
    }
    return {UPoly<K>(std::move(q)), std::move(a)};
}

template <class K>
UPoly<K> monic(UPoly<K> a) {
    if (a.is_zero()) return a;
    const K inv = K(1) / a.lead();
    return inv * std::move(a);
}

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        auto r = divmod(std::move(a), b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

template <class K>
UPoly<K> derivative(const UPoly<K>& a) {
    if (a.degree() < 1) return {};
    std::vector<K> d(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) d[i - 1] = K(static_cast<long>(i)) * a.c[i];
    return UPoly<K>(std::move(d));
}

template <class K>
UPoly<K> squarefree_part(const UPoly<K>& a) {
    if (a.degree() < 1) return monic(a);
    return monic(divmod(a, gcd(a, derivative(a))).first);
}

/// Number of distinct roots in the algebraic closure.
template <class K>
int distinct_roots(const UPoly<K>& a) {
    if (a.is_zero()) throw std::domain_error("distinct_roots of the zero polynomial");
    return std::max(0, squarefree_part(a).degree());
}

/// Euclidean resultant over the field K.
template <class K>
K resultant(UPoly<K> a, UPoly<K> b) {
    if (a.is_zero() || b.is_zero()) return K{};
    K acc(1);
    while (true) {
        const int m = a.degree();
        const int n = b.degree();
        if (n == 0) {
            K p(1);
            for (int i = 0; i < m; ++i) p *= b.lead();
            return acc * p;
        }
        if (m == 0) {
            K p(1);
            for (int i = 0; i < n; ++i) p *= a.lead();
            return acc * p;
        }
        auto r = divmod(a, b).second;
        if (r.is_zero()) return K{};
        // Res(a, b) = (-1)^{mn} lc(b)^{m - deg r} Res(b, r)
        if ((m % 2 == 1) && (n % 2 == 1)) acc = -acc;
        for (int i = 0; i < m - r.degree(); ++i) acc *= b.lead();
        a = std::move(b);
        b = std::move(r);
    }
}

/// Newton interpolation through (xs[i], ys[i]).
template <class K>
UPoly<K> interpolate(const std::vector<K>& xs, const std::vector<K>& ys) {
    const std::size_t n = xs.size();
    std::vector<K> dd = ys;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    UPoly<K> acc;
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * UPoly<K>(std::vector<K>{-xs[i], K(1)}) + UPoly<K>::constant(dd[i]);
    }
    return acc;
}

// ---------------------------------------------------------------------------

template <class K>
struct BPoly {
    std::vector<std::vector<K>> c;  // c[i][j] multiplies x^i y^j

    BPoly() = default;

    [[nodiscard]] K coeff(std::size_t i, std::size_t j) const {
        return (i < c.size() && j < c[i].size()) ? c[i][j] : K{};
    }
    void add_term(std::size_t i, std::size_t j, const K& a) {
        if (i >= c.size()) c.resize(i + 1);
        if (j >= c[i].size()) c[i].resize(j + 1);
        c[i][j] += a;
    }
    void trim() {
        for (auto& row : c)
            while (!row.empty() && is_zero_k(row.back())) row.pop_back();
        while (!c.empty() && c.back().empty()) c.pop_back();
    }
    [[nodiscard]] bool is_zero() const {
        for (const auto& row : c)
            for (const auto& a : row)
                if (!is_zero_k(a)) return false;
        return true;
    }
    [[nodiscard]] int total_degree() const {
        int d = -1;
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c[i].size(); ++j)
                if (!is_zero_k(c[i][j])) d = std::max(d, static_cast<int>(i + j));
        return d;
    }
    [[nodiscard]] bool is_constant() const { return total_degree() <= 0; }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < c[i].size(); ++j)
                if (!is_zero_k(c[i][j])) f(i, j, c[i][j]);
    }

    /// Divide by the largest monomial factor x^a y^b.
    [[nodiscard]] BPoly cleared() const {
        std::size_t mi = SIZE_MAX, mj = SIZE_MAX;
        for_each([&](std::size_t i, std::size_t j, const K&) {
            mi = std::min(mi, i);
            mj = std::min(mj, j);
        });
        if (mi == SIZE_MAX) return {};
        BPoly r;
        for_each([&](std::size_t i, std::size_t j, const K& a) { r.add_term(i - mi, j - mj, a); });
        return r;
    }

    K operator()(const K& x, const K& y) const {
        K acc{};
        for (std::size_t i = c.size(); i-- > 0;) {
            K row{};
            for (std::size_t j = c[i].size(); j-- > 0;) row = row * y + c[i][j];
            acc = acc * x + row;
        }
        return acc;
    }

    friend BPoly operator+(BPoly a, const BPoly& b) {
        b.for_each([&](std::size_t i, std::size_t j, const K& v) { a.add_term(i, j, v); });
        a.trim();
        return a;
    }
    friend BPoly operator-(BPoly a, const BPoly& b) {
        b.for_each([&](std::size_t i, std::size_t j, const K& v) { a.add_term(i, j, -v); });
        a.trim();
        return a;
    }
    friend BPoly operator*(const BPoly& a, const BPoly& b) {
        BPoly r;
        a.for_each([&](std::size_t i, std::size_t j, const K& u) {
            b.for_each([&](std::size_t k, std::size_t l, const K& v) { r.add_term(i + k, j + l, u * v); });
        });
        r.trim();
        return r;
    }
    friend BPoly operator*(const K& s, BPoly a) {
        for (auto& row : a.c)
            for (auto& v : row) v *= s;
        a.trim();
        return a;
    }
    friend bool operator==(BPoly a, BPoly b) {
        a.trim();
        b.trim();
        return a.c == b.c;
    }

    /// x ∂/∂x (var 0) or y ∂/∂y (var 1).
    [[nodiscard]] BPoly theta(int var) const {
        BPoly r;
        for_each([&](std::size_t i, std::size_t j, const K& a) {
            auto e = static_cast<long>(var == 0 ? i : j);
            if (e != 0) r.add_term(i, j, K(e) * a);
        });
        r.trim();
        return r;
    }
    /// Ordinary partial derivative.
    [[nodiscard]] BPoly partial(int var) const {
        BPoly r;
        for_each([&](std::size_t i, std::size_t j, const K& a) {
            if (var == 0 && i > 0) r.add_term(i - 1, j, K(static_cast<long>(i)) * a);
            if (var == 1 && j > 0) r.add_term(i, j - 1, K(static_cast<long>(j)) * a);
        });
        r.trim();
        return r;
    }

    /// F(x, y0) as a polynomial in x.
    [[nodiscard]] UPoly<K> at_y(const K& y0) const {
        std::vector<K> v(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            K row{};
            for (std::size_t j = c[i].size(); j-- > 0;) row = row * y0 + c[i][j];
            v[i] = row;
        }
        return UPoly<K>(std::move(v));
    }
    /// F(x0, y) as a polynomial in y.
    [[nodiscard]] UPoly<K> at_x(const K& x0) const {
        std::vector<K> v;
        K p(1);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i].size() > v.size()) v.resize(c[i].size());
            for (std::size_t j = 0; j < c[i].size(); ++j) v[j] += p * c[i][j];
            p *= x0;
        }
        return UPoly<K>(std::move(v));
    }
    /// F(u0 - λ y, y) as a polynomial in y.
    [[nodiscard]] UPoly<K> sheared(const K& u0, const K& lambda) const {
        UPoly<K> base(std::vector<K>{u0, -lambda});
        UPoly<K> power = UPoly<K>::constant(K(1));
        UPoly<K> acc;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i > 0) power = power * base;
            std::vector<K> row = c[i];
            acc += power * UPoly<K>(std::move(row));
        }
        return acc;
    }
    /// F(x + a, y + b).
    [[nodiscard]] BPoly translated(const K& a, const K& b) const {
        BPoly r;
        const UPoly<K> xa(std::vector<K>{a, K(1)});
        const UPoly<K> yb(std::vector<K>{b, K(1)});
        std::vector<UPoly<K>> xp{UPoly<K>::constant(K(1))}, yp{UPoly<K>::constant(K(1))};
        for_each([&](std::size_t i, std::size_t j, const K& v) {
            while (xp.size() <= i) xp.push_back(xp.back() * xa);
            while (yp.size() <= j) yp.push_back(yp.back() * yb);
            for (std::size_t p = 0; p < xp[i].c.size(); ++p)
                for (std::size_t q = 0; q < yp[j].c.size(); ++q) r.add_term(p, q, v * xp[i].c[p] * yp[j].c[q]);
        });
        r.trim();
        return r;
    }
};

}  // namespace vanish
