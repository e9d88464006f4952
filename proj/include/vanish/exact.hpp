#pragma once
// Exact scalars: arbitrary precision integers, rationals and Gaussian
// rationals, plus the lattice-vector helpers every other header uses.

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vanish {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;
using IntVec = std::vector<Int>;

/// Raised for precondition violations that the caller could have avoided
/// (zero vectors, dimension mismatches, non-facet inputs, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ZeroVectorError : public InputError {
public:
    ZeroVectorError() : InputError("zero vector has no primitive direction") {}
};

inline Int numer(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denom(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denom(r) == 1; }

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// Fractional part in [0, 1).
inline Rat frac(const Rat& r) {
    Int n = numer(r), d = denom(r);
    Int f = floor_div(n, d);
    return r - Rat(f);
}

// "p/q", or "p" when q = 1.
inline std::string to_string(const Rat& r) {
    if (denom(r) == 1) return numer(r).str();
    return numer(r).str() + "/" + denom(r).str();
}

inline Rat parse_rat(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
            s.end());
    if (s.empty()) throw InputError("empty rational literal");
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        return std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(),
                           [](unsigned char ch) { return std::isdigit(ch); });
    };
    auto strip_plus = [](std::string t) {
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        return t;
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid_int(s)) throw InputError("malformed rational literal '" + s + "'");
        return Rat(Int(strip_plus(s)));
    }
    std::string p = s.substr(0, slash), q = s.substr(slash + 1);
    if (!valid_int(p) || !valid_int(q)) throw InputError("malformed rational literal '" + s + "'");
    Int den(strip_plus(q));
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    return Rat(Int(strip_plus(p)), den);
}

/// Element of Q(i). Parameters c_j live here so that every integrality
/// test is decidable.
struct GaussRat {
    Rat re;
    Rat im;

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}  // NOLINT: implicit widening from Q
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    GaussRat(long v) : re(v) {}  // NOLINT
    GaussRat(int v) : re(v) {}   // NOLINT

    [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
    [[nodiscard]] bool is_real() const { return im == 0; }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }
    friend bool operator<(const GaussRat& a, const GaussRat& b) {
        return a.re != b.re ? a.re < b.re : a.im < b.im;
    }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        if (im == 0 && o.im == 0) {
            re *= o.re;
            return *this;
        }
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
        if (im == 0 && o.im == 0) {
            re /= o.re;
            return *this;
        }
        Rat n = o.re * o.re + o.im * o.im;
        Rat r = (re * o.re + im * o.im) / n;
        Rat i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }

    friend std::ostream& operator<<(std::ostream& os, const GaussRat& z) {
        os << to_string(z.re);
        if (z.im != 0) os << (z.im > 0 ? "+" : "-") << to_string(abs(z.im)) << "i";
        return os;
    }
};

/// True iff z is a rational integer (zero imaginary part, denominator 1).
inline bool is_integer(const GaussRat& z) { return z.im == 0 && is_integer(z.re); }

inline std::string to_string(const GaussRat& z) {
    std::string s = to_string(z.re);
    if (z.im != 0) s += (z.im > 0 ? "+" : "-") + to_string(abs(z.im)) + "i";
    return s;
}

// ---------------------------------------------------------------------------
// Lattice vectors

inline Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw InputError("dot product of vectors with different dimensions");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline GaussRat dot(const IntVec& a, const std::vector<GaussRat>& b) {
    if (a.size() != b.size()) throw InputError("dot product of vectors with different dimensions");
    GaussRat s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        s += GaussRat(Rat(a[i])) * b[i];
    }
    return s;
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw InputError("vector sum with different dimensions");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw InputError("vector difference with different dimensions");
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec scale(const IntVec& a, const Int& s) {
    IntVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

inline IntVec negate(const IntVec& a) { return scale(a, Int(-1)); }

inline bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline Int content(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) g = gcd(g, abs(x));
    return g;
}

/// v / gcd(|v_i|). Direction and sign are preserved.
inline IntVec primitive_vector(const IntVec& v) {
    Int g = content(v);
    if (g == 0) throw ZeroVectorError();
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

inline bool is_primitive(const IntVec& v) { return content(v) == 1; }

inline IntVec make_vec(std::initializer_list<long> xs) {
    IntVec v;
    v.reserve(xs.size());
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline IntVec zero_vec(std::size_t d) { return IntVec(d, Int(0)); }

inline IntVec unit_vec(std::size_t d, std::size_t i) {
    IntVec v(d, Int(0));
    v.at(i) = 1;
    return v;
}

inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].str();
    }
    return s + ")";
}

}  // namespace vanish
