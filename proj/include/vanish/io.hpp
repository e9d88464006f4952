#pragma once
// JSON encoding of the library types and the versioned problem file.

#include "vanish/exact.hpp"
#include "vanish/laurent.hpp"
#include "vanish/nondegeneracy.hpp"
#include "vanish/nonresonance.hpp"
#include "vanish/polytope.hpp"
#include "vanish/spectrum.hpp"
#include "vanish/theorems.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace vanish::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchema = 1;

/// Input error carrying the path of the offending field.
inline InputError field_error(const std::string& path, const std::string& what) {
    return InputError(path + ": " + what);
}

// ---------------------------------------------------------------------------
// Scalars

inline Json to_json(const Int& x) {
    if (x >= Int(std::numeric_limits<long long>::min()) && x <= Int(std::numeric_limits<long long>::max()))
        return static_cast<long long>(x);
    return x.str();
}

inline Json to_json(const Rat& r) { return to_string(r); }

inline Json to_json(const GaussRat& z) { return Json::array({to_string(z.re), to_string(z.im)}); }

inline Json to_json(const IntVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Json to_json(const std::vector<IntVec>& m) {
    Json a = Json::array();
    for (const auto& v : m) a.push_back(to_json(v));
    return a;
}

inline Json to_json(const std::vector<Rat>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Int parse_int(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        auto r = parse_rat(j.get<std::string>());
        if (!is_integer(r)) throw field_error(path, "expected an integer");
        return numer(r);
    }
    throw field_error(path, "expected an integer");
}

inline Rat parse_rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const InputError& e) {
            throw field_error(path, e.what());
        }
    }
    throw field_error(path, "expected a rational string \"p/q\"");
}

/// [re, im], a rational string, or an integer.
inline GaussRat parse_gauss(const Json& j, const std::string& path) {
    if (j.is_array()) {
        if (j.size() != 2) throw field_error(path, "expected [re, im]");
        return {parse_rational(j[0], path + "[0]"), parse_rational(j[1], path + "[1]")};
    }
    return GaussRat(parse_rational(j, path));
}

inline IntVec parse_intvec(const Json& j, const std::string& path) {
    if (!j.is_array()) throw field_error(path, "expected an integer array");
    IntVec v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_int(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

/// Integer matrix with rows of equal length; dim, when nonzero, is enforced.
inline std::vector<IntVec> parse_matrix(const Json& j, const std::string& path, std::size_t dim = 0) {
    if (!j.is_array() || j.empty()) throw field_error(path, "expected a nonempty integer matrix");
    std::vector<IntVec> m;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto row_path = path + "[" + std::to_string(i) + "]";
        m.push_back(parse_intvec(j[i], row_path));
        const std::size_t want = dim ? dim : m.front().size();
        if (m.back().size() != want)
            throw field_error(row_path, "row has length " + std::to_string(m.back().size()) + ", expected " +
                                            std::to_string(want));
    }
    if (m.front().empty()) throw field_error(path, "rows must be nonempty");
    return m;
}

inline std::vector<Rat> parse_rat_list(const Json& j, const std::string& path) {
    if (!j.is_array()) throw field_error(path, "expected a list of rationals");
    std::vector<Rat> v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(parse_rational(j[i], path + "[" + std::to_string(i) + "]"));
    return v;
}

inline const Json& require(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw field_error(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw field_error(path.empty() ? key : path + "." + key, "missing");
    return *it;
}

inline std::string join_path(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

// ---------------------------------------------------------------------------
// Polynomials

inline Json to_json(const Coeff& c) { return c.generic ? Json("generic") : to_json(c.value); }

inline Coeff parse_coeff(const Json& j, const std::string& path) {
    if (j.is_string() && j.get<std::string>() == "generic") return Coeff::make_generic();
    return {parse_gauss(j, path)};
}

/// List of {exponent, coeff} records.
inline Json to_json(const LaurentPoly& p) {
    Json a = Json::array();
    for (const auto& [e, c] : p.terms()) a.push_back({{"exponent", to_json(e)}, {"coeff", to_json(c)}});
    return a;
}

inline LaurentPoly parse_poly(const Json& j, const std::string& path, std::size_t dim = 0) {
    if (!j.is_array() || j.empty()) throw field_error(path, "expected a nonempty list of {exponent, coeff} records");
    std::vector<std::pair<IntVec, Coeff>> terms;
    for (std::size_t i = 0; i < j.size(); ++i) {
        auto p = path + "[" + std::to_string(i) + "]";
        auto e = parse_intvec(require(j[i], "exponent", p), p + ".exponent");
        if (dim == 0) dim = e.size();
        if (e.size() != dim) throw field_error(p + ".exponent", "expected length " + std::to_string(dim));
        terms.emplace_back(std::move(e), parse_coeff(require(j[i], "coeff", p), p + ".coeff"));
    }
    LaurentPoly out(dim);
    for (const auto& [e, c] : terms) out.add_term(e, c);
    if (out.is_zero()) throw field_error(path, "polynomial is zero");
    return out;
}

// ---------------------------------------------------------------------------
// Problem file

/// The problem as written, kept verbatim for echoing.
struct ProblemFile {
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<std::vector<IntVec>> supports;
    std::optional<std::vector<std::vector<Coeff>>> coefficients;  // absent: generic
    std::optional<std::vector<GaussRat>> parameters;
    Convention convention = Convention::Section3;
    std::optional<std::vector<MilnorDatum>> milnor;

    friend bool operator==(const ProblemFile& a, const ProblemFile& b) {
        auto same_milnor = [](const auto& x, const auto& y) {
            if (x.has_value() != y.has_value()) return false;
            if (!x) return true;
            if (x->size() != y->size()) return false;
            for (std::size_t i = 0; i < x->size(); ++i)
                if ((*x)[i].point != (*y)[i].point || (*x)[i].mu != (*y)[i].mu) return false;
            return true;
        };
        return a.n == b.n && a.k == b.k && a.supports == b.supports && a.coefficients == b.coefficients &&
               a.parameters == b.parameters && a.convention == b.convention && same_milnor(a.milnor, b.milnor);
    }

    [[nodiscard]] LaurentSystem system() const {
        LaurentSystem sys;
        for (std::size_t i = 0; i < k; ++i) {
            LaurentPoly P(n - k);
            for (std::size_t t = 0; t < supports[i].size(); ++t)
                P.add_term(supports[i][t], coefficients ? (*coefficients)[i][t] : Coeff::make_generic());
            if (P.is_zero()) throw field_error("coefficients[" + std::to_string(i) + "]", "polynomial is zero");
            sys.polys.push_back(std::move(P));
        }
        return sys;
    }

    [[nodiscard]] ParameterVector parameter_vector() const {
        if (!parameters) throw field_error("parameters", "missing");
        return {*parameters, convention, k};
    }

    [[nodiscard]] Problem problem() const {
        Problem p;
        p.system = system();
        p.parameters = parameter_vector();
        p.milnor = milnor;
        return p;
    }
};

inline Json to_json(const ProblemFile& f) {
    Json j;
    j["schema"] = kSchema;
    j["n"] = f.n;
    j["k"] = f.k;
    Json s = Json::array();
    for (const auto& B : f.supports) s.push_back(to_json(B));
    j["supports"] = s;
    if (f.coefficients) {
        Json cs = Json::array();
        for (const auto& row : *f.coefficients) {
            Json r = Json::array();
            for (const auto& c : row) r.push_back(to_json(c));
            cs.push_back(r);
        }
        j["coefficients"] = cs;
    }
    if (f.parameters) {
        Json ps = Json::array();
        for (const auto& c : *f.parameters) ps.push_back(to_json(c));
        j["parameters"] = ps;
    }
    j["convention"] = to_string(f.convention);
    if (f.milnor) {
        Json ms = Json::array();
        for (const auto& m : *f.milnor) ms.push_back({{"point", to_json(m.point)}, {"mu", m.mu}});
        j["milnor"] = ms;
    }
    return j;
}

/// Parses a problem file; parameters may be optional for commands that
/// ignore them.
inline ProblemFile parse_problem(const Json& j, bool need_parameters = true) {
    if (!j.is_object()) throw field_error("$", "expected a JSON object");
    if (auto it = j.find("schema"); it != j.end()) {
        if (!it->is_number_integer() || it->get<int>() != kSchema)
            throw field_error("schema", "unsupported schema, expected " + std::to_string(kSchema));
    }
    ProblemFile f;
    const auto& sj = require(j, "supports", "");
    if (!sj.is_array() || sj.empty()) throw field_error("supports", "expected a nonempty list of matrices");
    f.k = j.contains("k") ? static_cast<std::size_t>(parse_int(j["k"], "k")) : sj.size();
    if (f.k != sj.size())
        throw field_error("supports", "has " + std::to_string(sj.size()) + " matrices but k = " + std::to_string(f.k));
    std::size_t d = 0;
    if (j.contains("n")) {
        auto n = parse_int(j["n"], "n");
        if (n <= Int(f.k)) throw field_error("n", "must exceed k");
        f.n = static_cast<std::size_t>(n);
        d = f.n - f.k;
    }
    for (std::size_t i = 0; i < sj.size(); ++i) {
        f.supports.push_back(parse_matrix(sj[i], "supports[" + std::to_string(i) + "]", d));
        if (d == 0) d = f.supports.back().front().size();
    }
    if (f.n == 0) f.n = d + f.k;
    for (std::size_t i = 0; i < f.k; ++i) {
        auto sorted = f.supports[i];
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw field_error("supports[" + std::to_string(i) + "]", "repeated exponent");
    }
    if (auto it = j.find("coefficients"); it != j.end() && !(it->is_string() && it->get<std::string>() == "generic")) {
        if (!it->is_array() || it->size() != f.k) throw field_error("coefficients", "expected k lists");
        std::vector<std::vector<Coeff>> cs;
        for (std::size_t i = 0; i < f.k; ++i) {
            const auto path = "coefficients[" + std::to_string(i) + "]";
            const auto& row = (*it)[i];
            std::vector<Coeff> r;
            if (row.is_string() && row.get<std::string>() == "generic") {
                r.assign(f.supports[i].size(), Coeff::make_generic());
            } else {
                if (!row.is_array() || row.size() != f.supports[i].size())
                    throw field_error(path, "length must match supports[" + std::to_string(i) + "] (" +
                                                std::to_string(f.supports[i].size()) + ")");
                for (std::size_t t = 0; t < row.size(); ++t)
                    r.push_back(parse_coeff(row[t], path + "[" + std::to_string(t) + "]"));
            }
            cs.push_back(std::move(r));
        }
        f.coefficients = std::move(cs);
    }
    if (auto it = j.find("parameters"); it != j.end()) {
        if (!it->is_array() || it->size() != f.n)
            throw field_error("parameters", "expected n = " + std::to_string(f.n) + " entries");
        std::vector<GaussRat> c;
        for (std::size_t t = 0; t < it->size(); ++t)
            c.push_back(parse_gauss((*it)[t], "parameters[" + std::to_string(t) + "]"));
        f.parameters = std::move(c);
    } else if (need_parameters) {
        throw field_error("parameters", "missing");
    }
    if (auto it = j.find("convention"); it != j.end()) {
        if (!it->is_string()) throw field_error("convention", "expected \"section3\" or \"section5\"");
        try {
            f.convention = parse_convention(it->get<std::string>());
        } catch (const InputError& e) {
            throw field_error("convention", e.what());
        }
    }
    if (auto it = j.find("milnor"); it != j.end()) {
        if (!it->is_array()) throw field_error("milnor", "expected a list of {point, mu}");
        std::vector<MilnorDatum> ms;
        for (std::size_t t = 0; t < it->size(); ++t) {
            const auto path = "milnor[" + std::to_string(t) + "]";
            MilnorDatum m;
            m.point = parse_rat_list(require((*it)[t], "point", path), path + ".point");
            if (m.point.size() != d) throw field_error(path + ".point", "expected length " + std::to_string(d));
            auto mu = parse_int(require((*it)[t], "mu", path), path + ".mu");
            if (mu < 0) throw field_error(path + ".mu", "must be nonnegative");
            m.mu = static_cast<std::size_t>(mu);
            ms.push_back(std::move(m));
        }
        f.milnor = std::move(ms);
    }
    return f;
}

// ---------------------------------------------------------------------------
// Reports

inline Json to_json(const Face& g) {
    return {{"dim", g.dim}, {"vertices", to_json(g.vertices)}, {"witness", to_json(g.witness)}};
}

inline Json to_json(const LatticePolytope& P) {
    Json facets = Json::array();
    for (const auto& f : P.facets()) facets.push_back({{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
    Json j{{"ambient_dim", P.ambient_dim()},
           {"dim", P.dim()},
           {"vertices", to_json(P.vertices())},
           {"facets", facets},
           {"normalized_volume", to_json(P.normalized_volume())}};
    if (!P.full_dimensional()) j["lineality"] = to_json(P.lineality());
    return j;
}

inline Json to_json(const NonresonanceVerdict& v) {
    Json certs = Json::array();
    for (const auto& c : v.certificates) {
        Json cj{{"conormal", to_json(c.conormal)},
                {"generators", c.generator_ids},
                {"pairing", to_json(c.pairing)},
                {"resonant", c.resonant}};
        if (c.delta_facet) {
            const auto& df = *c.delta_facet;
            Json m = Json::array();
            for (const auto& x : df.m) m.push_back(to_json(x));
            cj["delta_facet"] = {{"vertices", to_json(df.face.vertices)},
                                 {"nu", to_json(df.nu)},
                                 {"m", m},
                                 {"m_gamma", to_json(df.m_gamma)}};
        }
        certs.push_back(cj);
    }
    return {{"nonresonant", v.nonresonant}, {"failing_facets", v.failing_facets}, {"certificates", certs}};
}

inline Json to_json(const NondegeneracyReport& r) {
    Json faces = Json::array();
    for (const auto& f : r.per_face) {
        std::vector<std::size_t> J;
        for (auto i : f.J) J.push_back(i + 1);
        Json fj{{"face", to_json(f.face.vertices)}, {"face_dim", f.face.dim}, {"J", J}, {"status", to_string(f.status)}};
        if (!f.witness.empty()) fj["witness"] = f.witness;
        faces.push_back(fj);
    }
    return {{"level", r.level == Level::Weak ? "weak" : "strong"}, {"status", to_string(r.overall())}, {"faces", faces}};
}

inline Json to_json(const SingularLocusReport& r) {
    Json j{{"decided", r.decided}, {"isolated", r.isolated}, {"count", r.count}};
    Json pts = Json::array();
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        Json p{{"point", to_json(r.points[i])}};
        if (r.milnor_numbers && i < r.milnor_numbers->size()) p["mu"] = (*r.milnor_numbers)[i];
        pts.push_back(p);
    }
    j["points"] = pts;
    j["irrational_points"] = r.residual;
    if (r.milnor_total) j["milnor_total"] = *r.milnor_total;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline Json to_json(const NewtonPolyhedron& np) {
    Json facets = Json::array();
    for (const auto& f : np.facets) {
        std::vector<std::size_t> I;
        for (auto i : f.I) I.push_back(i + 1);
        facets.push_back({{"I", I},
                          {"u", to_json(f.u)},
                          {"d", to_json(f.d)},
                          {"delta", to_json(f.delta)},
                          {"vertices", to_json(f.vertices)}});
    }
    return {{"dim", np.dim}, {"facets", facets}};
}

inline Json to_json(const EigenvalueSet& es) {
    Json pairs = Json::array();
    for (const auto& p : es.pairs) {
        Json pj{{"d", to_json(p.d)}, {"delta", to_json(p.delta)}};
        if (es.beta) pj["phase"] = to_json(es.phase(p));
        pairs.push_back(pj);
    }
    Json j{{"pairs", pairs}};
    if (es.beta) j["beta"] = to_json(*es.beta);
    return j;
}

inline Json to_json(const StalkVanishingVerdict& v) {
    Json legs = Json::array();
    for (const auto& l : v.legs) {
        Json lj{{"name", l.name}, {"status", to_string(l.status)}};
        if (!l.reason.empty()) lj["reason"] = l.reason;
        legs.push_back(lj);
    }
    return {{"status", to_string(v.overall())}, {"legs", legs}};
}

inline Json to_json(const EulerReport& r) {
    Json strata = Json::array();
    for (const auto& [J, chi] : r.chi_strata) {
        std::vector<std::size_t> ids;
        for (auto i : J) ids.push_back(i + 1);
        strata.push_back({{"J", ids}, {"chi", to_json(chi)}});
    }
    Json j{{"method", to_string(r.method)}, {"status", to_string(r.status)}};
    if (!strata.empty()) j["chi_strata"] = strata;
    j["chi_complement"] = r.chi_complement ? to_json(*r.chi_complement) : Json(nullptr);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

inline Json to_json(const TheoremVerdict& v) {
    Json hyps = Json::array();
    for (const auto& h : v.hypotheses) {
        Json hj{{"name", h.name}, {"status", to_string(h.status)}};
        if (!h.evidence.empty()) hj["evidence"] = h.evidence;
        hyps.push_back(hj);
    }
    Json j{{"theorem", to_string(v.theorem)},
           {"status", to_string(v.status())},
           {"applicable", v.applicable},
           {"conditional", v.conditional},
           {"hypotheses", hyps}};
    j["concentration_degree"] = v.concentration_degree ? Json(*v.concentration_degree) : Json(nullptr);
    j["predicted_dimension"] = v.predicted_dimension ? to_json(*v.predicted_dimension) : Json(nullptr);
    if (!v.dimension_source.empty()) j["dimension_source"] = v.dimension_source;
    if (!v.dimension_formula.empty()) j["dimension_formula"] = v.dimension_formula;
    if (v.euler_characteristic) j["euler_characteristic"] = to_json(*v.euler_characteristic);
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

inline Json to_json(const MorseTrial& t) {
    Json j{{"a", to_json(t.a)}};
    j["count"] = t.count ? Json(*t.count) : Json(nullptr);
    j["off_zero"] = t.off_zero ? Json(*t.off_zero) : Json(nullptr);
    j["match"] = t.match;
    return j;
}

}  // namespace vanish::io
