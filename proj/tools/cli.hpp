#pragma once
// Command-line front end: one JSON document in, one JSON report out.

#include "vanish/io.hpp"
#include "vanish/volume.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace vanish::cli {

using io::Json;

enum Exit : int { kOk = 0, kHypothesisFailed = 1, kInputError = 2, kUndecided = 3 };

inline constexpr const char* kVersion = "0.1.0";

struct Options {
    std::string input = "-";
    std::uint64_t seed = 1;
    std::size_t trials = 10;
    std::string theorem = "auto";
    std::string format = "json";
    std::string level = "weak";
    std::string method = "auto";
    bool oracle = false;
    bool timing = false;
};

/// What a subcommand hands back: the echoed input, the result, a summary and
/// an exit code.
struct Outcome {
    Json input;
    Json result;
    std::vector<std::string> summary;
    int code = kOk;
};

inline int exit_for(Status s) {
    switch (s) {
        case Status::Pass:
        case Status::AssumedGeneric: return kOk;
        case Status::Fail: return kHypothesisFailed;
        case Status::Undecided: return kUndecided;
    }
    return kUndecided;
}

namespace detail {

inline std::vector<IntVec> points_of(const Json& j, const std::string& key = "points") {
    if (j.is_array()) return io::parse_matrix(j, "$");
    return io::parse_matrix(io::require(j, key.c_str(), ""), key);
}

inline Json matrix_input(const std::vector<IntVec>& pts) { return {{"points", io::to_json(pts)}}; }

inline std::string status_line(const std::string& what, Status s) { return what + ": " + to_string(s); }

inline Outcome cmd_hull(const Json& j, const Options&) {
    auto pts = points_of(j);
    auto P = hull(pts);
    Outcome o{matrix_input(pts), io::to_json(P), {}, kOk};
    o.summary.push_back("dim " + std::to_string(P.dim()) + ", " + std::to_string(P.vertices().size()) + " vertices, " +
                        std::to_string(P.facets().size()) + " facets");
    return o;
}

inline Outcome cmd_faces(const Json& j, const Options&) {
    auto pts = points_of(j);
    auto P = hull(pts);
    auto fs = faces(P);
    Json list = Json::array();
    std::vector<std::size_t> fvec(static_cast<std::size_t>(P.dim()) + 1, 0);
    for (const auto& f : fs) {
        list.push_back(io::to_json(f));
        ++fvec[static_cast<std::size_t>(f.dim)];
    }
    Outcome o{matrix_input(pts), {{"dim", P.dim()}, {"f_vector", fvec}, {"faces", list}}, {}, kOk};
    std::string s = "f-vector (";
    for (std::size_t i = 0; i < fvec.size(); ++i) s += (i ? ", " : "") + std::to_string(fvec[i]);
    o.summary.push_back(s + ")");
    return o;
}

inline Outcome cmd_fan(const Json& j, const Options&) {
    auto pts = points_of(j);
    auto P = hull(pts);
    auto fan = dual_fan(P);
    Json cones = Json::array();
    for (const auto& c : fan.cones) {
        Json cj{{"face", io::to_json(c.face.vertices)},
                {"face_dim", c.face.dim},
                {"dim", c.dim},
                {"rays", io::to_json(c.generators)}};
        if (!c.lineality.empty()) cj["lineality"] = io::to_json(c.lineality);
        cones.push_back(cj);
    }
    Outcome o{matrix_input(pts), {{"ambient_dim", fan.ambient_dim}, {"cones", cones}}, {}, kOk};
    o.summary.push_back(std::to_string(fan.cones.size()) + " cones");
    return o;
}

inline Outcome cmd_volume(const Json& j, const Options&) {
    auto pts = points_of(j);
    auto P = hull(pts);
    Outcome o{matrix_input(pts),
              {{"value", io::to_json(P.normalized_volume())},
               {"path", P.full_dimensional() ? "triangulation" : "lower-dimensional: zero"}},
              {},
              kOk};
    o.summary.push_back("Vol_Z = " + P.normalized_volume().str());
    return o;
}

inline Outcome cmd_mixed_volume(const Json& j, const Options& opt) {
    const auto& pj = io::require(j, "polytopes", "");
    if (!pj.is_array() || pj.empty()) throw io::field_error("polytopes", "expected a nonempty list of matrices");
    std::vector<LatticePolytope> Ps;
    Json echo = Json::array();
    std::size_t dim = 0;
    for (std::size_t i = 0; i < pj.size(); ++i) {
        auto pts = io::parse_matrix(pj[i], "polytopes[" + std::to_string(i) + "]", dim);
        dim = pts.front().size();
        echo.push_back(io::to_json(pts));
        Ps.push_back(hull(pts));
    }
    Json input{{"polytopes", echo}};
    MixedVolumeQuery q;
    if (auto it = j.find("counts"); it != j.end()) {
        if (!it->is_array() || it->size() != Ps.size()) throw io::field_error("counts", "expected one count per polytope");
        std::vector<unsigned> cs;
        for (std::size_t i = 0; i < it->size(); ++i) {
            auto c = io::parse_int((*it)[i], "counts[" + std::to_string(i) + "]");
            if (c < 0) throw io::field_error("counts[" + std::to_string(i) + "]", "must be nonnegative");
            cs.push_back(static_cast<unsigned>(c));
        }
        input["counts"] = cs;
        q = MixedVolumeQuery::compact(Ps, cs);
    } else {
        q = MixedVolumeQuery::compact(Ps, std::vector<unsigned>(Ps.size(), 1));
    }
    Int v = opt.oracle ? mixed_volume_oracle(q) : mixed_volume(q);
    Outcome o{input,
              {{"value", io::to_json(v)}, {"path", opt.oracle ? "dilation interpolation" : "inclusion-exclusion"}},
              {},
              kOk};
    o.summary.push_back("MV = " + v.str());
    return o;
}

inline Outcome cmd_nonresonance(const Json& j, const Options&) {
    auto f = io::parse_problem(j);
    auto v = check_nonresonance(f.supports, f.parameter_vector());
    Outcome o{io::to_json(f), io::to_json(v), {}, v.nonresonant ? kOk : kHypothesisFailed};
    o.summary.push_back(std::string(v.nonresonant ? "nonresonant" : "resonant") + " (" +
                        std::to_string(v.certificates.size()) + " facets, " +
                        std::to_string(v.failing_facets.size()) + " failing)");
    for (auto i : v.failing_facets)
        o.summary.push_back("  facet " + to_string(v.certificates[i].conormal) + ": pairing " +
                            to_string(v.certificates[i].pairing));
    return o;
}

inline Level parse_level(const std::string& s) {
    if (s == "weak") return Level::Weak;
    if (s == "strong") return Level::Strong;
    throw InputError("--level: expected weak or strong");
}

inline Outcome cmd_check_nondeg(const Json& j, const Options& opt) {
    auto f = io::parse_problem(j, false);
    auto r = check_level(f.system(), parse_level(opt.level), opt.seed);
    Outcome o{io::to_json(f), io::to_json(r), {}, exit_for(r.overall())};
    o.summary.push_back(detail::status_line(opt.level + " non-degeneracy", r.overall()));
    return o;
}

/// A single polynomial, given either as "polynomial" records or as a
/// problem file with k = 1.
inline std::pair<LaurentPoly, Json> single_polynomial(const Json& j, const char* key = "polynomial") {
    if (j.is_object() && j.contains(key)) {
        auto P = io::parse_poly(j[key], key);
        return {P, Json{{key, io::to_json(P)}}};
    }
    auto f = io::parse_problem(j, false);
    if (f.k != 1) throw io::field_error("k", "expected a single polynomial");
    return {f.system().polys.front(), io::to_json(f)};
}

inline Outcome cmd_singular_locus(const Json& j, const Options& opt) {
    auto [P, echo] = single_polynomial(j);
    auto r = singular_locus_hypersurface(P, opt.seed);
    Outcome o{echo, io::to_json(r), {}, r.decided ? kOk : kUndecided};
    if (!r.decided)
        o.summary.push_back("undecided: " + r.note);
    else if (!r.isolated)
        o.summary.push_back("singular locus is not isolated");
    else
        o.summary.push_back(std::to_string(r.count) + " singular point(s)" +
                            (r.milnor_total ? ", total Milnor number " + std::to_string(*r.milnor_total) : ""));
    return o;
}

inline Outcome cmd_milnor(const Json& j, const Options&) {
    auto [P, echo] = single_polynomial(j);
    auto point = io::parse_rat_list(io::require(j, "point", ""), "point");
    if (point.size() != P.ambient_dim()) throw io::field_error("point", "expected " + std::to_string(P.ambient_dim()) + " coordinates");
    echo["point"] = io::to_json(point);
    auto mu = milnor_number(P, point);
    Outcome o{echo, {{"mu", mu}}, {}, kOk};
    o.summary.push_back("mu = " + std::to_string(mu));
    return o;
}

inline Outcome cmd_spectrum(const Json& j, const Options& opt) {
    auto f = io::parse_poly(io::require(j, "f", ""), "f");
    Json echo{{"f", io::to_json(f)}};
    auto np = newton_polyhedron(f);
    Json result{{"polyhedron", io::to_json(np)}};
    EigenvalueSet es = eigenvalue_set(np);
    if (auto it = j.find("beta"); it != j.end()) {
        auto beta = io::parse_gauss(*it, "beta");
        echo["beta"] = io::to_json(beta);
        es = es.bind(beta);
    }
    result["eigenvalues"] = io::to_json(es);
    Outcome o;
    o.summary.push_back(std::to_string(np.facets.size()) + " compact facets, " + std::to_string(es.pairs.size()) +
                        " eigenvalue pairs");
    if (auto it = j.find("q"); it != j.end()) {
        if (!es.beta) throw io::field_error("beta", "required when q is given");
        auto q = io::parse_gauss(*it, "q");
        echo["q"] = io::to_json(q);
        const auto& nr = io::require(j, "nonresonant", "");
        if (!nr.is_boolean()) throw io::field_error("nonresonant", "expected a boolean");
        echo["nonresonant"] = nr.get<bool>();
        auto v = stalk_vanishing_check(f, nr.get<bool>(), q, *es.beta, opt.seed);
        result["member"] = contains(es, q);
        result["stalk_vanishing"] = io::to_json(v);
        o.code = exit_for(v.overall());
        o.summary.push_back(detail::status_line("stalk vanishing", v.overall()));
    }
    o.input = echo;
    o.result = result;
    return o;
}

inline Outcome cmd_lift(const Json& j, const Options&) {
    auto f = io::parse_problem(j, false);
    auto lifted = lift_system(f.system());
    Json polys = Json::array();
    for (const auto& p : lifted.polys) polys.push_back(io::to_json(p));
    Outcome o{io::to_json(f), {{"torus_dim", lifted.torus_dim()}, {"polynomials", polys}}, {}, kOk};
    o.summary.push_back(std::to_string(lifted.size()) + " lifted polynomial(s) on a torus of dimension " +
                        std::to_string(lifted.torus_dim()));
    return o;
}

inline Outcome cmd_critical_count(const Json& j, const Options& opt) {
    auto [h, echo] = single_polynomial(j, "h");
    Outcome o;
    if (auto it = j.find("a"); it != j.end()) {
        auto a = io::parse_rat_list(*it, "a");
        if (a.size() != h.ambient_dim()) throw io::field_error("a", "expected " + std::to_string(h.ambient_dim()) + " entries");
        echo["a"] = io::to_json(a);
        auto t = critical_count(h, a, opt.seed);
        auto NP = newton_polytope(h);
        Int vol = NP.full_dimensional() ? NP.normalized_volume() : Int(0);
        t.match = t.count && Int(*t.count) == vol;
        o.result = {{"volume", io::to_json(vol)}, {"trial", io::to_json(t)}};
        o.summary.push_back(t.count ? "count " + std::to_string(*t.count) + ", Vol_Z " + vol.str()
                                    : std::string("critical locus is not finite"));
        o.code = t.count ? kOk : kUndecided;
    } else {
        auto rep = verify_morse_count(h, opt.trials, opt.seed);
        Json trials = Json::array();
        for (const auto& t : rep.trials) trials.push_back(io::to_json(t));
        o.result = {{"volume", io::to_json(rep.volume)},
                    {"trials", trials},
                    {"matches", rep.matches},
                    {"match_rate", rep.match_rate()}};
        o.summary.push_back(std::to_string(rep.matches) + "/" + std::to_string(rep.trials.size()) +
                            " trials match Vol_Z = " + rep.volume.str());
    }
    o.input = echo;
    return o;
}

inline EulerMethod parse_method(const std::string& s) {
    for (auto m : {EulerMethod::Auto, EulerMethod::Bkk, EulerMethod::Critical, EulerMethod::Univariate})
        if (s == to_string(m)) return m;
    if (s == "critical") return EulerMethod::Critical;
    throw InputError("--method: expected auto, bkk, critical or univariate");
}

inline Outcome cmd_euler(const Json& j, const Options& opt) {
    auto f = io::parse_problem(j, false);
    auto r = euler_complement(f.system(), parse_method(opt.method), opt.seed);
    Outcome o{io::to_json(f), io::to_json(r), {}, r.chi_complement ? kOk : exit_for(r.status)};
    o.summary.push_back(r.chi_complement ? "chi(W) = " + r.chi_complement->str() + " by " + to_string(r.method)
                                         : "chi(W) undecided: " + r.note);
    return o;
}

inline std::string verdict_line(const TheoremVerdict& v) {
    std::string s = std::string(to_string(v.theorem)) + ": " + to_string(v.status());
    if (v.applicable) {
        s += v.conditional ? ", conditionally applicable" : ", applicable";
        if (v.concentration_degree) s += ", degree " + std::to_string(*v.concentration_degree);
        if (v.predicted_dimension) s += ", dim " + v.predicted_dimension->str() + " (" + v.dimension_source + ")";
    }
    if (v.euler_characteristic && v.theorem == TheoremId::BKK) s += ", chi " + v.euler_characteristic->str();
    return s;
}

inline Outcome cmd_predict(const Json& j, const Options& opt) {
    auto f = io::parse_problem(j);
    auto p = f.problem();
    Outcome o;
    o.input = io::to_json(f);
    TheoremVerdict chosen;
    std::string lower = opt.theorem;
    for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == "auto") {
        auto all = predict_all(p, opt.seed);
        chosen = all[select_verdict(all)];
        Json list = Json::array();
        for (const auto& v : all) {
            list.push_back(io::to_json(v));
            o.summary.push_back("  " + verdict_line(v));
        }
        o.result = {{"verdict", io::to_json(chosen)}, {"considered", list}};
    } else {
        chosen = predict(p, parse_theorem(opt.theorem), opt.seed);
        o.result = {{"verdict", io::to_json(chosen)}};
    }
    o.summary.insert(o.summary.begin(), verdict_line(chosen));
    o.code = exit_for(chosen.status());
    return o;
}

}  // namespace detail

/// Fixture checks with hand-derived answers.
inline Outcome selftest(const Options& opt) {
    struct Check {
        std::string name;
        std::function<bool()> run;
    };
    auto poly = [](std::size_t d, std::vector<std::pair<IntVec, long>> terms) {
        LaurentPoly p(d);
        for (const auto& [e, c] : terms) p.add_term(e, Coeff(c));
        return p;
    };
    auto v = [](std::initializer_list<long> xs) { return make_vec(xs); };
    const std::uint64_t seed = opt.seed;
    std::vector<Check> checks{
        {"mixed volume of simplex and square is 2",
         [&] {
             return mixed_volume({hull({v({0, 0}), v({1, 0}), v({0, 1})}),
                                  hull({v({0, 0}), v({1, 0}), v({0, 1}), v({1, 1})})}) == 2;
         }},
        {"1 + 2x + x^2 is weakly but not strongly non-degenerate",
         [&] {
             LaurentSystem s{{poly(1, {{v({0}), 1}, {v({1}), 2}, {v({2}), 1}})}};
             return check_weak(s, seed).overall() == Status::Pass && check_strong(s, seed).overall() == Status::Fail;
         }},
        {"node has Milnor number 1",
         [&] {
             auto node = poly(2, {{v({2, 0}), 1}, {v({1, 0}), -2}, {v({0, 2}), -1}, {v({0, 1}), 2}});
             return milnor_number(node, {Rat(1), Rat(1)}) == 1;
         }},
        {"cusp has Milnor number 2",
         [&] {
             // (x-1)^2 - (y-1)^3
             auto cusp = poly(2, {{v({2, 0}), 1}, {v({1, 0}), -2}, {v({0, 0}), 2}, {v({0, 3}), -1}, {v({0, 2}), 3},
                                  {v({0, 1}), -3}});
             return milnor_number(cusp, {Rat(1), Rat(1)}) == 2;
         }},
        {"y1^2 + y2^3 has eigenvalue pairs (3, 1) and (6, 2)",
         [&] {
             auto es = eigenvalue_set(newton_polyhedron(poly(2, {{v({2, 0}), 1}, {v({0, 3}), 1}})));
             return es.pairs == std::vector<EigenPair>{{3, 1}, {6, 2}};
         }},
        {"segment {0,1} with c = (1/2, 1/2) is resonant",
         [&] {
             return !check_nonresonance({{v({0}), v({1})}}, {{GaussRat(Rat(1, 2)), GaussRat(Rat(1, 2))}, Convention::Section3, 1})
                         .nonresonant;
         }},
        {"1 + 2x + x^2 with c = (1/3, 1/2) has degree 1 and dimension 1",
         [&] {
             Problem p;
             p.system.polys = {poly(1, {{v({0}), 1}, {v({1}), 2}, {v({2}), 1}})};
             p.parameters = {{GaussRat(Rat(1, 3)), GaussRat(Rat(1, 2))}, Convention::Section3, 1};
             auto all = predict_all(p, seed);
             const auto& w = all[select_verdict(all)];
             return w.applicable && w.concentration_degree == 1 && w.predicted_dimension == Int(1);
         }},
        {"unit square curve has chi = -2",
         [&] { return bkk_euler({hull({v({0, 0}), v({1, 0}), v({0, 1}), v({1, 1})})}, 2) == -2; }},
    };
    Outcome o;
    o.input = Json::object();
    Json list = Json::array();
    std::size_t failed = 0;
    for (const auto& c : checks) {
        bool ok = false;
        std::string error;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        failed += !ok;
        Json cj{{"name", c.name}, {"pass", ok}};
        if (!error.empty()) cj["error"] = error;
        list.push_back(cj);
        o.summary.push_back(std::string(ok ? "PASS " : "FAIL ") + c.name);
    }
    o.result = {{"checks", list}, {"failed", failed}};
    o.code = failed ? kHypothesisFailed : kOk;
    return o;
}

namespace detail {

inline Json read_input(const Options& opt, std::istream& in) {
    try {
        if (opt.input == "-") return Json::parse(in);
        std::ifstream file(opt.input);
        if (!file) throw InputError("cannot open " + opt.input);
        return Json::parse(file);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace detail

/// Runs the tool on args (without the program name).
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hypothesis checks and Betti number predictions for twisted cohomology of Laurent polynomial complements",
                 "vanish"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);
    Options opt;

    using Handler = std::function<Outcome(const Json&, const Options&)>;
    struct Entry {
        const char* name;
        const char* help;
        Handler handler;
    };
    const std::vector<Entry> entries{
        {"hull", "convex hull: vertices, facets, volume", detail::cmd_hull},
        {"faces", "face lattice", detail::cmd_faces},
        {"fan", "normal fan", detail::cmd_fan},
        {"volume", "normalized lattice volume", detail::cmd_volume},
        {"mixed-volume", "normalized mixed volume", detail::cmd_mixed_volume},
        {"nonresonance", "nonresonance of the parameter vector", detail::cmd_nonresonance},
        {"check-nondeg", "weak or strong non-degeneracy", detail::cmd_check_nondeg},
        {"singular-locus", "singular points and Milnor numbers of P = 0", detail::cmd_singular_locus},
        {"milnor", "Milnor number at a point", detail::cmd_milnor},
        {"spectrum", "Newton polyhedron and eigenvalue set at the origin", detail::cmd_spectrum},
        {"lift", "the lifted system t_i - P_i", detail::cmd_lift},
        {"critical-count", "critical points of h x^{-a} against Vol_Z(NP(h))", detail::cmd_critical_count},
        {"euler", "Euler characteristic of the complement", detail::cmd_euler},
        {"predict", "theorem hypotheses, concentration degree and dimension", detail::cmd_predict},
    };
    std::vector<std::pair<CLI::App*, const Entry*>> subs;
    auto common = [&](CLI::App* s, bool with_input) {
        if (with_input) s->add_option("input", opt.input, "problem JSON file, - for standard input");
        s->add_option("--seed", opt.seed, "seed for randomized steps");
        s->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        s->add_flag("--timing", opt.timing, "include elapsed time in the report");
    };
    for (const auto& e : entries) {
        auto* s = app.add_subcommand(e.name, e.help);
        common(s, true);
        subs.emplace_back(s, &e);
    }
    for (auto& [s, e] : subs) {
        const std::string name = e->name;
        if (name == "check-nondeg")
            s->add_option("--level", opt.level, "weak or strong")->check(CLI::IsMember({"weak", "strong"}));
        if (name == "critical-count") s->add_option("--trials", opt.trials, "number of random exponents");
        if (name == "predict") s->add_option("--theorem", opt.theorem, "auto or a theorem name");
        if (name == "euler") s->add_option("--method", opt.method, "auto, bkk, critical or univariate");
        if (name == "mixed-volume") s->add_flag("--oracle", opt.oracle, "use dilation interpolation");
    }
    auto* self = app.add_subcommand("selftest", "fixture checks");
    common(self, false);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string command;
    try {
        if (self->parsed()) {
            command = "selftest";
            o = selftest(opt);
        } else {
            for (auto& [s, e] : subs)
                if (s->parsed()) {
                    command = e->name;
                    o = e->handler(detail::read_input(opt, in), opt);
                }
        }
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const Json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    }
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (opt.format == "text") {
        for (const auto& line : o.summary) out << line << "\n";
    } else {
        Json report{{"tool", "vanish"}, {"version", kVersion}, {"command", command}, {"seed", opt.seed}};
        report["input"] = o.input;
        report["result"] = o.result;
        report["exit_code"] = o.code;
        if (opt.timing) report["timing_ms"] = ms;
        out << report.dump(2) << "\n";
        for (const auto& line : o.summary) err << line << "\n";
    }
    return o.code;
}

}  // namespace vanish::cli
