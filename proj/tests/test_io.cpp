#include "vanish/io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace vanish;
using io::Json;

namespace {

std::string error_of(const Json& j) {
    try {
        io::parse_problem(j);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

Json segment_problem() {
    return Json::parse(R"({"schema": 1, "n": 2, "k": 1, "supports": [[[0], [1], [2]]],
        "coefficients": [["1", "2", ["1", "0"]]], "parameters": [["1/3", "0"], "1/2"]})");
}

}  // namespace

TEST(Io, ScalarForms) {
    EXPECT_EQ(io::parse_gauss(Json("3/6"), "x"), GaussRat(Rat(1, 2)));
    EXPECT_EQ(io::parse_gauss(Json(-4), "x"), GaussRat(Rat(-4)));
    EXPECT_EQ(io::parse_gauss(Json::parse(R"(["1", "-2/3"])"), "x"), GaussRat(Rat(1), Rat(-2, 3)));
    EXPECT_EQ(io::to_json(GaussRat(Rat(1, 2), Rat(-1))), Json::parse(R"(["1/2", "-1"])"));
    EXPECT_THROW(io::parse_gauss(Json::parse("[1, 2, 3]"), "x"), InputError);
    EXPECT_THROW(io::parse_gauss(Json(0.5), "x"), InputError);
    EXPECT_THROW(io::parse_int(Json("1/2"), "x"), InputError);
    Int big = Int(1) << 80;
    EXPECT_EQ(io::parse_int(io::to_json(big), "x"), big);
}

TEST(Io, PolynomialRecords) {
    auto j = Json::parse(R"([{"exponent": [2, 0], "coeff": "1"}, {"exponent": [0, 3], "coeff": "generic"}])");
    auto p = io::parse_poly(j, "f");
    EXPECT_EQ(p.terms().size(), 2U);
    EXPECT_TRUE(p.is_generic());
    EXPECT_EQ(io::parse_poly(io::to_json(p), "f").terms(), p.terms());
    EXPECT_THROW(io::parse_poly(Json::parse(R"([{"exponent": [1], "coeff": "1"}, {"exponent": [1, 2], "coeff": "1"}])"), "f"),
                 InputError);
}

TEST(Io, ProblemFields) {
    auto f = io::parse_problem(segment_problem());
    EXPECT_EQ(f.n, 2U);
    EXPECT_EQ(f.k, 1U);
    auto p = f.problem();
    EXPECT_EQ(p.system.polys.front().terms().size(), 3U);
    EXPECT_EQ(p.parameters.c[0], GaussRat(Rat(1, 3)));
    EXPECT_EQ(p.parameters.c[1], GaussRat(Rat(1, 2)));

    auto generic = segment_problem();
    generic.erase("coefficients");
    EXPECT_TRUE(io::parse_problem(generic).system().polys.front().is_generic());
}

TEST(Io, ErrorsNameTheField) {
    auto j = segment_problem();
    j["supports"][0][1] = Json::parse("[1, 1]");
    EXPECT_NE(error_of(j).find("supports[0][1]"), std::string::npos);

    j = segment_problem();
    j["coefficients"][0].erase(0);
    EXPECT_NE(error_of(j).find("coefficients[0]"), std::string::npos);

    j = segment_problem();
    j["parameters"][1] = "x";
    EXPECT_NE(error_of(j).find("parameters[1]"), std::string::npos);

    j = segment_problem();
    j["parameters"].push_back("1");
    EXPECT_NE(error_of(j).find("parameters"), std::string::npos);

    j = segment_problem();
    j["schema"] = 2;
    EXPECT_NE(error_of(j).find("schema"), std::string::npos);

    j = segment_problem();
    j["convention"] = "section4";
    EXPECT_NE(error_of(j).find("convention"), std::string::npos);

    j = segment_problem();
    j["k"] = 2;
    EXPECT_NE(error_of(j).find("supports"), std::string::npos);

    j = segment_problem();
    j["supports"][0][2] = Json::parse("[0]");
    EXPECT_NE(error_of(j).find("repeated"), std::string::npos);

    j = segment_problem();
    j.erase("parameters");
    EXPECT_NE(error_of(j).find("parameters"), std::string::npos);
}

TEST(Io, RandomProblemsRoundTrip) {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> small(1, 2), coord(-3, 3), num(-9, 9), den(1, 5), flip(0, 3);
    for (int t = 0; t < 50; ++t) {
        io::ProblemFile f;
        f.k = static_cast<std::size_t>(small(rng));
        const std::size_t d = static_cast<std::size_t>(small(rng));
        f.n = d + f.k;
        for (std::size_t i = 0; i < f.k; ++i) {
            std::set<IntVec> pts;
            while (pts.size() < 3) {
                IntVec v;
                for (std::size_t j = 0; j < d; ++j) v.emplace_back(coord(rng));
                pts.insert(v);
            }
            f.supports.emplace_back(pts.begin(), pts.end());
        }
        if (flip(rng)) {
            std::vector<std::vector<Coeff>> cs;
            for (const auto& B : f.supports) {
                std::vector<Coeff> row;
                for (std::size_t s = 0; s < B.size(); ++s)
                    row.push_back(flip(rng) == 0 ? Coeff::make_generic()
                                                 : Coeff(GaussRat(Rat(num(rng), den(rng)), Rat(flip(rng) == 1 ? 1 : 0))));
                cs.push_back(row);
            }
            f.coefficients = cs;
        }
        std::vector<GaussRat> c;
        for (std::size_t j = 0; j < f.n; ++j) c.emplace_back(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
        f.parameters = c;
        f.convention = flip(rng) == 0 ? Convention::Section5 : Convention::Section3;
        if (flip(rng) == 0) f.milnor = std::vector<MilnorDatum>{{std::vector<Rat>(d, Rat(1, 2)), 3}};
        auto text = io::to_json(f).dump();
        EXPECT_EQ(io::parse_problem(Json::parse(text)), f) << text;
    }
}
