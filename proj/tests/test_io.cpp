#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>

#include "rpr/io.hpp"
#include "rpr/svg.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;
using rpr::GaussianRational;
using rpr::ordered_json;
using rpr::ProblemError;
using rpr::Rational;

namespace {

const fs::path kData = RPR_DATA_DIR;

ordered_json example1_json()
{
    std::ifstream in(kData / "example1.json");
    return ordered_json::parse(in);
}

std::string field_of(const ordered_json& j)
{
    try {
        rpr::problem_from_json(j);
    } catch (const ProblemError& e) {
        return e.field();
    }
    return {};
}

}  // namespace

TEST_CASE("parse_problem examples")
{
    auto p = rpr::parse_problem(kData / "example1.json");
    CHECK(p.s_b == Rational(7, 2));
    CHECK(p.d_ac == GaussianRational(Rational(0), Rational(8)));
    CHECK(p == rpr::reference_geometry(Rational(2), Rational(7, 2), Rational(5, 2)));
    CHECK(rpr::parse_problem(kData / "example2.json") ==
          rpr::reference_geometry(Rational(7, 2), Rational(6), Rational(15, 2)));

    ordered_json j = example1_json();
    j["strokes"]["s_a"] = "0";
    CHECK_THROWS_WITH_AS(rpr::problem_from_json(j), "strokes.s_a: lengths must be positive", ProblemError);
}

TEST_CASE("problem file errors are field-named")
{
    ordered_json j = example1_json();
    j["geometry"].erase("l_ac");
    CHECK(field_of(j) == "geometry.l_ac");

    j = example1_json();
    j.erase("strokes");
    CHECK(field_of(j) == "strokes");

    j = example1_json();
    j["strokes"]["s_b"] = "3.5";
    CHECK(field_of(j) == "strokes.s_b");

    j = example1_json();
    j["strokes"]["s_b"] = 3.5;
    CHECK(field_of(j) == "strokes.s_b");

    j = example1_json();
    j["strokes"]["s_c"] = "1/0";
    CHECK(field_of(j) == "strokes.s_c");

    j = example1_json();
    j["geometry"]["cis_beta"] = {{"re", "1"}, {"im", "1"}};
    CHECK(field_of(j) == "geometry.cis_beta");

    j = example1_json();
    j["geometry"]["d_ab"] = {{"re", "6"}, {"imag", "0"}};
    CHECK(field_of(j) == "geometry.d_ab.imag");

    j = example1_json();
    j["geometry"]["d_ac"] = {{"im", "x"}};
    CHECK(field_of(j) == "geometry.d_ac.im");

    CHECK_THROWS_AS(rpr::parse_problem(kData / "does_not_exist.json"), ProblemError);

    fs::path bad = fs::temp_directory_path() / "rpr_bad_problem.json";
    std::ofstream(bad) << "{ not json";
    CHECK_THROWS_AS(rpr::parse_problem(bad), ProblemError);
    fs::remove(bad);
}

TEST_CASE("gaussian json forms")
{
    CHECK(rpr::gaussian_from_json(ordered_json{{"im", "8"}}, "x") == GaussianRational(Rational(0), Rational(8)));
    CHECK(rpr::gaussian_from_json(ordered_json{{"re", "-3/5"}}, "x") == GaussianRational(Rational(-3, 5)));
    CHECK(rpr::gaussian_from_json(ordered_json("7/2"), "x") == GaussianRational(Rational(7, 2)));
    CHECK(rpr::gaussian_from_json(ordered_json(6), "x") == GaussianRational(Rational(6)));
    CHECK(rpr::rational_from_json(ordered_json(-4), "x") == Rational(-4));
    CHECK_THROWS_AS(rpr::gaussian_from_json(ordered_json::array(), "x"), ProblemError);
    CHECK(rpr::gaussian_to_json(GaussianRational(Rational(1, 2), Rational(-3))).dump() == R"({"re":"1/2","im":"-3"})");
}

TEST_CASE("problem round trip")
{
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<long> pos(1, 500);
    const std::array<GaussianRational, 4> betas = {GaussianRational::i(), GaussianRational(Rational(-1)),
                                                   GaussianRational(Rational(3, 5), Rational(-4, 5)),
                                                   GaussianRational(Rational(5, 13), Rational(12, 13))};
    for (int k = 0; k < 100; ++k) {
        rpr::ManipulatorProblem p;
        p.l_ab = Rational(pos(rng), pos(rng));
        p.l_ac = Rational(pos(rng), pos(rng));
        p.d_ab = testing::random_nonzero_gaussian(rng, 50);
        do p.d_ac = testing::random_nonzero_gaussian(rng, 50);
        while (p.d_ac == p.d_ab);
        p.cis_beta = betas[static_cast<std::size_t>(k % 4)];
        p.s_a = Rational(pos(rng), pos(rng));
        p.s_b = Rational(pos(rng), pos(rng));
        p.s_c = Rational(pos(rng), pos(rng));
        ordered_json j = rpr::problem_to_json(p);
        CHECK(rpr::problem_from_json(ordered_json::parse(j.dump())) == p);
    }
}

TEST_CASE("report json layout")
{
    auto problem = rpr::parse_problem(kData / "example1.json");
    auto report = rpr::solve_posture(problem);
    rpr::ReportOptions ro;
    ordered_json j = rpr::report_to_json(report, ro);
    CHECK_FALSE(j.contains("timestamp"));
    CHECK_FALSE(j.contains("basis"));
    CHECK_FALSE(j["diagnostics"].contains("timings_ms"));
    CHECK(j["eliminant"]["text"] == "1,-213/50,165857/25600,-213/50,1");
    CHECK(j["eliminant"]["degree"] == 4);
    CHECK(j["eliminant"]["coefficients"][2]["re"] == "165857/25600");
    CHECK(j["eliminant_self_reciprocal"] == true);
    CHECK(j["counts"]["tuples"] == 4);
    CHECK(j["counts"]["physical"] == 2);
    CHECK(j["postures"].size() == 2);
    CHECK(j["tuples"][0]["coords"].contains("CCAL"));
    CHECK(j["ideal"][0] == "2*CA - 7/2*CB + 3*AL - 6");
    CHECK(rpr::problem_from_json(j["problem"]) == problem);

    ro.emit_basis = true;
    ro.include_timings = true;
    ro.timestamp = "2026-01-01T00:00:00Z";
    ordered_json full = rpr::report_to_json(report, ro);
    CHECK(full["basis"].size() == 8);
    CHECK(full["basis"][7] == "CCAL^4 - 213/50*CCAL^3 + 165857/25600*CCAL^2 - 213/50*CCAL + 1");
    CHECK(full["diagnostics"]["timings_ms"].contains("groebner"));
    CHECK(full["timestamp"] == "2026-01-01T00:00:00Z");

    CHECK(rpr::report_to_json(report).dump() == rpr::report_to_json(rpr::solve_posture(problem)).dump());
}

TEST_CASE("utc timestamp format")
{
    std::string ts = rpr::utc_timestamp();
    CHECK(ts.size() == 20);
    CHECK(ts[4] == '-');
    CHECK(ts[10] == 'T');
    CHECK(ts.back() == 'Z');
}

TEST_CASE("posture svg")
{
    auto problem = rpr::parse_problem(kData / "example2.json");
    auto report = rpr::solve_posture(problem);
    REQUIRE(report.postures.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        std::string svg = rpr::render_posture_svg(problem, report.tuples[report.posture_tuple[k]], report.postures[k]);
        CHECK(testing::xml_structure_error(svg) == "");
        CHECK(svg.find("<svg") != std::string::npos);
        CHECK(svg.find("id=\"platform\"") != std::string::npos);
        CHECK(svg.find("id=\"legend\"") != std::string::npos);
    }

    auto bent = report.tuples[report.posture_tuple[0]];
    bent.coords[rpr::index(rpr::Var::CB)] *= std::polar(1.0, 0.01);
    CHECK_THROWS_AS(rpr::render_posture_svg(problem, bent, report.postures[0]), rpr::SvgError);
}

TEST_CASE("xml checker rejects malformed documents")
{
    CHECK(testing::xml_structure_error("<svg><g></svg>") != "");
    CHECK(testing::xml_structure_error("<svg/><svg/>") != "");
    CHECK(testing::xml_structure_error("<html></html>") != "");
    CHECK(testing::xml_structure_error("<?xml version=\"1.0\"?>\n<svg><g/></svg>\n") == "");
}
