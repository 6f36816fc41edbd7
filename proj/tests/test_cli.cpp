#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kData = RPR_DATA_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = rpr::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name)
{
    fs::path p = fs::temp_directory_path() / ("rpr_cli_test_" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

fs::path write_file(const fs::path& dir, const std::string& name, const std::string& body)
{
    fs::path p = dir / name;
    std::ofstream(p) << body;
    return p;
}

}  // namespace

TEST_CASE("usage errors")
{
    Run none = run({});
    CHECK(none.code == rpr::cli::kUsage);
    Run missing = run({"solve"});
    CHECK(missing.code == rpr::cli::kUsage);
    CHECK(missing.err.find("--input") != std::string::npos);
    CHECK(run({"bogus"}).code == rpr::cli::kUsage);
    CHECK(run({"solve", "--input", (kData / "example1.json").string(), "--tol-root", "-1"}).code ==
          rpr::cli::kUsage);
    Run help = run({"--help"});
    CHECK(help.code == rpr::cli::kOk);
    CHECK(help.out.find("solve") != std::string::npos);
}

TEST_CASE("solve writes report and svgs")
{
    fs::path dir = scratch("solve");
    Run r = run({"solve", "--input", (kData / "example1.json").string(), "--output", (dir / "r.json").string(),
                 "--svg-dir", (dir / "svg").string(), "--no-timestamp"});
    REQUIRE(r.code == rpr::cli::kOk);
    auto j = nlohmann::json::parse(slurp(dir / "r.json"));
    CHECK(j["counts"]["physical"] == 2);
    CHECK_FALSE(j.contains("timestamp"));
    CHECK(fs::exists(dir / "svg" / "posture_1.svg"));
    CHECK(fs::exists(dir / "svg" / "posture_2.svg"));
    CHECK_FALSE(fs::exists(dir / "svg" / "posture_3.svg"));
    CHECK(testing::xml_structure_error(slurp(dir / "svg" / "posture_1.svg")) == "");

    Run stamped = run({"solve", "--input", (kData / "example1.json").string(), "--emit-basis", "--timings"});
    REQUIRE(stamped.code == rpr::cli::kOk);
    auto s = nlohmann::json::parse(stamped.out);
    CHECK(s.contains("timestamp"));
    CHECK(s["basis"].size() == 8);
    CHECK(s["diagnostics"].contains("timings_ms"));
    fs::remove_all(dir);
}

TEST_CASE("several inputs go to an output directory")
{
    fs::path dir = scratch("multi");
    Run r = run({"solve", "--input", (kData / "example1.json").string(), "--input",
                 (kData / "example2.json").string(), "--output", (dir / "out").string(), "--svg-dir",
                 (dir / "svg").string(), "--no-timestamp"});
    REQUIRE(r.code == rpr::cli::kOk);
    CHECK(nlohmann::json::parse(slurp(dir / "out" / "example1.json"))["counts"]["physical"] == 2);
    CHECK(nlohmann::json::parse(slurp(dir / "out" / "example2.json"))["counts"]["physical"] == 4);
    CHECK(fs::exists(dir / "svg" / "example2" / "posture_4.svg"));

    Run no_out = run({"solve", "--input", (kData / "example1.json").string(), "--input",
                      (kData / "example2.json").string()});
    CHECK(no_out.code == rpr::cli::kUsage);
    fs::remove_all(dir);
}

TEST_CASE("problem and solver failures")
{
    fs::path dir = scratch("fail");
    fs::path bad = write_file(dir, "bad.json", R"({"geometry": {}, "strokes": {}})");
    Run r = run({"solve", "--input", bad.string()});
    CHECK(r.code == rpr::cli::kUsage);
    CHECK(r.err.find("geometry.l_ab: missing key") != std::string::npos);

    Run cap = run({"solve", "--input", (kData / "example1.json").string(), "--max-pairs", "2"});
    CHECK(cap.code == rpr::cli::kSolver);
    CHECK(cap.err.find("solver error") != std::string::npos);

    Run far = run({"solve", "--input", (kData / "unreachable.json").string(), "--no-timestamp"});
    CHECK(far.code == rpr::cli::kOk);
    CHECK(nlohmann::json::parse(far.out)["counts"]["physical"] == 0);
    fs::remove_all(dir);
}

TEST_CASE("gb subcommand")
{
    fs::path dir = scratch("gb");
    Run one = run({"gb", "--input", write_file(dir, "ca.txt", "CA\n").string()});
    CHECK(one.code == rpr::cli::kOk);
    CHECK(one.out == "CA\n");

    Run two = run({"gb", "--input", write_file(dir, "xy.txt", "# x^2-1 and xy-1\nCA^2 - 1\n\nCA*CB - 1\n").string()});
    CHECK(two.code == rpr::cli::kOk);
    CHECK(two.out == "CA - CB\nCB^2 - 1\n");

    Run ex = run({"gb", "--input", (kData / "example1_generators.txt").string()});
    CHECK(ex.code == rpr::cli::kOk);
    CHECK(ex.out.find("CCAL^4 - 213/50*CCAL^3 + 165857/25600*CCAL^2 - 213/50*CCAL + 1\n") != std::string::npos);
    CHECK(std::count(ex.out.begin(), ex.out.end(), '\n') == 8);

    Run bad = run({"gb", "--input", write_file(dir, "bad.txt", "CA\nCA + FOO\n").string()});
    CHECK(bad.code == rpr::cli::kUsage);
    CHECK(bad.err.find("bad.txt:2:") != std::string::npos);

    CHECK(run({"gb", "--input", (dir / "missing.txt").string()}).code == rpr::cli::kUsage);
    CHECK(run({"gb", "--input", write_file(dir, "empty.txt", "# nothing\n").string()}).code == rpr::cli::kUsage);
    fs::remove_all(dir);
}
