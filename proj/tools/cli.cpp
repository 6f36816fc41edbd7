#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>

#include "CLI11.hpp"

#include "rpr/groebner.hpp"
#include "rpr/io.hpp"
#include "rpr/kinematics.hpp"
#include "rpr/svg.hpp"

namespace fs = std::filesystem;

namespace rpr::cli {

namespace {

struct SolveArgs {
    std::vector<std::string> inputs;
    std::string output;
    std::string svg_dir;
    double tol_root = 1e-12;
    double tol_physical = 1e-6;
    bool emit_basis = false;
    bool timings = false;
    bool no_timestamp = false;
    std::size_t max_pairs = BuchbergerOptions{}.max_pair_reductions;
};

struct GbArgs {
    std::string input;
    std::size_t max_pairs = BuchbergerOptions{}.max_pair_reductions;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolveOutcome {
    int code = kOk;
    std::string message;
};

SolveOutcome solve_one(const SolveArgs& a, const fs::path& input, const fs::path& report_path,
                       const fs::path& svg_dir, std::ostream* out)
{
    ManipulatorProblem problem;
    try {
        problem = parse_problem(input);
    } catch (const std::exception& e) {
        return {kUsage, input.string() + ": " + e.what()};
    }

    SolveOptions opts;
    opts.roots.tol = a.tol_root;
    opts.tol_physical = a.tol_physical;
    opts.groebner.max_pair_reductions = a.max_pairs;

    SolutionReport report;
    try {
        report = solve_posture(problem, opts);
    } catch (const std::exception& e) {
        return {kSolver, input.string() + ": solver error: " + e.what()};
    }

    ReportOptions ro;
    ro.emit_basis = a.emit_basis;
    ro.include_timings = a.timings;
    if (!a.no_timestamp) ro.timestamp = utc_timestamp();
    const std::string json = report_to_json(report, ro).dump(2) + "\n";

    if (report_path.empty()) {
        *out << json;
    } else {
        if (report_path.has_parent_path()) fs::create_directories(report_path.parent_path());
        std::ofstream file(report_path, std::ios::binary);
        if (!file) return {kUsage, "cannot write " + report_path.string()};
        file << json;
    }

    if (!svg_dir.empty()) {
        fs::create_directories(svg_dir);
        for (std::size_t k = 0; k < report.postures.size(); ++k) {
            const auto& tuple = report.tuples[report.posture_tuple[k]];
            std::string svg;
            try {
                svg = render_posture_svg(problem, tuple, report.postures[k]);
            } catch (const std::exception& e) {
                return {kSolver, input.string() + ": " + e.what()};
            }
            std::ofstream file(svg_dir / ("posture_" + std::to_string(k + 1) + ".svg"), std::ios::binary);
            file << svg;
        }
    }
    return {kOk, input.string() + ": " + std::to_string(report.postures.size()) + " physical posture(s) of " +
                     std::to_string(report.tuples.size())};
}

int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err)
{
    if (a.inputs.empty()) throw UsageError("--input is required");
    if (!(a.tol_root > 0) || !(a.tol_physical > 0)) throw UsageError("tolerances must be positive");

    std::vector<std::future<SolveOutcome>> jobs;
    const bool many = a.inputs.size() > 1;
    for (const auto& in : a.inputs) {
        fs::path input(in);
        fs::path report = a.output.empty() ? fs::path() : fs::path(a.output);
        fs::path svg = a.svg_dir.empty() ? fs::path() : fs::path(a.svg_dir);
        if (many) {
            if (a.output.empty()) throw UsageError("--output directory is required with several inputs");
            report = report / (input.stem().string() + ".json");
            if (!svg.empty()) svg = svg / input.stem();
        }
        jobs.push_back(std::async(std::launch::async, solve_one, std::cref(a), input, report, svg, &out));
    }
    int code = kOk;
    for (auto& j : jobs) {
        SolveOutcome o = j.get();
        err << o.message << "\n";
        code = std::max(code, o.code);
    }
    return code;
}

int run_gb(const GbArgs& a, std::ostream& out, std::ostream& err)
{
    std::ifstream in(a.input);
    if (!in) {
        err << "cannot open " << a.input << "\n";
        return kUsage;
    }
    std::vector<MultiPoly> gens;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            gens.push_back(MultiPoly::parse(line));
        } catch (const std::exception& e) {
            err << a.input << ":" << lineno << ": " << e.what() << "\n";
            return kUsage;
        }
    }
    if (std::all_of(gens.begin(), gens.end(), [](const MultiPoly& p) { return p.is_zero(); })) {
        err << a.input << ": no nonzero polynomials\n";
        return kUsage;
    }
    try {
        BuchbergerOptions opts;
        opts.max_pair_reductions = a.max_pairs;
        GroebnerBasis g = buchberger(gens, opts);
        for (const auto& p : g.elements()) out << p.to_string() << "\n";
    } catch (const std::exception& e) {
        err << "solver error: " << e.what() << "\n";
        return kSolver;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact forward position analysis of 3RPR planar parallel manipulators", "rpr"};
    app.require_subcommand(1);

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Solve the forward position problem of a problem file");
    solve->add_option("--input", sa.inputs, "Problem JSON file (repeatable)")->required();
    solve->add_option("--output", sa.output, "Report JSON path (directory when several inputs)");
    solve->add_option("--svg-dir", sa.svg_dir, "Write posture_<k>.svg per physical posture");
    solve->add_option("--tol-root", sa.tol_root, "Root residual tolerance")->capture_default_str();
    solve->add_option("--tol-physical", sa.tol_physical, "Physicality tolerance")->capture_default_str();
    solve->add_option("--max-pairs", sa.max_pairs, "Buchberger pair reduction limit")->capture_default_str();
    solve->add_flag("--emit-basis", sa.emit_basis, "Include the Groebner basis in the report");
    solve->add_flag("--timings", sa.timings, "Include wall-clock timings in the report");
    solve->add_flag("--no-timestamp", sa.no_timestamp, "Omit the timestamp field");

    GbArgs ga;
    auto* gb = app.add_subcommand("gb", "Print the reduced lex Groebner basis of a polynomial file");
    gb->add_option("--input", ga.input, "One polynomial per line")->required();
    gb->add_option("--max-pairs", ga.max_pairs, "Buchberger pair reduction limit")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n";
        const CLI::App* sub = solve->parsed() ? solve : gb->parsed() ? gb : &app;
        err << sub->help();
        return kUsage;
    }

    try {
        if (solve->parsed()) return run_solve(sa, out, err);
        return run_gb(ga, out, err);
    } catch (const UsageError& e) {
        err << e.what() << "\n\n" << (solve->parsed() ? solve->help() : gb->help());
        return kUsage;
    }
}

}  // namespace rpr::cli
