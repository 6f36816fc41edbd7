#pragma once

// JSON problem files and solution reports.

#include <filesystem>
#include <string>

#include "json.hpp"

#include "rpr/exact.hpp"
#include "rpr/kinematics.hpp"

namespace rpr {

using ordered_json = nlohmann::ordered_json;

/// Rationals are strings "p/q" (JSON integers are also accepted, floats are not).
Rational rational_from_json(const ordered_json& j, const std::string& field);
ordered_json rational_to_json(const Rational& r);

/// {"re": "p/q", "im": "r/s"}; a missing part is zero.
GaussianRational gaussian_from_json(const ordered_json& j, const std::string& field);
ordered_json gaussian_to_json(const GaussianRational& z);

/// Field-level errors are reported as ProblemError.
ManipulatorProblem problem_from_json(const ordered_json& j);
ordered_json problem_to_json(const ManipulatorProblem& p);
ManipulatorProblem parse_problem(const std::filesystem::path& path);

struct ReportOptions {
    bool emit_basis = false;
    bool include_timings = false;
    /// Written verbatim into the "timestamp" field; omitted when empty.
    std::string timestamp;
};

ordered_json report_to_json(const SolutionReport& report, const ReportOptions& opts = {});

/// Current UTC time as ISO 8601.
std::string utc_timestamp();

}  // namespace rpr
