#include "rpr/io.hpp"

#include <chrono>
#include <ctime>
#include <fstream>

namespace rpr {

namespace {

const ordered_json& require(const ordered_json& j, const char* key, const std::string& prefix)
{
    if (!j.is_object()) throw ProblemError(prefix, "expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ProblemError(prefix.empty() ? key : prefix + "." + key, "missing key");
    return *it;
}

// Adding 0.0 folds -0.0 into 0.0.
ordered_json complex_to_json(ComplexFloat z) { return ordered_json::array({z.real() + 0.0, z.imag() + 0.0}); }

}  // namespace

Rational rational_from_json(const ordered_json& j, const std::string& field)
{
    try {
        if (j.is_string()) return Rational::parse(j.get<std::string>());
        if (j.is_number_integer()) return Rational(j.get<long>());
    } catch (const ParseError& e) {
        throw ProblemError(field, e.what());
    } catch (const ArithmeticError& e) {
        throw ProblemError(field, e.what());
    }
    throw ProblemError(field, "expected a rational string \"p/q\"");
}

ordered_json rational_to_json(const Rational& r) { return r.to_string(); }

GaussianRational gaussian_from_json(const ordered_json& j, const std::string& field)
{
    if (j.is_string() || j.is_number_integer()) return GaussianRational(rational_from_json(j, field));
    if (!j.is_object()) throw ProblemError(field, "expected {\"re\": ..., \"im\": ...}");
    for (const auto& [key, value] : j.items())
        if (key != "re" && key != "im") throw ProblemError(field + "." + key, "unexpected key");
    Rational re = j.contains("re") ? rational_from_json(j["re"], field + ".re") : Rational();
    Rational im = j.contains("im") ? rational_from_json(j["im"], field + ".im") : Rational();
    return {re, im};
}

ordered_json gaussian_to_json(const GaussianRational& z)
{
    return ordered_json{{"re", z.re().to_string()}, {"im", z.im().to_string()}};
}

ManipulatorProblem problem_from_json(const ordered_json& j)
{
    const auto& geo = require(j, "geometry", "");
    const auto& strokes = require(j, "strokes", "");
    ManipulatorProblem p;
    p.l_ab = rational_from_json(require(geo, "l_ab", "geometry"), "geometry.l_ab");
    p.l_ac = rational_from_json(require(geo, "l_ac", "geometry"), "geometry.l_ac");
    p.d_ab = gaussian_from_json(require(geo, "d_ab", "geometry"), "geometry.d_ab");
    p.d_ac = gaussian_from_json(require(geo, "d_ac", "geometry"), "geometry.d_ac");
    p.cis_beta = gaussian_from_json(require(geo, "cis_beta", "geometry"), "geometry.cis_beta");
    p.s_a = rational_from_json(require(strokes, "s_a", "strokes"), "strokes.s_a");
    p.s_b = rational_from_json(require(strokes, "s_b", "strokes"), "strokes.s_b");
    p.s_c = rational_from_json(require(strokes, "s_c", "strokes"), "strokes.s_c");
    p.validate();
    return p;
}

ordered_json problem_to_json(const ManipulatorProblem& p)
{
    return ordered_json{
        {"geometry",
         {{"l_ab", rational_to_json(p.l_ab)},
          {"l_ac", rational_to_json(p.l_ac)},
          {"d_ab", gaussian_to_json(p.d_ab)},
          {"d_ac", gaussian_to_json(p.d_ac)},
          {"cis_beta", gaussian_to_json(p.cis_beta)}}},
        {"strokes",
         {{"s_a", rational_to_json(p.s_a)}, {"s_b", rational_to_json(p.s_b)}, {"s_c", rational_to_json(p.s_c)}}}};
}

ManipulatorProblem parse_problem(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ProblemError(path.string(), "cannot open file");
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ProblemError(path.string(), std::string("invalid JSON: ") + e.what());
    }
    return problem_from_json(j);
}

ordered_json report_to_json(const SolutionReport& r, const ReportOptions& opts)
{
    ordered_json out;
    out["problem"] = problem_to_json(r.problem);

    ordered_json ideal = ordered_json::array();
    for (const auto& f : r.ideal) ideal.push_back(f.to_string());
    out["ideal"] = ideal;

    if (opts.emit_basis) {
        ordered_json basis = ordered_json::array();
        for (const auto& g : r.basis.elements()) basis.push_back(g.to_string());
        out["basis"] = basis;
    }

    ordered_json coeffs = ordered_json::array();
    for (const auto& c : r.eliminant.coeffs()) coeffs.push_back(gaussian_to_json(c));
    out["eliminant"] = {{"variable", "CCAL"},
                        {"degree", r.eliminant.degree()},
                        {"coefficients", coeffs},
                        {"text", to_string(r.eliminant)}};
    out["eliminant_self_reciprocal"] = r.eliminant_self_reciprocal;
    out["empty_variety"] = r.empty_variety;

    ordered_json roots = ordered_json::array();
    for (std::size_t k = 0; k < r.eliminant_roots.roots.size(); ++k) {
        roots.push_back({{"value", complex_to_json(r.eliminant_roots.roots[k])},
                         {"residual", r.eliminant_roots.residuals[k]},
                         {"multiplicity", r.eliminant_roots.multiplicity[k]}});
    }
    out["eliminant_roots"] = roots;

    ordered_json tuples = ordered_json::array();
    for (const auto& t : r.tuples) {
        ordered_json coords;
        for (int v = 0; v < kNumVars; ++v)
            coords[std::string(var_name(v))] = complex_to_json(t.coords[static_cast<std::size_t>(v)]);
        tuples.push_back({{"coords", coords}, {"physical", t.physical}, {"residual_max", t.residual_max}});
    }
    out["tuples"] = tuples;

    ordered_json postures = ordered_json::array();
    for (std::size_t k = 0; k < r.postures.size(); ++k) {
        const auto& a = r.postures[k];
        postures.push_back({{"theta_a", a.theta_a},
                            {"theta_b", a.theta_b},
                            {"theta_c", a.theta_c},
                            {"alpha", a.alpha},
                            {"tuple", r.posture_tuple[k]}});
    }
    out["postures"] = postures;
    out["counts"] = {{"tuples", r.tuples.size()}, {"physical", r.postures.size()}};

    const auto& g = r.diagnostics.groebner;
    ordered_json diag{{"basis_size", r.basis.size()},
                      {"pairs_total", g.pairs_total},
                      {"pairs_reduced", g.pairs_reduced},
                      {"pairs_coprime", g.pairs_coprime},
                      {"pairs_chain", g.pairs_chain},
                      {"zero_reductions", g.zero_reductions},
                      {"peak_basis_size", g.peak_basis_size},
                      {"root_iterations", r.diagnostics.root_iterations}};
    if (opts.include_timings) {
        diag["timings_ms"] = {{"groebner", r.diagnostics.groebner_ms},
                              {"roots", r.diagnostics.roots_ms},
                              {"total", r.diagnostics.total_ms}};
    }
    out["diagnostics"] = diag;
    if (!opts.timestamp.empty()) out["timestamp"] = opts.timestamp;
    return out;
}

std::string utc_timestamp()
{
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace rpr
