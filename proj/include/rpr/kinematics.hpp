#pragma once

// Forward position problem of the 3RPR planar parallel manipulator.
//
// Base anchors sit at 0 (connector a), d_ab (connector b) and d_ac
// (connector c). Platform vertex A is reached as s_a*cis_a; B and C follow
// from the platform sides l_ab*cis_alpha and l_ac*cis_beta*cis_alpha.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rpr/exact.hpp"
#include "rpr/groebner.hpp"
#include "rpr/multipoly.hpp"
#include "rpr/rootfind.hpp"
#include "rpr/unipoly.hpp"

namespace rpr {

class ProblemError : public std::invalid_argument {
public:
    ProblemError(std::string field, const std::string& what)
        : std::invalid_argument(field + ": " + what), field_(std::move(field))
    {
    }
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Failure of a solver stage (basis shape, root finding, resource cap).
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ManipulatorProblem {
    Rational l_ab;
    Rational l_ac;
    GaussianRational d_ab;
    GaussianRational d_ac;
    GaussianRational cis_beta;
    Rational s_a;
    Rational s_b;
    Rational s_c;

    /// Throws ProblemError naming the offending field.
    void validate() const;

    friend bool operator==(const ManipulatorProblem&, const ManipulatorProblem&) = default;
};

/// Right-triangular base and platform used by the worked examples, with the given strokes.
ManipulatorProblem reference_geometry(Rational s_a, Rational s_b, Rational s_c);

using Coordinates = std::array<ComplexFloat, kNumVars>;

struct SolutionTuple {
    Coordinates coords{};
    bool physical = false;
    double residual_max = 0.0;
};

struct PostureAngles {
    double theta_a = 0.0;
    double theta_b = 0.0;
    double theta_c = 0.0;
    double alpha = 0.0;
};

struct SolveOptions {
    RootFindOptions roots;
    BuchbergerOptions groebner;
    double tol_physical = 1e-6;
};

struct SolveDiagnostics {
    BuchbergerStats groebner;
    int root_iterations = 0;
    double groebner_ms = 0.0;
    double roots_ms = 0.0;
    double total_ms = 0.0;
};

struct SolutionReport {
    ManipulatorProblem problem;
    std::vector<MultiPoly> ideal;
    GroebnerBasis basis;
    /// Univariate generator of the deepest elimination ideal, in CCAL.
    ExactUniPoly eliminant;
    bool eliminant_self_reciprocal = false;
    bool empty_variety = false;
    RootSet eliminant_roots;
    std::vector<SolutionTuple> tuples;
    std::vector<PostureAngles> postures;
    /// Index into `tuples` for each posture.
    std::vector<std::size_t> posture_tuple;
    SolveDiagnostics diagnostics;
};

/// The eight position equations: two loop closures, their formal conjugates
/// and the four unit-circle constraints.
std::vector<MultiPoly> build_ideal(const ManipulatorProblem& p);

/// Extends a root of the eliminant to all eight coordinates using the basis
/// elements linear in each higher variable. Throws SolverError when the basis
/// is not in shape position.
SolutionTuple back_substitute(const GroebnerBasis& g, ComplexFloat root);

/// Marks tuples whose four (cis, conj-cis) pairs are conjugate and unit-modulus.
std::vector<SolutionTuple> filter_physical(std::vector<SolutionTuple> tuples, double tol);
bool is_physical(const Coordinates& c, double tol);

/// Posture angles in degrees, range (-180, 180]. Throws for non-physical tuples.
PostureAngles to_angles(const SolutionTuple& t);
double angle_degrees(ComplexFloat cis);

double residual_max(const Coordinates& coords, std::span<const MultiPoly> ideal);

SolutionReport solve_posture(const ManipulatorProblem& p, const SolveOptions& opts = {});

struct PlatformVertices {
    ComplexFloat a, b, c;            // via the connectors
    ComplexFloat b_via_a, c_via_a;   // via the platform sides from A
};

PlatformVertices platform_vertices(const ManipulatorProblem& p, const Coordinates& coords);

}  // namespace rpr
