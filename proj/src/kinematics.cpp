#include "rpr/kinematics.hpp"

#include <chrono>
#include <cmath>
#include <numbers>

#include "rpr/inversive.hpp"

namespace rpr {

namespace {

void require_positive(const Rational& r, const char* field)
{
    if (r.sign() <= 0) throw ProblemError(field, "lengths must be positive");
}

MultiPoly v(Var x) { return MultiPoly::var(x); }

double elapsed_ms(std::chrono::steady_clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace

void ManipulatorProblem::validate() const
{
    require_positive(l_ab, "geometry.l_ab");
    require_positive(l_ac, "geometry.l_ac");
    if (d_ab.is_zero()) throw ProblemError("geometry.d_ab", "base anchor must differ from the origin");
    if (d_ac.is_zero()) throw ProblemError("geometry.d_ac", "base anchor must differ from the origin");
    if (d_ab == d_ac) throw ProblemError("geometry.d_ac", "base anchors must be distinct");
    if (!cis_beta.norm().is_one()) throw ProblemError("geometry.cis_beta", "must have unit modulus");
    require_positive(s_a, "strokes.s_a");
    require_positive(s_b, "strokes.s_b");
    require_positive(s_c, "strokes.s_c");
}

ManipulatorProblem reference_geometry(Rational s_a, Rational s_b, Rational s_c)
{
    ManipulatorProblem p;
    p.l_ab = Rational(3);
    p.l_ac = Rational(4);
    p.d_ab = GaussianRational(6);
    p.d_ac = GaussianRational(Rational(0), Rational(8));
    p.cis_beta = GaussianRational::i();
    p.s_a = std::move(s_a);
    p.s_b = std::move(s_b);
    p.s_c = std::move(s_c);
    return p;
}

std::vector<MultiPoly> build_ideal(const ManipulatorProblem& p)
{
    p.validate();
    using G = GaussianRational;
    MultiPoly f1 = G(p.s_a) * v(Var::CA) + G(p.l_ab) * v(Var::AL) - G(p.s_b) * v(Var::CB) - MultiPoly(p.d_ab);
    MultiPoly f2 = G(p.s_a) * v(Var::CA) + G(p.l_ac) * p.cis_beta * v(Var::AL) - G(p.s_c) * v(Var::CC) -
                   MultiPoly(p.d_ac);
    MultiPoly f3 = f1.formal_conjugate();
    MultiPoly f4 = f2.formal_conjugate();
    MultiPoly f5 = v(Var::CA) * v(Var::CCA) - MultiPoly(1);
    MultiPoly f6 = v(Var::CB) * v(Var::CCB) - MultiPoly(1);
    MultiPoly f7 = v(Var::CC) * v(Var::CCC) - MultiPoly(1);
    MultiPoly f8 = v(Var::AL) * v(Var::CCAL) - MultiPoly(1);
    return {f1, f2, f3, f4, f5, f6, f7, f8};
}

SolutionTuple back_substitute(const GroebnerBasis& g, ComplexFloat root)
{
    SolutionTuple t;
    t.coords.fill(0.0);
    t.coords[index(Var::CCAL)] = root;
    for (int k = index(Var::CCAL) - 1; k >= 0; --k) {
        const Monomial target = Monomial::var(static_cast<Var>(k));
        const MultiPoly* linear = nullptr;
        for (const auto& p : g.elements()) {
            if (p.leading_monomial() == target) {
                linear = &p;
                break;
            }
        }
        if (!linear)
            throw SolverError("triangular extension unavailable: no basis element linear in " +
                              std::string(var_name(k)));
        // Tail terms only involve variables below k, all already known.
        MultiPoly tail = *linear - MultiPoly(target, linear->leading_coeff());
        ComplexFloat value = -tail.evaluate(t.coords) / linear->leading_coeff().to_float();
        t.coords[static_cast<std::size_t>(k)] = value;
    }
    return t;
}

bool is_physical(const Coordinates& c, double tol)
{
    constexpr int half = kNumVars / 2;
    for (int k = 0; k < half; ++k) {
        ComplexFloat z = c[static_cast<std::size_t>(k)];
        ComplexFloat zbar = c[static_cast<std::size_t>(k + half)];
        if (std::abs(zbar - std::conj(z)) > tol) return false;
        if (std::abs(std::abs(z) - 1.0) > tol) return false;
    }
    return true;
}

std::vector<SolutionTuple> filter_physical(std::vector<SolutionTuple> tuples, double tol)
{
    if (!(tol > 0)) throw std::invalid_argument("filter_physical: tolerance must be positive");
    for (auto& t : tuples) t.physical = is_physical(t.coords, tol);
    return tuples;
}

double angle_degrees(ComplexFloat cis)
{
    double deg = std::atan2(cis.imag(), cis.real()) * 180.0 / std::numbers::pi;
    if (deg <= -180.0) deg += 360.0;
    return deg;
}

PostureAngles to_angles(const SolutionTuple& t)
{
    if (!t.physical) throw std::invalid_argument("to_angles: tuple is not physical");
    return {angle_degrees(t.coords[index(Var::CA)]), angle_degrees(t.coords[index(Var::CB)]),
            angle_degrees(t.coords[index(Var::CC)]), angle_degrees(t.coords[index(Var::AL)])};
}

double residual_max(const Coordinates& coords, std::span<const MultiPoly> ideal)
{
    double worst = 0.0;
    for (const auto& f : ideal) worst = std::max(worst, std::abs(f.evaluate(coords)));
    return worst;
}

SolutionReport solve_posture(const ManipulatorProblem& p, const SolveOptions& opts)
{
    const auto start = std::chrono::steady_clock::now();
    SolutionReport rep;
    rep.problem = p;
    rep.ideal = build_ideal(p);

    auto t0 = std::chrono::steady_clock::now();
    try {
        rep.basis = buchberger(rep.ideal, opts.groebner);
    } catch (const GroebnerLimitError& e) {
        throw SolverError(e.what());
    }
    rep.diagnostics.groebner = rep.basis.stats();
    rep.diagnostics.groebner_ms = elapsed_ms(t0);

    if (rep.basis.size() == 1 && rep.basis[0].is_constant()) {
        rep.empty_variety = true;
        rep.eliminant = ExactUniPoly({GaussianRational(1)});
        rep.diagnostics.total_ms = elapsed_ms(start);
        return rep;
    }

    EliminationView deepest = elimination_basis(rep.basis, kNumVars - 1);
    if (deepest.elements.size() != 1)
        throw SolverError("shape position required: level-7 elimination ideal has " +
                          std::to_string(deepest.elements.size()) + " basis elements, expected one");
    rep.eliminant = to_univariate(deepest.elements.front(), Var::CCAL);
    if (rep.eliminant.degree() < 1) {
        rep.empty_variety = true;
        rep.diagnostics.total_ms = elapsed_ms(start);
        return rep;
    }
    rep.eliminant_self_reciprocal = !rep.eliminant[0].is_zero() && is_self_reciprocal(rep.eliminant);

    t0 = std::chrono::steady_clock::now();
    try {
        rep.eliminant_roots = find_roots(rep.eliminant, opts.roots);
    } catch (const RootFindError& e) {
        throw SolverError(e.what());
    }
    rep.diagnostics.root_iterations = rep.eliminant_roots.iterations;
    rep.diagnostics.roots_ms = elapsed_ms(t0);

    std::vector<SolutionTuple> tuples;
    for (ComplexFloat r : rep.eliminant_roots.roots) {
        SolutionTuple t = back_substitute(rep.basis, r);
        t.residual_max = residual_max(t.coords, rep.ideal);
        tuples.push_back(t);
    }
    rep.tuples = filter_physical(std::move(tuples), opts.tol_physical);
    for (std::size_t k = 0; k < rep.tuples.size(); ++k) {
        if (!rep.tuples[k].physical) continue;
        rep.postures.push_back(to_angles(rep.tuples[k]));
        rep.posture_tuple.push_back(k);
    }
    rep.diagnostics.total_ms = elapsed_ms(start);
    return rep;
}

PlatformVertices platform_vertices(const ManipulatorProblem& p, const Coordinates& c)
{
    const ComplexFloat ca = c[index(Var::CA)], cb = c[index(Var::CB)], cc = c[index(Var::CC)],
                       al = c[index(Var::AL)];
    PlatformVertices v;
    v.a = p.s_a.to_double() * ca;
    v.b = p.d_ab.to_float() + p.s_b.to_double() * cb;
    v.c = p.d_ac.to_float() + p.s_c.to_double() * cc;
    v.b_via_a = v.a + p.l_ab.to_double() * al;
    v.c_via_a = v.a + p.l_ac.to_double() * p.cis_beta.to_float() * al;
    return v;
}

}  // namespace rpr
