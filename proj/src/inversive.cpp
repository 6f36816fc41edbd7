#include "rpr/inversive.hpp"

#include <cmath>
#include <stdexcept>

namespace rpr {

InversionCircle::InversionCircle(ComplexFloat center, double radius) : center_(center), radius_(radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("inversion radius must be positive");
}

ComplexFloat invert_in_circle(ComplexFloat z, const InversionCircle& circle)
{
    ComplexFloat d = z - circle.center();
    if (d == ComplexFloat(0.0)) throw std::domain_error("inversion undefined at center");
    double r2 = circle.radius() * circle.radius();
    return circle.center() + r2 / std::conj(d);
}

ComplexFloat invert_unit(ComplexFloat z)
{
    if (z == ComplexFloat(0.0)) throw std::domain_error("inversion undefined at center");
    return 1.0 / std::conj(z);
}

namespace {

void check_predicate_input(const ExactUniPoly& f, const char* who)
{
    if (f.is_zero()) throw std::invalid_argument(std::string(who) + ": zero polynomial");
    if (f[0].is_zero()) throw std::invalid_argument(std::string(who) + ": root at the origin (c_0 = 0)");
}

}  // namespace

bool is_self_inversive(const ExactUniPoly& f)
{
    check_predicate_input(f, "is_self_inversive");
    const auto n = f.coeffs().size();
    for (std::size_t i = 0; i < n; ++i)
        if (!(f[i] == f[n - 1 - i].conj())) return false;
    return true;
}

bool is_self_reciprocal(const ExactUniPoly& f)
{
    check_predicate_input(f, "is_self_reciprocal");
    const auto n = f.coeffs().size();
    for (std::size_t i = 0; i < n / 2; ++i)
        if (!(f[i] == f[n - 1 - i])) return false;
    return true;
}

bool harmonic_conjugate_check(double z, double z_prime, double tol)
{
    if (z == 1.0 || z == -1.0 || z_prime == 1.0 || z_prime == -1.0)
        throw std::domain_error("harmonic ratio degenerate at +-1");
    double s = (z_prime + 1.0) / (z_prime - 1.0) + (z + 1.0) / (z - 1.0);
    return std::abs(s) <= tol;
}

}  // namespace rpr
