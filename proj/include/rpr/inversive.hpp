#pragma once

// Inversion in circles of the Gauss plane and the polynomial symmetries it
// induces.

#include "rpr/exact.hpp"
#include "rpr/unipoly.hpp"

namespace rpr {

inline constexpr double kDefaultInversiveTol = 1e-9;

class InversionCircle {
public:
    InversionCircle(ComplexFloat center, double radius);
    static InversionCircle unit() { return {0.0, 1.0}; }

    ComplexFloat center() const { return center_; }
    double radius() const { return radius_; }

private:
    ComplexFloat center_;
    double radius_;
};

/// z' = c + r^2 / conj(z - c). Throws std::domain_error at the center.
ComplexFloat invert_in_circle(ComplexFloat z, const InversionCircle& circle);

/// z' = 1 / conj(z). Throws std::domain_error at 0.
ComplexFloat invert_unit(ComplexFloat z);

/// c_i == conj(c_{n-i}) for every i. Rejects the zero polynomial and c_0 == 0.
bool is_self_inversive(const ExactUniPoly& f);
/// c_i == c_{n-i} for every i. Rejects the zero polynomial and c_0 == 0.
bool is_self_reciprocal(const ExactUniPoly& f);

/// Directed-ratio harmonic condition with respect to X = -1, Y = 1, in the
/// summed form |(z'+1)/(z'-1) + (z+1)/(z-1)| <= tol.
bool harmonic_conjugate_check(double z, double z_prime, double tol = kDefaultInversiveTol);

}  // namespace rpr
