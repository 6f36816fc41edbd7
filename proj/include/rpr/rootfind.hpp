#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rpr/exact.hpp"
#include "rpr/unipoly.hpp"

namespace rpr {

struct RootFindOptions {
    double tol = 1e-12;
    int max_iter = 200;
    int polish_steps = 3;
    /// Roots closer than this are reported as one repeated root and not polished.
    double cluster_tol = 1e-7;
};

struct RootSet {
    std::vector<ComplexFloat> roots;
    /// Relative residual |f(z)| / sum |c_i| |z|^i per root.
    std::vector<double> residuals;
    /// Size of the cluster each root belongs to (1 for simple roots).
    std::vector<int> multiplicity;
    int poly_degree = 0;
    int iterations = 0;
};

class RootFindError : public std::runtime_error {
public:
    RootFindError(const std::string& what, RootSet best) : std::runtime_error(what), best_(std::move(best)) {}
    const RootSet& best() const { return best_; }

private:
    RootSet best_;
};

/// Relative residual of f at z, i.e. the componentwise backward error.
double relative_residual(const FloatUniPoly& f, ComplexFloat z);

/// All roots of f (with multiplicity) by Aberth-Ehrlich simultaneous iteration
/// followed by Newton polishing. Real-coefficient inputs return conjugate-paired
/// roots. Roots are sorted by real part, then imaginary part.
RootSet find_roots(const FloatUniPoly& f, const RootFindOptions& opts = {});
RootSet find_roots(const ExactUniPoly& f, const RootFindOptions& opts = {});

}  // namespace rpr
