#pragma once

// Univariate polynomials c_0 + c_1 z + ... + c_n z^n, templated on the
// coefficient scalar (GaussianRational for exact work, ComplexFloat for the
// numeric stages).

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rpr/exact.hpp"
#include "rpr/multipoly.hpp"

namespace rpr {

namespace detail {

template <typename Scalar>
bool is_zero_scalar(const Scalar& s)
{
    if constexpr (std::is_same_v<Scalar, GaussianRational>)
        return s.is_zero();
    else
        return s == Scalar(0);
}

inline GaussianRational conj_scalar(const GaussianRational& s) { return s.conj(); }
inline ComplexFloat conj_scalar(const ComplexFloat& s) { return std::conj(s); }

}  // namespace detail

template <typename Scalar>
class UniPoly {
public:
    using scalar_type = Scalar;

    UniPoly() = default;
    /// Coefficients constant term first; trailing zeros are trimmed.
    explicit UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    const Scalar& operator[](std::size_t i) const { return c_[i]; }
    const Scalar& leading() const
    {
        if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    void trim()
    {
        while (!c_.empty() && detail::is_zero_scalar(c_.back())) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

using ExactUniPoly = UniPoly<GaussianRational>;
using FloatUniPoly = UniPoly<ComplexFloat>;

/// Horner evaluation.
template <typename Scalar, typename Point>
auto eval_poly(const UniPoly<Scalar>& f, const Point& z)
{
    using Result = std::conditional_t<std::is_same_v<Scalar, GaussianRational> &&
                                          std::is_same_v<Point, GaussianRational>,
                                      GaussianRational, ComplexFloat>;
    Result acc{};
    const auto& c = f.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        if constexpr (std::is_same_v<Result, ComplexFloat> && std::is_same_v<Scalar, GaussianRational>)
            acc = acc * ComplexFloat(z) + it->to_float();
        else
            acc = acc * z + *it;
    }
    return acc;
}

inline FloatUniPoly to_float(const ExactUniPoly& f)
{
    std::vector<ComplexFloat> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(x.to_float());
    return FloatUniPoly(std::move(c));
}

/// f*(z) = sum conj(c_{n-i}) z^i.
template <typename Scalar>
UniPoly<Scalar> conjugate_reciprocal(const UniPoly<Scalar>& f)
{
    if (f.is_zero()) throw std::invalid_argument("conjugate_reciprocal: zero polynomial");
    std::vector<Scalar> c;
    c.reserve(f.coeffs().size());
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) c.push_back(detail::conj_scalar(*it));
    return UniPoly<Scalar>(std::move(c));
}

/// f+(z) = z^n f(1/z): coefficients reversed.
template <typename Scalar>
UniPoly<Scalar> reciprocal(const UniPoly<Scalar>& f)
{
    if (f.is_zero()) throw std::invalid_argument("reciprocal: zero polynomial");
    std::vector<Scalar> c(f.coeffs().rbegin(), f.coeffs().rend());
    return UniPoly<Scalar>(std::move(c));
}

/// Extracts a univariate polynomial in variable `v`. Throws if other variables occur.
ExactUniPoly to_univariate(const MultiPoly& p, Var v);
MultiPoly to_multivariate(const ExactUniPoly& f, Var v);

/// Comma-separated coefficients, constant term first, e.g. "1,-213/50,165857/25600,-213/50,1".
std::string to_string(const ExactUniPoly& f);
ExactUniPoly parse_unipoly(std::string_view text);

}  // namespace rpr
