#pragma once

// Polynomials over Q(i) in the fixed eight-variable ring
//   CA > CB > CC > AL > CCA > CCB > CCC > CCAL   (lex)
// i.e. cis_a, cis_b, cis_c, cis_alpha followed by their formal conjugates.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rpr/exact.hpp"

namespace rpr {

inline constexpr int kNumVars = 8;

enum class Var : std::uint8_t { CA = 0, CB, CC, AL, CCA, CCB, CCC, CCAL };

constexpr int index(Var v) { return static_cast<int>(v); }

/// Canonical text name of a variable ("CA", ..., "CCAL").
std::string_view var_name(int index);
/// Inverse of var_name; returns -1 when the name is unknown.
int var_index(std::string_view name);

class Monomial {
public:
    using Exponents = std::array<std::uint16_t, kNumVars>;

    constexpr Monomial() = default;
    explicit constexpr Monomial(const Exponents& e) : e_(e) {}

    static Monomial var(Var v, int power = 1)
    {
        Monomial m;
        m.e_[index(v)] = static_cast<std::uint16_t>(power);
        return m;
    }

    int operator[](int i) const { return e_[i]; }
    int degree() const;
    bool is_one() const { return degree() == 0; }

    /// True when this monomial divides `other`.
    bool divides(const Monomial& other) const;
    /// Only valid when `divisor.divides(*this)`.
    Monomial operator/(const Monomial& divisor) const;
    Monomial operator*(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    /// Lowest variable index with a nonzero exponent, or kNumVars for 1.
    int first_var() const;

    /// Lex order under the fixed variable chain.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        return a.e_ <=> b.e_;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string() const;
    const Exponents& exponents() const { return e_; }

private:
    Exponents e_{};
};

enum class Ordering { less, equal, greater };

Ordering lex_compare(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    GaussianRational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial. Terms are kept strictly descending in lex order with no
/// zero coefficients; the zero polynomial has no terms.
class MultiPoly {
public:
    MultiPoly() = default;
    MultiPoly(GaussianRational c);  // NOLINT(google-explicit-constructor)
    MultiPoly(long c) : MultiPoly(GaussianRational(c)) {}  // NOLINT(google-explicit-constructor)
    MultiPoly(Monomial m, GaussianRational c = GaussianRational(1));

    static MultiPoly var(Var v) { return MultiPoly(Monomial::var(v)); }

    /// Builds from arbitrary terms: sorts, merges duplicates and drops zeros.
    static MultiPoly from_terms(std::vector<Term> terms);

    /// Parses the canonical text grammar; see poly_parse.cpp.
    static MultiPoly parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    std::size_t size() const { return terms_.size(); }
    std::span<const Term> terms() const { return terms_; }

    /// Lex-greatest term. Throws std::domain_error for the zero polynomial.
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const GaussianRational& leading_coeff() const { return leading_term().coeff; }

    /// Coefficient of `m`, zero if absent.
    GaussianRational coeff(const Monomial& m) const;

    /// Scaled so the leading coefficient is 1. Zero stays zero.
    MultiPoly monic() const;

    /// True when every monomial only involves variables with index >= `first`.
    bool uses_only_vars_from(int first) const;
    /// Highest exponent of variable `v` over all terms.
    int degree_in(int v) const;

    /// Formal conjugate: barred and unbarred variables swapped, coefficients conjugated.
    MultiPoly formal_conjugate() const;

    ComplexFloat evaluate(std::span<const ComplexFloat, kNumVars> point) const;
    GaussianRational evaluate(std::span<const GaussianRational, kNumVars> point) const;

    /// Canonical text, e.g. "(-14080/2017+2880/2017*I)*CCA^3 + CC".
    std::string to_string() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const GaussianRational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const GaussianRational& c) { return a *= c; }
    friend MultiPoly operator*(const GaussianRational& c, MultiPoly a) { return a *= c; }

    /// this * c * m, one pass.
    MultiPoly mul_term(const Monomial& m, const GaussianRational& c) const;
    /// this - c * m * other, merged in a single pass.
    MultiPoly sub_mul_term(const Monomial& m, const GaussianRational& c, const MultiPoly& other) const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    std::vector<Term> terms_;
};

MultiPoly pow(const MultiPoly& p, int exponent);

enum class PolyOp { add, sub, mul };

MultiPoly apply(PolyOp op, const MultiPoly& a, const MultiPoly& b);
inline MultiPoly scale(const MultiPoly& a, const GaussianRational& c) { return a * c; }

struct Division {
    std::vector<MultiPoly> quotients;
    MultiPoly remainder;
};

/// Multivariate division. The current leading term is cancelled against the
/// first divisor (in list order) whose leading monomial divides it; otherwise
/// it moves to the remainder. f = sum(q_i * g_i) + r holds exactly.
Division multi_divide(const MultiPoly& f, std::span<const MultiPoly> divisors);

/// Remainder-only form of multi_divide.
MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> divisors);

/// (lcm/LT(f))*f - (lcm/LT(g))*g.
MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

}  // namespace rpr
