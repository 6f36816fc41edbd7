#include "doctest.h"

#include <random>

#include "golden.hpp"
#include "rpr/kinematics.hpp"
#include "rpr/multipoly.hpp"
#include "test_support.hpp"

using rpr::Division;
using rpr::GaussianRational;
using rpr::Monomial;
using rpr::MultiPoly;
using rpr::Ordering;
using rpr::ParseError;
using rpr::PolyOp;
using rpr::Rational;
using rpr::Var;

namespace {

MultiPoly P(const char* s) { return MultiPoly::parse(s); }

std::vector<MultiPoly> parse_all(const std::vector<std::string>& lines)
{
    std::vector<MultiPoly> out;
    for (const auto& l : lines) out.push_back(MultiPoly::parse(l));
    return out;
}

bool remainder_condition(const MultiPoly& r, std::span<const MultiPoly> divisors)
{
    for (const auto& t : r.terms())
        for (const auto& g : divisors)
            if (g.leading_monomial().divides(t.mono)) return false;
    return true;
}

bool division_identity(const MultiPoly& f, std::span<const MultiPoly> divisors, const Division& d)
{
    MultiPoly sum = d.remainder;
    for (std::size_t i = 0; i < divisors.size(); ++i) sum += d.quotients[i] * divisors[i];
    return sum == f;
}

}  // namespace

TEST_CASE("variable names")
{
    CHECK(rpr::var_name(0) == "CA");
    CHECK(rpr::var_name(7) == "CCAL");
    CHECK(rpr::var_index("CCC") == 6);
    CHECK(rpr::var_index("XY") == -1);
}

TEST_CASE("lex_compare examples")
{
    Monomial ca = Monomial::var(Var::CA);
    Monomial ccal4 = Monomial::var(Var::CCAL, 4);
    CHECK(rpr::lex_compare(ca, ccal4) == Ordering::greater);
    CHECK(rpr::lex_compare(ccal4, ca) == Ordering::less);
    // x = CA, y = CB
    Monomial x2y = Monomial::var(Var::CA, 2) * Monomial::var(Var::CB);
    Monomial xy2 = Monomial::var(Var::CA) * Monomial::var(Var::CB, 2);
    CHECK(rpr::lex_compare(x2y, xy2) == Ordering::greater);
    CHECK(rpr::lex_compare(x2y, x2y) == Ordering::equal);
}

TEST_CASE("lex order is a multiplicative total order")
{
    std::mt19937_64 rng(3);
    for (int k = 0; k < 1000; ++k) {
        Monomial a = testing::random_monomial(rng, 8, 6);
        Monomial b = testing::random_monomial(rng, 8, 6);
        Monomial c = testing::random_monomial(rng, 8, 6);
        Ordering ab = rpr::lex_compare(a, b);
        Ordering ba = rpr::lex_compare(b, a);
        CHECK((ab == Ordering::equal) == (ba == Ordering::equal));
        CHECK((ab == Ordering::greater) == (ba == Ordering::less));
        CHECK((ab == Ordering::equal) == (a == b));
        if (ab == Ordering::greater && rpr::lex_compare(b, c) == Ordering::greater)
            CHECK(rpr::lex_compare(a, c) == Ordering::greater);
        if (ab == Ordering::greater) CHECK(rpr::lex_compare(c * a, c * b) == Ordering::greater);
        CHECK(rpr::lex_compare(a * c, a) != Ordering::less);
    }
}

TEST_CASE("monomial helpers")
{
    Monomial a = Monomial::var(Var::CA) * Monomial::var(Var::CCAL, 3);
    Monomial b = Monomial::var(Var::CCAL, 5);
    CHECK(a.to_string() == "CA*CCAL^3");
    CHECK(a.degree() == 4);
    CHECK(a.lcm(b) == Monomial::var(Var::CA) * b);
    CHECK(Monomial::var(Var::CCAL, 3).divides(a));
    CHECK_FALSE(b.divides(a));
    CHECK(a / Monomial::var(Var::CA) == Monomial::var(Var::CCAL, 3));
    CHECK(Monomial::var(Var::CB).coprime(Monomial::var(Var::CC)));
    CHECK_FALSE(a.coprime(b));
    CHECK(a.first_var() == 0);
    CHECK(b.first_var() == 7);
    CHECK(Monomial().first_var() == rpr::kNumVars);
}

TEST_CASE("leading_term examples")
{
    auto basis = parse_all(golden::corrected_basis_a());
    CHECK(basis[3].leading_monomial() == Monomial::var(Var::AL));
    CHECK(basis[3].leading_coeff() == GaussianRational(1));
    CHECK(basis[7].leading_monomial() == Monomial::var(Var::CCAL, 4));
    CHECK(basis[7].leading_coeff() == GaussianRational(1));
    MultiPoly five(5);
    CHECK(five.leading_monomial().is_one());
    CHECK(five.leading_coeff() == GaussianRational(5));
    CHECK_THROWS_AS(MultiPoly().leading_term(), std::domain_error);
}

TEST_CASE("poly_arith examples")
{
    MultiPoly x = MultiPoly::var(Var::CA);
    CHECK((x + 1) * (x - 1) == P("CA^2 - 1"));
    auto f = rpr::build_ideal(rpr::reference_geometry(Rational(2), Rational(7, 2), Rational(5, 2)));
    CHECK((f[0] + MultiPoly(-1) * f[0]).is_zero());
    CHECK(rpr::apply(PolyOp::sub, f[0], f[0]).is_zero());
    const GaussianRational i = GaussianRational::i();
    MultiPoly s = rpr::scale(f[4], i);
    CHECK(s == i * MultiPoly::var(Var::CA) * MultiPoly::var(Var::CCA) - MultiPoly(i));
    CHECK(s.to_string() == "(I)*CA*CCA + (-I)");
    CHECK(rpr::scale(f[4], GaussianRational(0)).is_zero());
    CHECK(rpr::pow(x + 1, 3) == P("CA^3 + 3*CA^2 + 3*CA + 1"));
    CHECK(rpr::pow(x, 0) == MultiPoly(1));
}

TEST_CASE("ring axioms on random samples")
{
    std::mt19937_64 rng(17);
    for (int k = 0; k < 150; ++k) {
        MultiPoly a = testing::random_poly(rng, 4, 3, 4);
        MultiPoly b = testing::random_poly(rng, 4, 3, 4);
        MultiPoly c = testing::random_poly(rng, 4, 3, 4);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a - a == MultiPoly());
        auto terms = (a * b).terms();
        for (std::size_t t = 1; t < terms.size(); ++t) CHECK(terms[t - 1].mono > terms[t].mono);
        for (const auto& t : terms) CHECK_FALSE(t.coeff.is_zero());
        CHECK(MultiPoly::parse(a.to_string()) == a);
        CHECK(a.formal_conjugate().formal_conjugate() == a);
    }
}

TEST_CASE("canonical text and parser")
{
    CHECK(P("(-14080/2017+2880/2017*I)*CCA^3 + CC").to_string() == "CC + (-14080/2017+2880/2017*I)*CCA^3");
    CHECK(P("CCAL^4-213/50*CCAL^3+165857/25600*CCAL^2-213/50*CCAL+1").to_string() ==
          "CCAL^4 - 213/50*CCAL^3 + 165857/25600*CCAL^2 - 213/50*CCAL + 1");
    CHECK(P("0").to_string() == "0");
    CHECK(P("2*(CA + I)^2") == P("2*CA^2 + (4*I)*CA - 2"));
    CHECK(P("CA/2") == P("1/2*CA"));
    CHECK(P("-(CB - CC)") == P("CC - CB"));
    CHECK(P("I*I") == MultiPoly(-1));
    CHECK_THROWS_AS(P("CA +"), ParseError);
    CHECK_THROWS_AS(P("FOO"), ParseError);
    CHECK_THROWS_AS(P("CA^-1"), ParseError);
    CHECK_THROWS_AS(P("CA / CB"), ParseError);
    CHECK_THROWS_AS(P("(CA"), ParseError);
    CHECK_THROWS_AS(P("CA/0"), ParseError);
    CHECK_THROWS_AS(P("CA^123456"), ParseError);
}

TEST_CASE("formal conjugate")
{
    MultiPoly f2 = P("2*CA + (4*I)*AL - 5/2*CC - (8*I)");
    CHECK(f2.formal_conjugate() == P("2*CCA - (4*I)*CCAL - 5/2*CCC + (8*I)"));
}

TEST_CASE("evaluate")
{
    MultiPoly f = P("CA*CCA - 1");
    std::array<rpr::ComplexFloat, rpr::kNumVars> pt{};
    pt[0] = {0.0, 1.0};
    pt[4] = {0.0, -1.0};
    CHECK(std::abs(f.evaluate(pt)) < 1e-15);
    std::array<GaussianRational, rpr::kNumVars> ex{};
    ex[0] = GaussianRational(Rational(3, 5), Rational(4, 5));
    ex[4] = ex[0].conj();
    CHECK(f.evaluate(ex).is_zero());
}

TEST_CASE("multi_divide examples")
{
    auto f = rpr::build_ideal(rpr::reference_geometry(Rational(2), Rational(7, 2), Rational(5, 2)));
    {
        std::vector<MultiPoly> g{f[4]};
        Division d = rpr::multi_divide(f[4], g);
        CHECK(d.quotients.size() == 1);
        CHECK(d.quotients[0] == MultiPoly(1));
        CHECK(d.remainder.is_zero());
    }
    {
        std::vector<MultiPoly> g{P("CA - 1")};
        Division d = rpr::multi_divide(P("CA"), g);
        CHECK(d.quotients[0] == MultiPoly(1));
        CHECK(d.remainder == MultiPoly(1));
    }
    {
        auto g = parse_all(golden::corrected_basis_a());
        Division d = rpr::multi_divide(f[0], g);
        CHECK(d.remainder.is_zero());
        CHECK(division_identity(f[0], g, d));
    }
}

TEST_CASE("division uses the first applicable divisor")
{
    std::vector<MultiPoly> g{P("CA - 1"), P("CA - 2")};
    Division d = rpr::multi_divide(P("CA"), g);
    CHECK(d.quotients[0] == MultiPoly(1));
    CHECK(d.quotients[1].is_zero());
    CHECK(d.remainder == MultiPoly(1));
    std::vector<MultiPoly> h{P("CA - 2"), P("CA - 1")};
    CHECK(rpr::multi_divide(P("CA"), h).remainder == MultiPoly(2));
}

TEST_CASE("division identity and remainder condition on random samples")
{
    std::mt19937_64 rng(99);
    for (int k = 0; k < 150; ++k) {
        MultiPoly f = testing::random_poly(rng, 4, 4, 6);
        std::uniform_int_distribution<int> nd(1, 3);
        std::vector<MultiPoly> g;
        for (int j = nd(rng); j > 0; --j) g.push_back(testing::random_nonzero_poly(rng, 4, 2, 3));
        Division d = rpr::multi_divide(f, g);
        CHECK(division_identity(f, g, d));
        CHECK(remainder_condition(d.remainder, g));
        CHECK(rpr::reduce(f, g) == d.remainder);
    }
}

TEST_CASE("s_polynomial examples")
{
    MultiPoly f = P("CA^2 - 1");
    MultiPoly g = P("CA*CB - 1");
    CHECK(rpr::s_polynomial(f, f).is_zero());
    CHECK(rpr::s_polynomial(f, g) == P("CA - CB"));
    MultiPoly h = P("CB^2 - 1");
    std::vector<MultiPoly> fh{f, h};
    CHECK(rpr::reduce(rpr::s_polynomial(f, h), fh).is_zero());
}

TEST_CASE("s_polynomial cancels leading terms")
{
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; ++k) {
        MultiPoly f = testing::random_nonzero_poly(rng, 4, 3, 4);
        MultiPoly g = testing::random_nonzero_poly(rng, 4, 3, 4);
        MultiPoly s = rpr::s_polynomial(f, g);
        Monomial l = f.leading_monomial().lcm(g.leading_monomial());
        CHECK(s.coeff(l).is_zero());
        if (!s.is_zero()) {
            CHECK(s.leading_monomial() < l);
        }
    }
}
