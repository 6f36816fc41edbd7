#include "rpr/unipoly.hpp"

namespace rpr {

ExactUniPoly to_univariate(const MultiPoly& p, Var v)
{
    std::vector<GaussianRational> c(static_cast<std::size_t>(p.degree_in(index(v))) + 1);
    for (const auto& t : p.terms()) {
        int e = t.mono[index(v)];
        if (t.mono.degree() != e)
            throw std::invalid_argument("polynomial is not univariate in " + std::string(var_name(index(v))));
        c[static_cast<std::size_t>(e)] = t.coeff;
    }
    return ExactUniPoly(std::move(c));
}

MultiPoly to_multivariate(const ExactUniPoly& f, Var v)
{
    std::vector<Term> terms;
    for (int i = 0; i <= f.degree(); ++i) terms.push_back({Monomial::var(v, i), f[static_cast<std::size_t>(i)]});
    return MultiPoly::from_terms(std::move(terms));
}

std::string to_string(const ExactUniPoly& f)
{
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i) s += ',';
        s += f[i].to_string();
    }
    return s;
}

ExactUniPoly parse_unipoly(std::string_view text)
{
    std::vector<GaussianRational> c;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        std::string_view field = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
        MultiPoly p = MultiPoly::parse(field);
        if (!p.is_constant()) throw ParseError("coefficient '" + std::string(field) + "' is not a constant");
        c.push_back(p.is_zero() ? GaussianRational() : p.leading_coeff());
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ExactUniPoly(std::move(c));
}

}  // namespace rpr
