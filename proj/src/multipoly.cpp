#include "rpr/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rpr {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "CA", "CB", "CC", "AL", "CCA", "CCB", "CCC", "CCAL"};

// a - c*m*g over the term range [a_begin, a_end), merged in one pass.
std::vector<Term> merge_sub(std::span<const Term> a, const Monomial& m, const GaussianRational& c,
                            std::span<const Term> g)
{
    std::vector<Term> out;
    out.reserve(a.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < g.size()) {
        if (j == g.size()) {
            out.push_back(a[i++]);
            continue;
        }
        Monomial gm = g[j].mono * m;
        if (i == a.size() || a[i].mono < gm) {
            out.push_back({gm, -(c * g[j].coeff)});
            ++j;
        } else if (gm < a[i].mono) {
            out.push_back(a[i++]);
        } else {
            GaussianRational v = a[i].coeff - c * g[j].coeff;
            if (!v.is_zero()) out.push_back({gm, std::move(v)});
            ++i;
            ++j;
        }
    }
    return out;
}

template <typename Scalar>
Scalar ipow(Scalar base, int e)
{
    Scalar r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace

std::string_view var_name(int index)
{
    if (index < 0 || index >= kNumVars) throw std::out_of_range("variable index out of range");
    return kVarNames[index];
}

int var_index(std::string_view name)
{
    for (int i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == name) return i;
    return -1;
}

int Monomial::degree() const
{
    return std::accumulate(e_.begin(), e_.end(), 0);
}

bool Monomial::divides(const Monomial& other) const
{
    for (int i = 0; i < kNumVars; ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& divisor) const
{
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] - divisor.e_[i]);
    return r;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e_[i] = static_cast<std::uint16_t>(e_[i] + other.e_[i]);
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const
{
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
    return r;
}

bool Monomial::coprime(const Monomial& other) const
{
    for (int i = 0; i < kNumVars; ++i)
        if (e_[i] && other.e_[i]) return false;
    return true;
}

int Monomial::first_var() const
{
    for (int i = 0; i < kNumVars; ++i)
        if (e_[i]) return i;
    return kNumVars;
}

std::string Monomial::to_string() const
{
    std::string s;
    for (int i = 0; i < kNumVars; ++i) {
        if (!e_[i]) continue;
        if (!s.empty()) s += '*';
        s += kVarNames[i];
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
}

Ordering lex_compare(const Monomial& a, const Monomial& b)
{
    auto c = a <=> b;
    if (c < 0) return Ordering::less;
    if (c > 0) return Ordering::greater;
    return Ordering::equal;
}

MultiPoly::MultiPoly(GaussianRational c)
{
    if (!c.is_zero()) terms_.push_back({Monomial(), std::move(c)});
}

MultiPoly::MultiPoly(Monomial m, GaussianRational c)
{
    if (!c.is_zero()) terms_.push_back({m, std::move(c)});
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms)
{
    std::stable_sort(terms.begin(), terms.end(),
                     [](const Term& a, const Term& b) { return a.mono > b.mono; });
    MultiPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& MultiPoly::leading_term() const
{
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
}

GaussianRational MultiPoly::coeff(const Monomial& m) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.mono > key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return {};
}

MultiPoly MultiPoly::monic() const
{
    if (is_zero() || leading_coeff().is_one()) return *this;
    return *this * leading_coeff().inverse();
}

bool MultiPoly::uses_only_vars_from(int first) const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [first](const Term& t) { return t.mono.first_var() >= first; });
}

int MultiPoly::degree_in(int v) const
{
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[v]);
    return d;
}

MultiPoly MultiPoly::formal_conjugate() const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    constexpr int half = kNumVars / 2;
    for (const auto& t : terms_) {
        Monomial::Exponents e{};
        for (int i = 0; i < half; ++i) {
            e[i] = t.mono.exponents()[i + half];
            e[i + half] = t.mono.exponents()[i];
        }
        out.push_back({Monomial(e), t.coeff.conj()});
    }
    return from_terms(std::move(out));
}

ComplexFloat MultiPoly::evaluate(std::span<const ComplexFloat, kNumVars> point) const
{
    ComplexFloat sum = 0.0;
    for (const auto& t : terms_) {
        ComplexFloat v = t.coeff.to_float();
        for (int i = 0; i < kNumVars; ++i)
            if (t.mono[i]) v *= ipow(point[i], t.mono[i]);
        sum += v;
    }
    return sum;
}

GaussianRational MultiPoly::evaluate(std::span<const GaussianRational, kNumVars> point) const
{
    GaussianRational sum;
    for (const auto& t : terms_) {
        GaussianRational v = t.coeff;
        for (int i = 0; i < kNumVars; ++i)
            if (t.mono[i]) v *= ipow(point[i], t.mono[i]);
        sum += v;
    }
    return sum;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : terms_) {
        bool negative = false;
        std::string body;
        if (t.coeff.is_real()) {
            negative = t.coeff.re().sign() < 0;
            Rational a = t.coeff.re().abs();
            if (t.mono.is_one())
                body = a.to_string();
            else if (a.is_one())
                body = t.mono.to_string();
            else
                body = a.to_string() + "*" + t.mono.to_string();
        } else {
            body = "(" + t.coeff.to_string() + ")";
            if (!t.mono.is_one()) body += "*" + t.mono.to_string();
        }
        if (first)
            s += negative ? "-" + body : body;
        else
            s += (negative ? " - " : " + ") + body;
        first = false;
    }
    return s;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    terms_ = merge_sub(terms_, Monomial(), GaussianRational(-1), o.terms_);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    terms_ = merge_sub(terms_, Monomial(), GaussianRational(1), o.terms_);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o)
{
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const GaussianRational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    if (a.size() < b.size()) return b * a;
    MultiPoly r;
    for (const auto& t : b.terms_) r.terms_ = merge_sub(r.terms_, t.mono, -t.coeff, a.terms_);
    return r;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const GaussianRational& c) const
{
    MultiPoly r;
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
}

MultiPoly MultiPoly::sub_mul_term(const Monomial& m, const GaussianRational& c, const MultiPoly& other) const
{
    MultiPoly r;
    r.terms_ = merge_sub(terms_, m, c, other.terms_);
    return r;
}

MultiPoly pow(const MultiPoly& p, int exponent)
{
    if (exponent < 0) throw std::domain_error("negative exponent");
    MultiPoly r(1);
    for (int k = 0; k < exponent; ++k) r *= p;
    return r;
}

MultiPoly apply(PolyOp op, const MultiPoly& a, const MultiPoly& b)
{
    switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
    }
    throw std::logic_error("unknown polynomial operation");
}

Division multi_divide(const MultiPoly& f, std::span<const MultiPoly> divisors)
{
    for (const auto& g : divisors)
        if (g.is_zero()) throw std::domain_error("division by the zero polynomial");
    Division d;
    d.quotients.resize(divisors.size());
    std::vector<std::vector<Term>> quotient_terms(divisors.size());
    std::vector<Term> remainder;
    MultiPoly p = f;
    while (!p.is_zero()) {
        const Term lt = p.leading_term();
        bool divided = false;
        for (std::size_t k = 0; k < divisors.size(); ++k) {
            const Term& glt = divisors[k].leading_term();
            if (!glt.mono.divides(lt.mono)) continue;
            Monomial m = lt.mono / glt.mono;
            GaussianRational c = lt.coeff / glt.coeff;
            p = p.sub_mul_term(m, c, divisors[k]);
            quotient_terms[k].push_back({m, std::move(c)});
            divided = true;
            break;
        }
        if (!divided) {
            remainder.push_back(lt);
            p = p.sub_mul_term(Monomial(), GaussianRational(1), MultiPoly(lt.mono, lt.coeff));
        }
    }
    for (std::size_t k = 0; k < divisors.size(); ++k)
        d.quotients[k] = MultiPoly::from_terms(std::move(quotient_terms[k]));
    d.remainder = MultiPoly::from_terms(std::move(remainder));
    return d;
}

MultiPoly reduce(const MultiPoly& f, std::span<const MultiPoly> divisors)
{
    std::vector<Term> remainder;
    MultiPoly p = f;
    std::vector<Term> work(p.terms().begin(), p.terms().end());
    std::size_t pos = 0;
    while (pos < work.size()) {
        const Term& lt = work[pos];
        const MultiPoly* hit = nullptr;
        for (const auto& g : divisors) {
            if (g.leading_monomial().divides(lt.mono)) {
                hit = &g;
                break;
            }
        }
        if (!hit) {
            remainder.push_back(lt);
            ++pos;
            continue;
        }
        const Term& glt = hit->leading_term();
        Monomial m = lt.mono / glt.mono;
        GaussianRational c = lt.coeff / glt.coeff;
        std::span<const Term> tail(work.data() + pos + 1, work.size() - pos - 1);
        std::span<const Term> gtail = hit->terms().subspan(1);
        work = merge_sub(tail, m, c, gtail);
        pos = 0;
    }
    // Remainder terms were emitted in strictly descending order.
    return MultiPoly::from_terms(std::move(remainder));
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g)
{
    const Term& ft = f.leading_term();
    const Term& gt = g.leading_term();
    Monomial l = ft.mono.lcm(gt.mono);
    MultiPoly a = f.mul_term(l / ft.mono, ft.coeff.inverse());
    return a.sub_mul_term(l / gt.mono, gt.coeff.inverse(), g);
}

}  // namespace rpr
