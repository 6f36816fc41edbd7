#include "rpr/exact.hpp"

#include <cctype>
#include <cmath>

#include <mpfr.h>

namespace rpr {

Rational::Rational(long num, long den)
{
    if (den == 0) throw ArithmeticError("division by zero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (sgn(den) == 0) throw ArithmeticError("division by zero");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

namespace {

bool is_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::parse(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (negative) n = -n;
    return Rational(n, d);
}

double Rational::to_double() const
{
    mpfr_t x;
    mpfr_init2(x, 53);
    mpfr_set_q(x, v_.get_mpq_t(), MPFR_RNDN);
    double d = mpfr_get_d(x, MPFR_RNDN);
    mpfr_clear(x);
    if (!std::isfinite(d)) throw ArithmeticError("rational exceeds double range");
    return d;
}

std::string Rational::to_string() const
{
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::inverse() const
{
    if (is_zero()) throw ArithmeticError("division by zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw ArithmeticError("division by zero");
    v_ /= o.v_;
    return *this;
}

GaussianRational GaussianRational::inverse() const
{
    if (is_zero()) throw ArithmeticError("division by zero");
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

std::string GaussianRational::to_string() const
{
    if (im_.is_zero()) return re_.to_string();
    std::string imag;
    if (im_.is_one())
        imag = "I";
    else if (im_ == Rational(-1))
        imag = "-I";
    else
        imag = im_.to_string() + "*I";
    if (re_.is_zero()) return imag;
    return re_.to_string() + (im_.sign() > 0 ? "+" : "") + imag;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
    if (o.is_zero()) throw ArithmeticError("division by zero");
    if (o.im_.is_zero()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

GaussianRational apply(FieldOp op, const GaussianRational& a, const GaussianRational& b)
{
    switch (op) {
    case FieldOp::add: return a + b;
    case FieldOp::sub: return a - b;
    case FieldOp::mul: return a * b;
    case FieldOp::div: return a / b;
    }
    throw std::logic_error("unknown field operation");
}

}  // namespace rpr
