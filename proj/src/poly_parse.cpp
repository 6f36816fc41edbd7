// Recursive-descent parser for the polynomial text grammar:
//
//   expr    := [+|-] term { (+|-) term }
//   term    := factor { (*|/) factor }        division only by nonzero constants
//   factor  := primary [ ^ integer ]
//   primary := integer | I | variable | ( expr )

#include <cctype>

#include "rpr/multipoly.hpp"

namespace rpr {

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    MultiPoly parse()
    {
        MultiPoly p = expr();
        skip_space();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_space()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    MultiPoly expr()
    {
        MultiPoly acc;
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    MultiPoly term()
    {
        MultiPoly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                MultiPoly d = factor();
                if (!d.is_constant()) fail("division by a non-constant");
                if (d.is_zero()) fail("division by zero");
                acc *= d.leading_coeff().inverse();
            } else {
                return acc;
            }
        }
    }

    MultiPoly factor()
    {
        MultiPoly base = primary();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            if (pos_ - start > 4) fail("exponent too large");
            int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
            base = pow(base, e);
        }
        return base;
    }

    MultiPoly primary()
    {
        skip_space();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MultiPoly(GaussianRational(Rational::parse(s_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string_view name = s_.substr(start, pos_ - start);
            if (name == "I") return MultiPoly(GaussianRational::i());
            int v = var_index(name);
            if (v < 0) {
                pos_ = start;
                fail("unknown variable '" + std::string(name) + "'");
            }
            return MultiPoly::var(static_cast<Var>(v));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text)
{
    return PolyParser(text).parse();
}

}  // namespace rpr
