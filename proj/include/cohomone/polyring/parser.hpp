#pragma once

// Polynomial literals: "x1^2 - u^2", "(x1 - x2)^2 - u^2", "3/2*x1*x2 + x3".
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (['*'] factor)*
//   factor := atom ['^' integer]
//   atom   := integer ['/' integer] | identifier | '(' expr ')'

#include <cctype>
#include <string>
#include <string_view>

#include "cohomone/polyring/polynomial.hpp"

namespace cohomone::poly {

namespace detail {

class PolyParser {
public:
    PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

    Polynomial parse()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorKind::Parse,
                    "polynomial \"" + std::string(text_) + "\", position " + std::to_string(pos_) + ": " + msg, pos_);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek(char c)
    {
        skip();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    Integer integer()
    {
        skip();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    Polynomial expr()
    {
        Polynomial p(ring_);
        bool negate = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            negate = true;
        }
        Polynomial t = term();
        p += negate ? -t : t;
        for (;;) {
            if (peek('+')) {
                ++pos_;
                p += term();
            } else if (peek('-')) {
                ++pos_;
                p -= term();
            } else {
                return p;
            }
        }
    }

    bool starts_factor()
    {
        skip();
        if (pos_ >= text_.size())
            return false;
        const char c = text_[pos_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    Polynomial term()
    {
        Polynomial p = factor();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                p = p * factor();
            } else if (starts_factor()) {
                p = p * factor();
            } else {
                return p;
            }
        }
    }

    Polynomial factor()
    {
        Polynomial base = atom();
        if (peek('^')) {
            ++pos_;
            const Integer n = integer();
            if (n > 1000)
                fail("exponent too large");
            base = base.pow(static_cast<unsigned>(n.get_ui()));
        }
        return base;
    }

    Polynomial atom()
    {
        skip();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational q(integer());
            if (peek('/')) {
                ++pos_;
                const Integer den = integer();
                if (den == 0)
                    fail("zero denominator");
                q /= Rational(den);
            }
            return Polynomial::constant(ring_, q);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            auto i = ring_->index_of(name);
            if (!i) {
                pos_ = start;
                fail("unknown variable \"" + name + "\"");
            }
            return Polynomial::variable(ring_, *i);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    RingPtr ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Polynomial parse_polynomial(const RingPtr& ring, std::string_view text)
{
    return detail::PolyParser(ring, text).parse();
}

} // namespace cohomone::poly
