#include "imult/parser.hpp"

#include <cctype>

namespace imult {

namespace {

constexpr int kMaxExponent = 4096;

class Parser {
public:
    explicit Parser(const std::string& text)
        : s_(text), ctx_(ExtensionContext::rationals()) {}

    BiPoly run() {
        BiPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    bool starts_primary() {
        const char c = peek();
        return c == 'x' || c == 'y' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    BiPoly expr() {
        BiPoly acc = term();
        for (;;) {
            const char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    // Leading signs fold into the term; '*' and '/' chain with implicit
    // multiplication on factor adjacency.
    BiPoly term() {
        bool negate = eat_signs();
        BiPoly acc = factor();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                bool n = eat_signs();
                acc = acc * factor();
                if (n) acc = -acc;
            } else if (c == '/') {
                const std::size_t at = pos_;
                ++pos_;
                bool n = eat_signs();
                BiPoly d = factor();
                if (d.total_degree() > 0) {
                    pos_ = at;
                    fail("division by a non-constant divisor");
                }
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                Rational divisor;
                d.coeff(0, 0).as_rational(&divisor);
                if (n) divisor = -divisor;
                acc = acc.scaled(FieldElement::from_rational(ctx_, divisor.inverse()));
            } else if (starts_primary()) {
                acc = acc * factor();
            } else {
                break;
            }
        }
        return negate ? -acc : acc;
    }

    bool eat_signs() {
        bool negate = false;
        for (;;) {
            const char c = peek();
            if (c == '-') {
                negate = !negate;
                ++pos_;
            } else if (c == '+') {
                ++pos_;
            } else {
                return negate;
            }
        }
    }

    BiPoly factor() {
        BiPoly base = primary();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("exponent must be a positive integer");
        const std::size_t at = pos_;
        long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + (s_[pos_] - '0');
            if (e > kMaxExponent) {
                pos_ = at;
                fail("exponent overflow");
            }
            ++pos_;
        }
        if (e == 0) {
            pos_ = at;
            fail("exponent must be a positive integer");
        }
        // Square-and-multiply keeps intermediate sizes sane.
        BiPoly acc = BiPoly::constant(ctx_, Rational(1));
        BiPoly sq = base;
        long rest = e;
        while (rest > 0) {
            if (rest & 1) acc = acc * sq;
            rest >>= 1;
            if (rest) sq = sq * sq;
        }
        return acc;
    }

    BiPoly primary() {
        const char c = peek();
        if (c == 'x') {
            ++pos_;
            return BiPoly::variable_x(ctx_);
        }
        if (c == 'y') {
            ++pos_;
            return BiPoly::variable_y(ctx_);
        }
        if (c == '(') {
            ++pos_;
            BiPoly inner = expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return BiPoly::constant(ctx_, Rational(Integer(digits)));
        }
        fail("expected 'x', 'y', a number, or '('");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    ExtensionContext ctx_;
};

}  // namespace

BiPoly parse_poly(const std::string& text) { return Parser(text).run(); }

RatPoint parse_point(const std::string& text) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos)
        throw parse_error("point must be \"px,py\"", text.size());
    try {
        return RatPoint{Rational::from_string(text.substr(0, comma)),
                        Rational::from_string(text.substr(comma + 1))};
    } catch (const math_error& e) {
        throw parse_error(e.what(), 0);
    }
}

std::string render_poly(const BiPoly& f) { return f.str(); }

}  // namespace imult
