#include "imult/rational.hpp"

#include <cctype>

namespace imult {

Rational Rational::from_string(const std::string& text) {
    std::size_t i = 0, end = text.size();
    while (i < end && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    while (end > i && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (i == end) throw math_error("empty rational literal");

    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    std::string num, den;
    while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) num += text[i++];
    if (num.empty()) throw math_error("malformed rational literal: " + text);
    if (i < end && text[i] == '/') {
        ++i;
        while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) den += text[i++];
        if (den.empty()) throw math_error("malformed rational literal: " + text);
    }
    if (i != end) throw math_error("malformed rational literal: " + text);

    Rational r = den.empty() ? Rational(Integer(num)) : Rational(Integer(num), Integer(den));
    return neg ? -r : r;
}

}  // namespace imult
