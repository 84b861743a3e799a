#include "interlacing/rational.hpp"

#include "interlacing/errors.hpp"

#include <cctype>

namespace interlacing {

namespace {

bool is_integer_literal(std::string_view text) {
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    }
    return true;
}

Integer parse_integer(std::string_view text) {
    if (!is_integer_literal(text)) {
        throw InvalidInput("malformed rational component '" + std::string(text) + "'");
    }
    if (text[0] == '+') text.remove_prefix(1);
    return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (sgn(den) <= 0) {
        throw InvalidInput("rational '" + std::string(text) + "' has denominator <= 0");
    }
    Rational value(num, den);
    value.canonicalize();
    return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace interlacing
