#include "pbw/rational.hpp"

#include <algorithm>
#include <cctype>

#include "pbw/errors.hpp"

namespace pbw {

namespace {

BigInt parse_integer(std::string_view text, bool allow_sign) {
    std::size_t pos = 0;
    bool negative = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size())
        throw ParseError("empty integer in rational literal");
    for (std::size_t k = pos; k < text.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(text[k])))
            throw ParseError("invalid rational literal: '" + std::string(text) + "'");
    BigInt value(std::string(text.substr(pos)));
    return negative ? BigInt(-value) : value;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, true));
    BigInt num = parse_integer(text.substr(0, slash), true);
    BigInt den = parse_integer(text.substr(slash + 1), false);
    if (den == 0)
        throw ParseError("zero denominator in rational literal: '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& x) {
    if (denominator(x) == 1)
        return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

std::size_t decimal_digits(const BigInt& x) {
    if (x == 0)
        return 1;
    return BigInt(boost::multiprecision::abs(x)).str().size();
}

BigInt binomial(int a, int b) {
    if (b < 0 || b > a)
        return 0;
    b = std::min(b, a - b);
    BigInt result = 1;
    for (int k = 1; k <= b; ++k) {
        result *= a - b + k;
        result /= k; // exact: product of k consecutive integers is divisible by k!
    }
    return result;
}

} // namespace pbw
