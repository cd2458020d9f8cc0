#include "pgeom/io.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace pgeom {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Digit string -> BigInt. Strips leading zeros: cpp_int's string constructor
// would read them as an octal prefix.
BigInt digits_to_bigint(std::string digits) {
    std::size_t first = digits.find_first_not_of('0');
    if (first == std::string::npos) return BigInt(0);
    return BigInt(digits.substr(first));
}

// Signed integer token -> BigInt. Rejects anything that is not [+-]?digits.
BigInt parse_bigint(const std::string& token) {
    std::string body = token;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    if (!all_digits(body)) fail(Err::Parse, "bad integer '" + token + "'");
    BigInt v = digits_to_bigint(body);
    return negative ? BigInt(-v) : v;
}

BigInt pow10(unsigned long exponent) {
    BigInt v(1);
    for (unsigned long i = 0; i < exponent; ++i) v *= 10;
    return v;
}

// Decimal or scientific literal converted to an exact rational.
Rational parse_decimal_rational(const std::string& token) {
    std::string body = token;
    bool negative = false;
    if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
        negative = body[0] == '-';
        body = body.substr(1);
    }
    long long exp10 = 0;
    std::size_t epos = body.find_first_of("eE");
    if (epos != std::string::npos) {
        std::string etok = body.substr(epos + 1);
        body = body.substr(0, epos);
        bool eneg = false;
        if (!etok.empty() && (etok[0] == '+' || etok[0] == '-')) {
            eneg = etok[0] == '-';
            etok = etok.substr(1);
        }
        if (!all_digits(etok) || etok.size() > 6) fail(Err::Parse, "bad exponent in '" + token + "'");
        exp10 = std::strtoll(etok.c_str(), nullptr, 10);
        if (eneg) exp10 = -exp10;
    }
    std::string int_part = body, frac_part;
    std::size_t dot = body.find('.');
    if (dot != std::string::npos) {
        int_part = body.substr(0, dot);
        frac_part = body.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) fail(Err::Parse, "bad number '" + token + "'");
    if (!int_part.empty() && !all_digits(int_part)) fail(Err::Parse, "bad number '" + token + "'");
    if (!frac_part.empty() && !all_digits(frac_part)) fail(Err::Parse, "bad number '" + token + "'");
    BigInt num = digits_to_bigint(int_part + frac_part);
    BigInt den = pow10(frac_part.size());
    if (exp10 > 0)
        num *= pow10(static_cast<unsigned long>(exp10));
    else if (exp10 < 0)
        den *= pow10(static_cast<unsigned long>(-exp10));
    if (negative) num = -num;
    return Rational(num) / Rational(den);
}

}  // namespace

Rational parse_rational(const std::string& token) {
    if (token.empty()) fail(Err::Parse, "empty scalar");
    std::size_t slash = token.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_bigint(token.substr(0, slash));
        BigInt den = parse_bigint(token.substr(slash + 1));
        if (den.is_zero()) fail(Err::Parse, "zero denominator in '" + token + "'");
        return Rational(num) / Rational(den);
    }
    if (token.find_first_of(".eE") != std::string::npos) return parse_decimal_rational(token);
    return Rational(parse_bigint(token));
}

double parse_double(const std::string& token) {
    if (token.empty()) fail(Err::Parse, "empty scalar");
    if (token.find('/') != std::string::npos) {
        // Accept the rational form for the float backend as well.
        return static_cast<double>(parse_rational(token));
    }
    const char* begin = token.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (end != begin + token.size()) fail(Err::Parse, "bad number '" + token + "'");
    return v;
}

std::string format_rational(const Rational& value) {
    std::ostringstream os;
    os << numerator(value);
    if (denominator(value) != 1) os << "/" << denominator(value);
    return os.str();
}

std::string format_decimal(double value, int significant) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, value);
    return buf;
}

std::string format_extended(const ExtendedScalar<Rational>& value) {
    if (value.infinite) return "inf";
    return format_rational(value.value) + " (" +
           format_decimal(static_cast<double>(value.value)) + ")";
}

std::string format_extended(const ExtendedScalar<double>& value) {
    if (value.infinite) return "inf";
    return format_decimal(value.value);
}

namespace detail {

std::vector<std::string> tokenize_line(const std::string& line) {
    std::string body = line;
    std::size_t hash = body.find('#');
    if (hash != std::string::npos) body = body.substr(0, hash);
    std::istringstream is(body);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

void parse_fail(const std::string& name, std::size_t lineno, const std::string& what) {
    fail(Err::Parse, name + ":" + std::to_string(lineno) + ": " + what);
}

}  // namespace detail

}  // namespace pgeom
