#include "arrcoh/rational.hpp"

#include <cctype>

#include "arrcoh/errors.hpp"

namespace arrcoh {

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0) throw InputError("rational with zero denominator");
    Rational q(numerator, denominator);
    q.canonicalize();
    return q;
}

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den))
        throw InputError("invalid rational literal: '" + std::string(text) + "'");
    const mpz_class n{std::string(num)};
    const mpz_class d{std::string(den)};
    if (d == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_str();
}

} // namespace arrcoh
