#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "foliage/error.hpp"

namespace foliage {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long numerator, long denominator = 1) {
    if (denominator == 0) throw PreconditionError("zero denominator");
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& numerator, const Integer& denominator = 1) {
    if (denominator == 0) throw PreconditionError("zero denominator");
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Exact square root over Q, if r is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (sgn(r) < 0) return std::nullopt;
    const Integer n = r.get_num();
    const Integer d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return make_rational(sn, sd);
}

/// Parses "a" or "a/b" with an optional leading sign.
inline Rational parse_rational(std::string_view text) {
    std::string s(text);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t first = s.find_first_not_of(" \t");
    if (first == std::string::npos) throw PreconditionError("empty rational literal");
    s = s.substr(first);
    const std::size_t slash = s.find('/');
    auto parse_int = [](const std::string& part) {
        std::size_t i = (part.size() > 1 && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
        if (i == part.size()) throw PreconditionError("malformed rational literal '" + part + "'");
        for (std::size_t k = i; k < part.size(); ++k)
            if (part[k] < '0' || part[k] > '9')
                throw PreconditionError("malformed rational literal '" + part + "'");
        return Integer(part[0] == '+' ? part.substr(1) : part);
    };
    if (slash == std::string::npos) return Rational(parse_int(s));
    const Integer num = parse_int(s.substr(0, slash));
    const Integer den = parse_int(s.substr(slash + 1));
    if (den == 0) throw PreconditionError("zero denominator in '" + s + "'");
    return make_rational(num, den);
}

}  // namespace foliage
