#pragma once

// Exact rational scalars for the whole library. GMP does the heavy lifting;
// mpq_class already maintains the canonical form (reduced, positive
// denominator, 0 = 0/1).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace freealg {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n, long d = 1) {
    if (d == 0) throw std::domain_error("rational: zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline Rational pow_rat(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (is_zero(q)) {
        if (e < 0) throw std::domain_error("rational: 0 to a negative power");
        return Rational(0);
    }
    Rational base = e < 0 ? Rational(1) / q : q;
    Rational acc(1);
    for (long k = e < 0 ? -e : e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
    }
    return acc;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses "p" or "p/q"; returns nothing on malformed input.
inline std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

}  // namespace freealg
