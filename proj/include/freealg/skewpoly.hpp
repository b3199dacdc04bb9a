#pragma once

// The skew Laurent polynomial ring K[X, X^-1; sigma] with right coefficients:
// elements are sums X^i * a_i and the commutation rule a*X = X*a^sigma lives
// in one place, inside mul. Both one-sided divisions exist because sigma is
// an automorphism; the left-quotient division drives gcrd/lclm (used by the
// Ore fraction field) and the right-quotient division drives gcld (used to
// reduce left fractions).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freealg/tower.hpp"

namespace freealg {

class SkewLaurentPoly {
  public:
    using Term = std::pair<std::int64_t, FieldK>;

    SkewLaurentPoly() = default;
    explicit SkewLaurentPoly(const FieldK& c) {
        if (!c.is_zero()) terms_.push_back({0, c});
    }
    explicit SkewLaurentPoly(int n) : SkewLaurentPoly(FieldK(n)) {}
    static SkewLaurentPoly monomial(std::int64_t exp, const FieldK& c) {
        SkewLaurentPoly p;
        if (!c.is_zero()) p.terms_.push_back({exp, c});
        return p;
    }
    static SkewLaurentPoly X(std::int64_t exp = 1) { return monomial(exp, FieldK(1)); }
    static SkewLaurentPoly from_terms(std::vector<Term> ts);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == FieldK(1); }

    std::int64_t degree() const {  // max exponent; -1 for 0 by convention
        return terms_.empty() ? -1 : terms_.back().first;
    }
    std::int64_t min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }
    const FieldK& leading_coeff() const {
        if (terms_.empty()) throw std::domain_error("skewpoly: leading coefficient of 0");
        return terms_.back().second;
    }
    FieldK coeff(std::int64_t e) const;

    bool operator==(const SkewLaurentPoly& o) const;
    bool operator!=(const SkewLaurentPoly& o) const { return !(*this == o); }

    SkewLaurentPoly operator-() const;
    SkewLaurentPoly operator+(const SkewLaurentPoly& o) const;
    SkewLaurentPoly operator-(const SkewLaurentPoly& o) const;
    SkewLaurentPoly operator*(const SkewLaurentPoly& o) const;
    SkewLaurentPoly& operator+=(const SkewLaurentPoly& o) { return *this = *this + o; }
    SkewLaurentPoly& operator-=(const SkewLaurentPoly& o) { return *this = *this - o; }
    SkewLaurentPoly& operator*=(const SkewLaurentPoly& o) { return *this = *this * o; }

    SkewLaurentPoly scaled_right(const FieldK& c) const;  // p * c
    SkewLaurentPoly scaled_left(const FieldK& c) const;   // c * p = sum X^i c^{sigma^i} a_i
    SkewLaurentPoly shifted(std::int64_t k) const;        // X^k * p: plain exponent shift
    // Conjugation by X^k: twisted(p, k) = X^k * p * X^-k; coefficients pick
    // up sigma^{-k}.
    SkewLaurentPoly twisted(std::int64_t k) const;
    // Multiply by X^k on the right: p * X^k = X^k * twisted(p, -k)... spelled
    // out: exponents shift and coefficients pick up sigma^k.
    SkewLaurentPoly shifted_right(std::int64_t k) const;

    // Left-scale so the leading coefficient becomes 1.
    SkewLaurentPoly monic() const;

    std::string to_string() const;

  private:
    std::vector<Term> terms_;
};

struct DivisionResult {
    SkewLaurentPoly quotient, remainder;
};

// p = q * quotient + remainder, deg(remainder) < deg(q). This is the division
// whose Euclidean recursion preserves common left divisors.
DivisionResult right_divide(const SkewLaurentPoly& p, const SkewLaurentPoly& q);

// p = quotient * q + remainder. The right Euclidean algorithm (gcrd, lclm)
// is built on this one.
DivisionResult left_quot_divide(const SkewLaurentPoly& p, const SkewLaurentPoly& q);

// Greatest common right divisor, monic. Inputs nonzero with min exponent 0.
SkewLaurentPoly gcrd(const SkewLaurentPoly& p, const SkewLaurentPoly& q);

// Greatest common left divisor, monic; used to reduce left fractions.
SkewLaurentPoly gcld(const SkewLaurentPoly& p, const SkewLaurentPoly& q);

struct LclmResult {
    SkewLaurentPoly lclm, u, v;  // lclm = u*p = v*q
};
LclmResult lclm(const SkewLaurentPoly& p, const SkewLaurentPoly& q);

// Exact left division: p = g * q, throws if g does not left-divide p.
SkewLaurentPoly left_divide_exact(const SkewLaurentPoly& p, const SkewLaurentPoly& g);

// The star antiautomorphism: X -> X^-1 together with the coefficient star;
// monomial rule (X^i a)* = X^-i (a*)^{sigma^-i}.
SkewLaurentPoly star_poly(const SkewLaurentPoly& p);

}  // namespace freealg
