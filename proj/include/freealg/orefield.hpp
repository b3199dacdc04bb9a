#pragma once

// Q, the Ore field of fractions of K[X; sigma], as canonical left fractions
// den^-1 * num. The denominator is a genuine polynomial in X (min exponent 0)
// with monic leading coefficient and no common left factor with the twisted
// polynomial part of the numerator; the numerator may be Laurent, which is
// where the X-adic valuation lives.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "freealg/skewpoly.hpp"
#include "freealg/skewseries.hpp"

namespace freealg {

struct Valuation {
    bool infinite = false;  // nu(0) = +infinity
    std::int64_t value = 0;

    bool operator==(const Valuation& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
    static Valuation of(std::int64_t v) { return {false, v}; }
    static Valuation infinity() { return {true, 0}; }
};

class OreElement {
  public:
    OreElement() : den_(1), num_() {}
    explicit OreElement(int n) : den_(1), num_(n) {}
    explicit OreElement(const FieldK& c) : den_(1), num_(c) {}
    explicit OreElement(const SkewLaurentPoly& p) : den_(1), num_(p) {}
    OreElement(SkewLaurentPoly den, SkewLaurentPoly num) : den_(std::move(den)), num_(std::move(num)) {
        if (den_.is_zero()) throw std::domain_error("ore: zero denominator");
        normalize();
    }

    static OreElement X(std::int64_t e = 1) { return OreElement(SkewLaurentPoly::X(e)); }

    const SkewLaurentPoly& den() const { return den_; }
    const SkewLaurentPoly& num() const { return num_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const OreElement& o) const;
    bool operator!=(const OreElement& o) const { return !(*this == o); }

    OreElement operator-() const;
    OreElement operator+(const OreElement& o) const;
    OreElement operator-(const OreElement& o) const;
    OreElement operator*(const OreElement& o) const;
    OreElement operator/(const OreElement& o) const;
    OreElement& operator+=(const OreElement& o) { return *this = *this + o; }
    OreElement& operator-=(const OreElement& o) { return *this = *this - o; }
    OreElement& operator*=(const OreElement& o) { return *this = *this * o; }
    OreElement& operator/=(const OreElement& o) { return *this = *this / o; }

    OreElement inverse() const;
    OreElement pow(std::int64_t e) const;

    std::string to_string() const;

  private:
    void normalize();

    SkewLaurentPoly den_, num_;
};

enum class OreOp { add, sub, mul, div };
OreElement ore_arith(const OreElement& x, const OreElement& y, OreOp op);

// The star involution of Q extending the coefficient star and X -> X^-1.
OreElement star(const OreElement& x);

// X-adic valuation: zero on K, nu(X) = 1, nu(0) = +infinity.
Valuation valuation(const OreElement& x);

// The unique series agreeing with x on [nu(x), nu(x) + window).
TruncatedSkewSeries to_series(const OreElement& x, std::int64_t window);

}  // namespace freealg
