#pragma once

// Truncated skew Laurent series over K: the computational backend behind
// series expansion of Ore elements and the freeness certifier.
//
// A value represents "terms + O(X^hi)": every exponent below hi is stored
// exactly, nothing is claimed at hi and above. The effective window is
// [start, hi) with start the lowest stored exponent, so inverting X^e*(unit)
// costs 2e of upper precision but keeps the window length, as it must.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freealg/skewpoly.hpp"
#include "freealg/tower.hpp"

namespace freealg {

class TruncatedSkewSeries {
  public:
    using Term = std::pair<std::int64_t, FieldK>;

    TruncatedSkewSeries() : hi_(0) {}
    static TruncatedSkewSeries zero(std::int64_t hi) {
        TruncatedSkewSeries s;
        s.hi_ = hi;
        return s;
    }
    static TruncatedSkewSeries from_poly(const SkewLaurentPoly& p, std::int64_t hi) {
        TruncatedSkewSeries s;
        s.hi_ = hi;
        for (const auto& [e, c] : p.terms())
            if (e < hi) s.terms_.push_back({e, c});
        return s;
    }
    static TruncatedSkewSeries constant(const FieldK& c, std::int64_t hi) {
        return from_poly(SkewLaurentPoly(c), hi);
    }

    const std::vector<Term>& terms() const { return terms_; }
    std::int64_t hi() const { return hi_; }
    bool zero_on_window() const { return terms_.empty(); }
    std::int64_t start() const { return terms_.empty() ? hi_ : terms_.front().first; }
    std::int64_t window_length() const { return hi_ - start(); }

    FieldK coeff(std::int64_t e) const {
        for (const auto& [i, c] : terms_)
            if (i == e) return c;
        return FieldK();
    }

    // Equality of the known coefficients on the shared window.
    bool agrees_with(const TruncatedSkewSeries& o) const {
        const std::int64_t h = std::min(hi_, o.hi_);
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        while (true) {
            while (a != terms_.end() && a->first >= h) ++a;
            while (b != o.terms_.end() && b->first >= h) ++b;
            if (a == terms_.end() || b == o.terms_.end()) break;
            if (a->first != b->first || !(a->second == b->second)) return false;
            ++a, ++b;
        }
        while (a != terms_.end() && a->first >= h) ++a;
        while (b != o.terms_.end() && b->first >= h) ++b;
        return a == terms_.end() && b == o.terms_.end();
    }

    TruncatedSkewSeries truncated(std::int64_t new_hi) const {
        TruncatedSkewSeries s;
        s.hi_ = std::min(new_hi, hi_);
        for (const auto& t : terms_)
            if (t.first < s.hi_) s.terms_.push_back(t);
        return s;
    }

    TruncatedSkewSeries operator-() const {
        TruncatedSkewSeries s = *this;
        for (auto& [e, c] : s.terms_) c = -c;
        return s;
    }

    TruncatedSkewSeries operator+(const TruncatedSkewSeries& o) const {
        TruncatedSkewSeries s;
        s.hi_ = std::min(hi_, o.hi_);
        auto a = terms_.begin(), b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
                if (a->first < s.hi_) s.terms_.push_back(*a);
                ++a;
            } else if (a == terms_.end() || b->first < a->first) {
                if (b->first < s.hi_) s.terms_.push_back(*b);
                ++b;
            } else {
                if (a->first < s.hi_) {
                    FieldK c = a->second + b->second;
                    if (!c.is_zero()) s.terms_.push_back({a->first, std::move(c)});
                }
                ++a, ++b;
            }
        }
        return s;
    }
    TruncatedSkewSeries operator-(const TruncatedSkewSeries& o) const { return *this + (-o); }

    TruncatedSkewSeries operator*(const TruncatedSkewSeries& o) const {
        // Lower bounds on the valuations decide the reachable precision:
        // x = T1 + O(X^h1), y = T2 + O(X^h2) gives
        // xy = T1*T2 + O(X^{min(v(x)+h2, v(y)+h1)}).
        TruncatedSkewSeries s;
        s.hi_ = std::min(start() + o.hi_, o.start() + hi_);
        if (terms_.empty() || o.terms_.empty()) return s;
        std::vector<Term> acc;
        for (const auto& [i, a] : terms_) {
            for (const auto& [j, b] : o.terms_) {
                if (i + j >= s.hi_) continue;
                FieldK c = a.sigma_power(j) * b;
                if (!c.is_zero()) acc.push_back({i + j, std::move(c)});
            }
        }
        SkewLaurentPoly collected = SkewLaurentPoly::from_terms(std::move(acc));
        for (const auto& t : collected.terms()) s.terms_.push_back(t);
        return s;
    }
    TruncatedSkewSeries& operator+=(const TruncatedSkewSeries& o) { return *this = *this + o; }
    TruncatedSkewSeries& operator-=(const TruncatedSkewSeries& o) { return *this = *this - o; }
    TruncatedSkewSeries& operator*=(const TruncatedSkewSeries& o) { return *this = *this * o; }

    // Exact monomial multiplications shift the window without losing length.
    TruncatedSkewSeries mul_monomial_left(std::int64_t k, const FieldK& c) const {
        // (X^k c) * (X^e a) = X^{k+e} c^{sigma^e} a
        TruncatedSkewSeries s;
        s.hi_ = hi_ + k;
        for (const auto& [e, a] : terms_) s.terms_.push_back({e + k, c.sigma_power(e) * a});
        return s;
    }
    TruncatedSkewSeries mul_monomial_right(std::int64_t k, const FieldK& c) const {
        // (X^e a) * (X^k c) = X^{e+k} a^{sigma^k} c
        TruncatedSkewSeries s;
        s.hi_ = hi_ + k;
        for (const auto& [e, a] : terms_) s.terms_.push_back({e + k, a.sigma_power(k) * c});
        return s;
    }

    // Two-sided inverse via geometric expansion of the part above the lowest
    // term: u = X^e a (1 + w), u^-1 = (sum (-w)^k) a^-1 X^-e.
    TruncatedSkewSeries inverted() const {
        if (terms_.empty()) throw std::domain_error("skewseries: inverse of zero series");
        const std::int64_t e = start();
        const FieldK& a = terms_.front().second;
        // m = (X^e a)^-1 = X^-e (a^-1)^{sigma^{-e}}
        const FieldK minv = a.inverse().sigma_power(e);
        TruncatedSkewSeries w = mul_monomial_left(-e, minv);
        // w now equals 1 + (positive-valuation tail), window [0, hi - e).
        TruncatedSkewSeries one = constant(FieldK(1), w.hi_);
        w = w - one;
        TruncatedSkewSeries acc = one, term = one;
        const std::int64_t steps = w.hi_;
        for (std::int64_t k = 1; k <= steps && !term.zero_on_window(); ++k) {
            term = term * (-w);
            term.hi_ = std::min(term.hi_, one.hi_);
            acc = acc + term;
        }
        return acc.mul_monomial_right(-e, minv);
    }

    std::string to_string() const {
        SkewLaurentPoly p = SkewLaurentPoly::from_terms({terms_.begin(), terms_.end()});
        return p.to_string() + " + O(X^" + std::to_string(hi_) + ")";
    }

  private:
    std::vector<Term> terms_;  // ascending exponents, all < hi_
    std::int64_t hi_;
};

inline TruncatedSkewSeries ts_mul(const TruncatedSkewSeries& u, const TruncatedSkewSeries& v) {
    return u * v;
}
inline TruncatedSkewSeries ts_invert(const TruncatedSkewSeries& u) { return u.inverted(); }

}  // namespace freealg
