#pragma once

// Sparse univariate polynomials over an exact field. One template serves both
// tower layers: Q[lam] with Rational coefficients and k[t] with k = Q(lam)
// coefficients. Terms are kept sorted by ascending exponent with no stored
// zeros; the zero polynomial has no terms.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace freealg {

// Deterministic total order on coefficients, specialized per field. Only used
// to keep factor lists and term comparisons canonical.
template <class F>
struct CoeffOrder;

template <class F>
class Poly {
  public:
    using Coeff = F;
    using Term = std::pair<std::int64_t, F>;

    Poly() = default;
    explicit Poly(const F& c) {
        if (!(c == F(0))) terms_.emplace_back(0, c);
    }
    static Poly monomial(std::int64_t exp, const F& c) {
        Poly p;
        if (!(c == F(0))) p.terms_.emplace_back(exp, c);
        return p;
    }
    static Poly variable() { return monomial(1, F(1)); }

    // Takes any term list, merges duplicates, drops zeros.
    static Poly from_terms(std::vector<Term> ts) {
        std::sort(ts.begin(), ts.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        Poly p;
        for (auto& [e, c] : ts) {
            if (!p.terms_.empty() && p.terms_.back().first == e)
                p.terms_.back().second += c;
            else
                p.terms_.emplace_back(e, std::move(c));
            if (!p.terms_.empty() && p.terms_.back().second == F(0)) p.terms_.pop_back();
        }
        return p;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

    std::int64_t degree() const {  // degree of 0 is -1 by convention
        return terms_.empty() ? -1 : terms_.back().first;
    }
    std::int64_t valuation() const {  // smallest exponent; 0 for the zero polynomial
        return terms_.empty() ? 0 : terms_.front().first;
    }
    const F& leading_coeff() const {
        if (terms_.empty()) throw std::domain_error("poly: leading coefficient of 0");
        return terms_.back().second;
    }
    F coeff(std::int64_t e) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                                   [](const Term& t, std::int64_t x) { return t.first < x; });
        return (it != terms_.end() && it->first == e) ? it->second : F(0);
    }
    F constant_term() const { return coeff(0); }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    Poly operator+(const Poly& o) const {
        Poly r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin(), b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
                r.terms_.push_back(*a++);
            } else if (a == terms_.end() || b->first < a->first) {
                r.terms_.push_back(*b++);
            } else {
                F c = a->second + b->second;
                if (!(c == F(0))) r.terms_.emplace_back(a->first, std::move(c));
                ++a, ++b;
            }
        }
        return r;
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        // Accumulate into a dense window; exponent spans stay modest here.
        std::int64_t lo = valuation() + o.valuation();
        std::int64_t hi = degree() + o.degree();
        std::vector<F> acc(static_cast<std::size_t>(hi - lo + 1), F(0));
        for (const auto& [ea, ca] : terms_)
            for (const auto& [eb, cb] : o.terms_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
        Poly r;
        for (std::size_t i = 0; i < acc.size(); ++i)
            if (!(acc[i] == F(0))) r.terms_.emplace_back(lo + static_cast<std::int64_t>(i), std::move(acc[i]));
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const F& c) const {
        if (c == F(0)) return Poly();
        Poly r = *this;
        for (auto& [e, k] : r.terms_) k = k * c;
        return r;
    }
    Poly shifted(std::int64_t d) const {  // multiply by x^d
        Poly r = *this;
        for (auto& [e, c] : r.terms_) e += d;
        return r;
    }
    // Coefficient-wise map; f must send nonzero to nonzero (field maps do).
    Poly mapped(const std::function<F(const F&)>& f) const {
        Poly r = *this;
        for (auto& [e, c] : r.terms_) c = f(c);
        return r;
    }
    Poly monic() const {
        if (is_zero()) return *this;
        return scaled(F(1) / leading_coeff());
    }

    Poly derivative() const {
        Poly r;
        for (const auto& [e, c] : terms_) {
            if (e == 0) continue;
            F k = c * F(static_cast<int>(e));
            if (!(k == F(0))) r.terms_.emplace_back(e - 1, std::move(k));
        }
        return r;
    }

    // Reverse with star applied to nothing: p(1/x) * x^degree. Exponents must
    // be non-negative.
    Poly reversed() const {
        if (is_zero()) return *this;
        assert(valuation() >= 0);
        Poly r;
        const std::int64_t d = degree();
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
            r.terms_.emplace_back(d - it->first, it->second);
        return r;
    }

    F evaluate(const F& x) const {
        // Horner on the sparse list; exponents must be non-negative.
        if (is_zero()) return F(0);
        assert(valuation() >= 0);
        F acc(0);
        std::int64_t e_prev = -1;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (e_prev >= 0)
                for (std::int64_t k = it->first; k < e_prev; ++k) acc = acc * x;
            acc += it->second;
            e_prev = it->first;
        }
        for (std::int64_t k = 0; k < e_prev; ++k) acc = acc * x;
        return acc;
    }

    struct DivMod {
        Poly quot, rem;
    };
    // Euclidean division; requires non-negative exponents and d != 0.
    DivMod divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("poly: division by zero");
        assert(valuation() >= 0 && d.valuation() >= 0);
        DivMod out;
        out.rem = *this;
        const F& lc = d.leading_coeff();
        while (!out.rem.is_zero() && out.rem.degree() >= d.degree()) {
            std::int64_t e = out.rem.degree() - d.degree();
            F c = out.rem.leading_coeff() / lc;
            Poly t = Poly::monomial(e, c);
            out.quot += t;
            out.rem -= d * t;
        }
        return out;
    }
    Poly operator/(const Poly& d) const {  // exact division; throws if inexact
        DivMod dm = divmod(d);
        if (!dm.rem.is_zero()) throw std::domain_error("poly: inexact division");
        return dm.quot;
    }
    bool divisible_by(const Poly& d) const { return divmod(d).rem.is_zero(); }

    // Deterministic total order, used to keep factor lists canonical.
    int compare(const Poly& o) const {
        if (degree() != o.degree()) return degree() < o.degree() ? -1 : 1;
        auto a = terms_.rbegin();
        auto b = o.terms_.rbegin();
        for (; a != terms_.rend() && b != o.terms_.rend(); ++a, ++b) {
            if (a->first != b->first) return a->first > b->first ? -1 : 1;
            if (!(a->second == b->second)) return coeff_less(a->second, b->second) ? -1 : 1;
        }
        if (a != terms_.rend()) return 1;
        if (b != o.terms_.rend()) return -1;
        return 0;
    }

    std::string to_string(const std::string& var,
                          const std::function<std::string(const F&)>& coeff_str) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string cs = coeff_str(c);
            bool needs_paren = cs.find_first_of("+-/ ") != std::string::npos && cs.size() > 1;
            if (e == 0) {
                out += cs;
            } else {
                if (cs == "1") {
                    out += var;
                } else if (cs == "-1") {
                    out += "-" + var;
                } else {
                    out += (needs_paren ? "(" + cs + ")" : cs) + "*" + var;
                }
                if (e != 1) out += "^" + std::to_string(e);
            }
        }
        return out;
    }

  private:
    static bool coeff_less(const F& a, const F& b) { return CoeffOrder<F>::less(a, b); }

    std::vector<Term> terms_;
};

}  // namespace freealg
