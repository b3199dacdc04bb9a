#pragma once

// Truncated power series in the free associative algebra Q<a, b>: words over
// {a, b} with rational coefficients, cut at a total degree. The Magnus units
// x = 1 + a, y = 1 + b realize the free-monoid model.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "freealg/rational.hpp"

namespace freealg {

// Graded order: by length, then lexicographic. Keeps printing and
// linearization deterministic.
struct WordOrder {
    bool operator()(const std::string& u, const std::string& v) const {
        if (u.size() != v.size()) return u.size() < v.size();
        return u < v;
    }
};

class FreeSeries {
  public:
    using Terms = std::map<std::string, Rational, WordOrder>;

    explicit FreeSeries(std::int64_t trunc) : trunc_(trunc) {
        if (trunc < 0) throw std::domain_error("freeseries: negative truncation");
    }
    static FreeSeries scalar(const Rational& c, std::int64_t trunc) {
        FreeSeries s(trunc);
        if (!freealg::is_zero(c)) s.terms_[""] = c;
        return s;
    }
    static FreeSeries letter(char l, std::int64_t trunc) {
        if (l != 'a' && l != 'b') throw std::domain_error("freeseries: alphabet is {a, b}");
        FreeSeries s(trunc);
        if (trunc >= 1) s.terms_[std::string(1, l)] = Rational(1);
        return s;
    }

    std::int64_t trunc() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const std::string& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coeff(""); }

    bool operator==(const FreeSeries& o) const {
        return trunc_ == o.trunc_ && terms_ == o.terms_;
    }
    bool operator!=(const FreeSeries& o) const { return !(*this == o); }
    // Equality of coefficients up to the shared truncation.
    bool agrees_with(const FreeSeries& o) const {
        const std::size_t h = static_cast<std::size_t>(std::min(trunc_, o.trunc_));
        auto a = terms_.begin();
        auto b = o.terms_.begin();
        while (true) {
            while (a != terms_.end() && a->first.size() > h) ++a;
            while (b != o.terms_.end() && b->first.size() > h) ++b;
            if (a == terms_.end() || b == o.terms_.end()) break;
            if (a->first != b->first || a->second != b->second) return false;
            ++a, ++b;
        }
        while (a != terms_.end() && a->first.size() > h) ++a;
        while (b != o.terms_.end() && b->first.size() > h) ++b;
        return a == terms_.end() && b == o.terms_.end();
    }

    FreeSeries operator-() const {
        FreeSeries r = *this;
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }
    FreeSeries operator+(const FreeSeries& o) const {
        FreeSeries r(std::min(trunc_, o.trunc_));
        r.terms_ = truncated_terms(terms_, r.trunc_);
        for (const auto& [w, c] : o.terms_) {
            if (static_cast<std::int64_t>(w.size()) > r.trunc_) continue;
            auto [it, fresh] = r.terms_.try_emplace(w, c);
            if (!fresh) {
                it->second += c;
                if (freealg::is_zero(it->second)) r.terms_.erase(it);
            }
        }
        return r;
    }
    FreeSeries operator-(const FreeSeries& o) const { return *this + (-o); }
    FreeSeries operator*(const FreeSeries& o) const {
        FreeSeries r(std::min(trunc_, o.trunc_));
        for (const auto& [u, cu] : terms_) {
            if (static_cast<std::int64_t>(u.size()) > r.trunc_) continue;
            for (const auto& [v, cv] : o.terms_) {
                if (static_cast<std::int64_t>(u.size() + v.size()) > r.trunc_) break;
                Rational c = cu * cv;
                auto [it, fresh] = r.terms_.try_emplace(u + v, c);
                if (!fresh) {
                    it->second += c;
                    if (freealg::is_zero(it->second)) r.terms_.erase(it);
                }
            }
        }
        return r;
    }
    FreeSeries& operator+=(const FreeSeries& o) { return *this = *this + o; }
    FreeSeries& operator-=(const FreeSeries& o) { return *this = *this - o; }
    FreeSeries& operator*=(const FreeSeries& o) { return *this = *this * o; }

    FreeSeries scaled(const Rational& c) const {
        if (freealg::is_zero(c)) return FreeSeries(trunc_);
        FreeSeries r = *this;
        for (auto& [w, k] : r.terms_) k *= c;
        return r;
    }

    // Two-sided inverse, defined when the constant term is nonzero:
    // u = c(1 + w) with w of positive degree, u^-1 = (sum (-w)^k) / c.
    FreeSeries inverted() const {
        const Rational c = constant_term();
        if (freealg::is_zero(c))
            throw std::domain_error("freeseries: zero constant term is not invertible");
        FreeSeries w = scaled(Rational(1) / c) - scalar(Rational(1), trunc_);
        FreeSeries acc = scalar(Rational(1), trunc_);
        FreeSeries term = acc;
        for (std::int64_t k = 1; k <= trunc_ && !term.is_zero(); ++k) {
            term = term * (-w);
            acc += term;
        }
        return acc.scaled(Rational(1) / c);
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string word = w.empty() ? "1" : w;
            std::string cs = freealg::to_string(c);
            out += (cs == "1" && !w.empty()) ? word : (w.empty() ? cs : cs + "*" + word);
        }
        return out;
    }

  private:
    static Terms truncated_terms(const Terms& ts, std::int64_t trunc) {
        Terms out;
        for (const auto& [w, c] : ts)
            if (static_cast<std::int64_t>(w.size()) <= trunc) out.emplace(w, c);
        return out;
    }

    std::int64_t trunc_;
    Terms terms_;
};

enum class FsOp { add, mul };

inline FreeSeries fs_arith(const FreeSeries& u, const FreeSeries& v, FsOp op) {
    return op == FsOp::add ? u + v : u * v;
}
inline FreeSeries fs_invert(const FreeSeries& u) { return u.inverted(); }

// The display identity behind the free-monoid construction:
// (x + x^-1)^-1 = x (1 + x^2)^-1 for any unit x, checked at the working
// truncation.
inline bool fs_check_identity_f_inv(const FreeSeries& x) {
    FreeSeries f = x + x.inverted();
    FreeSeries one = FreeSeries::scalar(Rational(1), x.trunc());
    FreeSeries lhs = f.inverted();
    FreeSeries rhs = x * (one + x * x).inverted();
    return lhs == rhs;
}

}  // namespace freealg
