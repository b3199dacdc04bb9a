#include "freealg/skewpoly.hpp"

#include <algorithm>
#include <map>

namespace freealg {

SkewLaurentPoly SkewLaurentPoly::from_terms(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    SkewLaurentPoly p;
    for (auto& [e, c] : ts) {
        if (!p.terms_.empty() && p.terms_.back().first == e)
            p.terms_.back().second += c;
        else
            p.terms_.push_back({e, std::move(c)});
        if (!p.terms_.empty() && p.terms_.back().second.is_zero()) p.terms_.pop_back();
    }
    return p;
}

FieldK SkewLaurentPoly::coeff(std::int64_t e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, std::int64_t x) { return t.first < x; });
    return (it != terms_.end() && it->first == e) ? it->second : FieldK();
}

bool SkewLaurentPoly::operator==(const SkewLaurentPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second)
            return false;
    return true;
}

SkewLaurentPoly SkewLaurentPoly::operator-() const {
    SkewLaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

SkewLaurentPoly SkewLaurentPoly::operator+(const SkewLaurentPoly& o) const {
    SkewLaurentPoly r;
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            r.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            r.terms_.push_back(*b++);
        } else {
            FieldK c = a->second + b->second;
            if (!c.is_zero()) r.terms_.push_back({a->first, std::move(c)});
            ++a, ++b;
        }
    }
    return r;
}

SkewLaurentPoly SkewLaurentPoly::operator-(const SkewLaurentPoly& o) const { return *this + (-o); }

SkewLaurentPoly SkewLaurentPoly::operator*(const SkewLaurentPoly& o) const {
    // X^i a * X^j b = X^{i+j} a^{sigma^j} b
    std::map<std::int64_t, FieldK> acc;
    for (const auto& [i, a] : terms_) {
        for (const auto& [j, b] : o.terms_) {
            FieldK c = a.sigma_power(j) * b;
            if (c.is_zero()) continue;
            auto [it, fresh] = acc.try_emplace(i + j, c);
            if (!fresh) {
                it->second += c;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    }
    SkewLaurentPoly r;
    r.terms_.assign(acc.begin(), acc.end());
    return r;
}

SkewLaurentPoly SkewLaurentPoly::scaled_right(const FieldK& c) const {
    if (c.is_zero()) return SkewLaurentPoly();
    SkewLaurentPoly r = *this;
    for (auto& [e, a] : r.terms_) a = a * c;
    return r;
}

SkewLaurentPoly SkewLaurentPoly::scaled_left(const FieldK& c) const {
    if (c.is_zero()) return SkewLaurentPoly();
    SkewLaurentPoly r = *this;
    for (auto& [e, a] : r.terms_) a = c.sigma_power(e) * a;
    return r;
}

SkewLaurentPoly SkewLaurentPoly::shifted(std::int64_t k) const {
    SkewLaurentPoly r = *this;
    for (auto& [e, a] : r.terms_) e += k;
    return r;
}

SkewLaurentPoly SkewLaurentPoly::twisted(std::int64_t k) const {
    SkewLaurentPoly r = *this;
    for (auto& [e, a] : r.terms_) a = a.sigma_power(-k);
    return r;
}

SkewLaurentPoly SkewLaurentPoly::shifted_right(std::int64_t k) const {
    SkewLaurentPoly r = *this;
    for (auto& [e, a] : r.terms_) {
        e += k;
        a = a.sigma_power(k);
    }
    return r;
}

SkewLaurentPoly SkewLaurentPoly::monic() const {
    if (is_zero()) return *this;
    const FieldK& lc = leading_coeff();
    if (lc == FieldK(1)) return *this;
    return scaled_left(lc.inverse().sigma_power(-degree()));
}

std::string SkewLaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        std::string cs = c.to_string();
        if (e == 0) {
            out += cs;
            continue;
        }
        std::string xs = e == 1 ? "X" : "X^" + std::to_string(e);
        if (cs == "1")
            out += xs;
        else
            out += xs + "*(" + cs + ")";
    }
    return out;
}

namespace {

void require_poly_range(const SkewLaurentPoly& p, const SkewLaurentPoly& q) {
    if (q.is_zero()) throw std::domain_error("skewpoly: division by zero polynomial");
    if ((!p.is_zero() && p.min_exp() < 0) || q.min_exp() < 0)
        throw std::domain_error("skewpoly: division requires non-negative exponents");
}

}  // namespace

DivisionResult right_divide(const SkewLaurentPoly& p, const SkewLaurentPoly& q) {
    require_poly_range(p, q);
    DivisionResult out;
    out.remainder = p;
    const std::int64_t m = q.degree();
    const FieldK& b = q.leading_coeff();
    while (!out.remainder.is_zero() && out.remainder.degree() >= m) {
        const std::int64_t n = out.remainder.degree();
        // q * (X^{n-m} c) has leading coefficient b^{sigma^{n-m}} c.
        FieldK c = b.sigma_power(n - m).inverse() * out.remainder.leading_coeff();
        SkewLaurentPoly t = SkewLaurentPoly::monomial(n - m, std::move(c));
        out.quotient += t;
        out.remainder -= q * t;
    }
    return out;
}

DivisionResult left_quot_divide(const SkewLaurentPoly& p, const SkewLaurentPoly& q) {
    require_poly_range(p, q);
    DivisionResult out;
    out.remainder = p;
    const std::int64_t m = q.degree();
    const FieldK& b = q.leading_coeff();
    while (!out.remainder.is_zero() && out.remainder.degree() >= m) {
        const std::int64_t n = out.remainder.degree();
        // (X^{n-m} c) * q has leading coefficient c^{sigma^m} b.
        FieldK c = (out.remainder.leading_coeff() * b.inverse()).sigma_power(-m);
        SkewLaurentPoly t = SkewLaurentPoly::monomial(n - m, std::move(c));
        out.quotient += t;
        out.remainder -= t * q;
    }
    return out;
}

SkewLaurentPoly gcrd(const SkewLaurentPoly& p, const SkewLaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("gcrd: zero input");
    // Remainders are rescaled to monic between steps: left unit factors do
    // not change right divisors and keep coefficients in reduced form.
    SkewLaurentPoly r0 = p.monic(), r1 = q.monic();
    while (!r1.is_zero()) {
        SkewLaurentPoly r = left_quot_divide(r0, r1).remainder.monic();
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return r0;
}

SkewLaurentPoly gcld(const SkewLaurentPoly& p, const SkewLaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("gcld: zero input");
    // Right unit factors do not change left divisors; rescaling each
    // remainder so its lowest X coefficient is 1 keeps sizes down.
    auto unit_right = [](const SkewLaurentPoly& r) {
        return r.scaled_right(r.terms().front().second.inverse());
    };
    SkewLaurentPoly r0 = unit_right(p), r1 = unit_right(q);
    while (!r1.is_zero()) {
        SkewLaurentPoly r = right_divide(r0, r1).remainder;
        if (!r.is_zero()) r = unit_right(r);
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return r0.monic();
}

LclmResult lclm(const SkewLaurentPoly& p, const SkewLaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("lclm: zero input");
    // Extended right Euclidean scheme: r_i = u_i*p + v_i*q with cofactors on
    // the left; the first vanishing remainder row carries the lclm.
    SkewLaurentPoly r0 = p, r1 = q;
    SkewLaurentPoly u0(1), v0, u1, v1(1);
    while (!r1.is_zero()) {
        DivisionResult d = left_quot_divide(r0, r1);
        SkewLaurentPoly r2 = d.remainder;
        SkewLaurentPoly u2 = u0 - d.quotient * u1;
        SkewLaurentPoly v2 = v0 - d.quotient * v1;
        if (!r2.is_zero()) {
            // Rescale the whole row r2 = u2*p + v2*q to keep r2 monic.
            const FieldK scale = r2.leading_coeff().inverse().sigma_power(-r2.degree());
            r2 = r2.scaled_left(scale);
            u2 = u2.scaled_left(scale);
            v2 = v2.scaled_left(scale);
        }
        r0 = std::move(r1), r1 = std::move(r2);
        u0 = std::move(u1), u1 = std::move(u2);
        v0 = std::move(v1), v1 = std::move(v2);
    }
    if (u1.is_zero()) throw std::logic_error("lclm: degenerate cofactor");
    const SkewLaurentPoly up = u1 * p;
    const FieldK scale = up.leading_coeff().inverse().sigma_power(-up.degree());
    LclmResult out;
    out.u = u1.scaled_left(scale);
    out.v = (-v1).scaled_left(scale);
    out.lclm = up.scaled_left(scale);
    return out;
}

SkewLaurentPoly left_divide_exact(const SkewLaurentPoly& p, const SkewLaurentPoly& g) {
    DivisionResult d = right_divide(p, g);
    if (!d.remainder.is_zero()) throw std::domain_error("skewpoly: inexact left division");
    return d.quotient;
}

SkewLaurentPoly star_poly(const SkewLaurentPoly& p) {
    std::vector<SkewLaurentPoly::Term> ts;
    for (const auto& [e, a] : p.terms()) ts.push_back({-e, a.star().sigma_power(-e)});
    return SkewLaurentPoly::from_terms(std::move(ts));
}

}  // namespace freealg
