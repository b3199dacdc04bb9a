#pragma once

// The middle tower layer k = Q(lam). Elements are fractions of integer
// polynomials in lam: dense mpz coefficient vectors, canonicalized so the
// denominator has positive leading coefficient, the polynomial parts are
// gcd-reduced, and the integer contents of numerator and denominator are
// coprime. Everything stays in mpz; rationals only appear at the edges.
//
// GCDs run the subresultant PRS with a one-prime modular filter in front;
// most reductions in the workload are coprime and exit after the filter.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freealg/poly.hpp"
#include "freealg/rational.hpp"

namespace freealg {

template <>
struct CoeffOrder<Rational> {
    static bool less(const Rational& a, const Rational& b) { return cmp(a, b) < 0; }
};

using PolyL = Poly<Rational>;

namespace detail {

// Dense integer polynomials, ascending exponents, trailing zeros trimmed.
using ZPoly = std::vector<Integer>;

inline void zp_trim(ZPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline ZPoly zp_const(long v) {
    ZPoly p;
    if (v != 0) p.push_back(Integer(v));
    return p;
}

inline std::int64_t zp_degree(const ZPoly& p) { return static_cast<std::int64_t>(p.size()) - 1; }

inline bool zp_is_one(const ZPoly& p) { return p.size() == 1 && p[0] == 1; }

inline std::int64_t zp_valuation(const ZPoly& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (sgn(p[i]) != 0) return static_cast<std::int64_t>(i);
    return 0;
}

inline Integer zp_content(const ZPoly& p) {
    Integer g(0);
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline void zp_divide_scalar(ZPoly& p, const Integer& d) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
}

inline void zp_mul_scalar(ZPoly& p, const Integer& d) {
    if (sgn(d) == 0) {
        p.clear();
        return;
    }
    for (auto& c : p) c *= d;
}

inline ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    zp_trim(r);
    return r;
}

inline ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    zp_trim(r);
    return r;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (sgn(b[j]) == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    zp_trim(r);
    return r;
}

inline ZPoly zp_shift(ZPoly p, std::int64_t k) {  // multiply by lam^k, k >= 0
    if (p.empty() || k == 0) return p;
    p.insert(p.begin(), static_cast<std::size_t>(k), Integer(0));
    return p;
}

inline ZPoly zp_reversed(const ZPoly& p) {
    ZPoly r(p.rbegin(), p.rend());
    zp_trim(r);
    return r;
}

// Exact division; throws when not divisible.
inline ZPoly zp_divexact_poly(const ZPoly& a, const ZPoly& b) {
    if (b.empty()) throw std::domain_error("zpoly: division by zero");
    if (a.empty()) return {};
    if (a.size() < b.size()) throw std::domain_error("zpoly: inexact division");
    ZPoly rem = a;
    ZPoly quot(a.size() - b.size() + 1);
    const Integer& lb = b.back();
    for (std::int64_t k = static_cast<std::int64_t>(quot.size()) - 1; k >= 0; --k) {
        const std::size_t top = static_cast<std::size_t>(k) + b.size() - 1;
        if (top >= rem.size() || sgn(rem[top]) == 0) continue;
        Integer q;
        mpz_fdiv_qr(q.get_mpz_t(), rem[top].get_mpz_t(), rem[top].get_mpz_t(), lb.get_mpz_t());
        if (sgn(rem[top]) != 0) throw std::domain_error("zpoly: inexact division");
        quot[static_cast<std::size_t>(k)] = q;
        for (std::size_t i = 0; i + 1 < b.size(); ++i) rem[static_cast<std::size_t>(k) + i] -= q * b[i];
    }
    for (const auto& c : rem)
        if (sgn(c) != 0) throw std::domain_error("zpoly: inexact division");
    zp_trim(quot);
    return quot;
}

inline bool zp_divisible(const ZPoly& a, const ZPoly& b) {
    try {
        zp_divexact_poly(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b. The scale must be
// exactly that power even when the remainder degree skips, or the
// subresultant divisions downstream stop being exact.
inline ZPoly zp_prem(ZPoly a, const ZPoly& b) {
    const std::size_t db = b.size() - 1;
    const Integer& lb = b.back();
    std::int64_t scale_left =
        static_cast<std::int64_t>(a.size()) - static_cast<std::int64_t>(b.size()) + 1;
    while (a.size() >= b.size() && !a.empty()) {
        const Integer la = a.back();
        const std::size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        --scale_left;
        for (std::size_t i = 0; i < db; ++i) a[shift + i] -= la * b[i];
        a.pop_back();
        zp_trim(a);
    }
    if (!a.empty() && scale_left > 0) {
        Integer s(1);
        for (std::int64_t i = 0; i < scale_left; ++i) s *= lb;
        for (auto& c : a) c *= s;
    }
    return a;
}

// Modular image arithmetic for the coprimality filter.
inline constexpr std::uint64_t kFilterPrime = 2305843009213693951ULL;  // 2^61 - 1

inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}
inline std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    for (; e; e >>= 1) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
    }
    return r;
}
inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

inline std::uint64_t mod_of_integer(const Integer& z, std::uint64_t p) {
    Integer r = z % Integer(static_cast<unsigned long>(p));
    if (sgn(r) < 0) r += Integer(static_cast<unsigned long>(p));
    return r.get_ui();
}

using MPoly = std::vector<std::uint64_t>;

inline void mp_trim(MPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline MPoly mp_from_zp(const ZPoly& p, std::uint64_t prime) {
    MPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = mod_of_integer(p[i], prime);
    mp_trim(out);
    return out;
}

inline std::int64_t mp_gcd_degree(MPoly a, MPoly b, std::uint64_t p) {
    mp_trim(a), mp_trim(b);
    while (!b.empty()) {
        const std::uint64_t inv_lb = mod_inv(b.back(), p);
        while (a.size() >= b.size() && !a.empty()) {
            const std::uint64_t q = mod_mul(a.back(), inv_lb, p);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i + 1 < b.size(); ++i) {
                std::uint64_t s = mod_mul(q, b[i], p);
                a[shift + i] = (a[shift + i] >= s) ? a[shift + i] - s : a[shift + i] + p - s;
            }
            a.pop_back();
            mp_trim(a);
        }
        std::swap(a, b);
    }
    return static_cast<std::int64_t>(a.size()) - 1;
}

// Primitive gcd in Z[lam] with positive leading coefficient.
inline ZPoly zp_gcd(const ZPoly& a, const ZPoly& b) {
    auto primitive = [](ZPoly p) {
        if (p.empty()) return p;
        Integer c = zp_content(p);
        if (sgn(p.back()) < 0) c = -c;
        zp_divide_scalar(p, c);
        return p;
    };
    if (a.empty()) return primitive(b);
    if (b.empty()) return primitive(a);
    if (a.size() == 1 || b.size() == 1) return zp_const(1);
    // Monomial fast path.
    auto is_monomial = [](const ZPoly& p) {
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            if (sgn(p[i]) != 0) return false;
        return true;
    };
    if (is_monomial(a) || is_monomial(b)) {
        ZPoly g;
        g.resize(static_cast<std::size_t>(std::min(zp_valuation(a), zp_valuation(b))) + 1);
        g.back() = 1;
        return g;
    }

    ZPoly za = primitive(a), zb = primitive(b);
    if (za.size() < zb.size()) std::swap(za, zb);

    const std::uint64_t p = kFilterPrime;
    if (mod_of_integer(za.back(), p) != 0 && mod_of_integer(zb.back(), p) != 0) {
        if (mp_gcd_degree(mp_from_zp(za, p), mp_from_zp(zb, p), p) == 0) return zp_const(1);
    }

    // Subresultant PRS (Collins / Brown-Traub).
    ZPoly r0 = za, r1 = zb;
    Integer g(1), h(1);
    while (true) {
        const std::int64_t delta =
            static_cast<std::int64_t>(r0.size()) - static_cast<std::int64_t>(r1.size());
        ZPoly rem = zp_prem(r0, r1);
        if (rem.empty()) break;
        if (rem.size() == 1) return zp_const(1);
        Integer divisor = g;
        for (std::int64_t i = 0; i < delta; ++i) divisor *= h;
        zp_divide_scalar(rem, divisor);
        r0 = std::move(r1);
        r1 = std::move(rem);
        g = r0.back();
        if (delta >= 1) {
            Integer hn = g;
            for (std::int64_t i = 1; i < delta; ++i) hn *= g;
            for (std::int64_t i = 1; i < delta; ++i)
                mpz_divexact(hn.get_mpz_t(), hn.get_mpz_t(), h.get_mpz_t());
            h = hn;
        }
    }
    return primitive(r1);
}

inline std::string zp_to_string(const ZPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (sgn(p[i]) == 0) continue;
        if (!out.empty()) out += " + ";
        std::string cs = p[i].get_str();
        if (i == 0) {
            out += cs;
            continue;
        }
        std::string vs = i == 1 ? var : var + "^" + std::to_string(i);
        if (cs == "1")
            out += vs;
        else if (cs == "-1")
            out += "-" + vs;
        else
            out += cs + "*" + vs;
    }
    return out;
}

}  // namespace detail

// Conversions between the sparse rational view and the dense integer core.
namespace detail {

struct ZFraction {
    ZPoly poly;
    Integer den;  // positive
};

inline ZFraction zf_from_polyl(const PolyL& p) {
    ZFraction out{{}, Integer(1)};
    if (p.is_zero()) return out;
    for (const auto& [e, c] : p.terms())
        mpz_lcm(out.den.get_mpz_t(), out.den.get_mpz_t(), c.get_den().get_mpz_t());
    out.poly.assign(static_cast<std::size_t>(p.degree()) + 1, Integer(0));
    for (const auto& [e, c] : p.terms())
        out.poly[static_cast<std::size_t>(e)] = c.get_num() * (out.den / c.get_den());
    return out;
}

inline PolyL polyl_from_zp(const ZPoly& p, const Integer& den = Integer(1)) {
    std::vector<PolyL::Term> ts;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (sgn(p[i]) == 0) continue;
        Rational q(p[i], den);
        q.canonicalize();
        ts.emplace_back(static_cast<std::int64_t>(i), std::move(q));
    }
    return PolyL::from_terms(std::move(ts));
}

}  // namespace detail

// Monic gcd in Q[lam] over the sparse rational view.
inline PolyL gcd_poly(const PolyL& a, const PolyL& b) {
    detail::ZPoly g = detail::zp_gcd(detail::zf_from_polyl(a).poly, detail::zf_from_polyl(b).poly);
    return detail::polyl_from_zp(g).monic();
}

// k = Q(lam); see the file comment for the canonical form.
class FieldL {
  public:
    FieldL() : den_(detail::zp_const(1)) {}
    FieldL(int n) : num_(detail::zp_const(n)), den_(detail::zp_const(1)) {}
    explicit FieldL(const Rational& q) : den_(detail::zp_const(1)) {
        if (freealg::is_zero(q)) return;
        num_.push_back(q.get_num());
        den_[0] = q.get_den();
    }
    FieldL(const PolyL& num, const PolyL& den) : den_(detail::zp_const(1)) {
        auto n = detail::zf_from_polyl(num);
        auto d = detail::zf_from_polyl(den);
        num_ = std::move(n.poly);
        detail::zp_mul_scalar(num_, d.den);
        den_ = std::move(d.poly);
        detail::zp_mul_scalar(den_, n.den);
        reduce_full();
    }
    explicit FieldL(const PolyL& num) : FieldL(num, PolyL(Rational(1))) {}

    static FieldL lambda(std::int64_t e = 1) {
        FieldL f;
        if (e >= 0) {
            f.num_ = detail::zp_shift(detail::zp_const(1), e);
        } else {
            f.num_ = detail::zp_const(1);
            f.den_ = detail::zp_shift(detail::zp_const(1), -e);
        }
        return f;
    }

    PolyL num() const { return detail::polyl_from_zp(num_); }
    PolyL den() const { return detail::polyl_from_zp(den_); }
    const detail::ZPoly& znum() const { return num_; }
    const detail::ZPoly& zden() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    bool is_rational() const { return num_.size() <= 1 && den_.size() == 1; }
    Rational as_rational() const {
        if (!is_rational()) throw std::domain_error("FieldL: not a rational constant");
        if (num_.empty()) return Rational(0);
        Rational q(num_[0], den_[0]);
        q.canonicalize();
        return q;
    }

    bool operator==(const FieldL& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FieldL& o) const { return !(*this == o); }

    FieldL operator-() const {
        FieldL r = *this;
        for (auto& c : r.num_) c = -c;
        return r;
    }

    FieldL operator+(const FieldL& o) const {
        // Henrici's scheme: with both inputs reduced, the result only needs
        // a small gcd against the common part of the denominators.
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        FieldL r;
        if (den_ == o.den_) {
            r.num_ = detail::zp_add(num_, o.num_);
            if (r.num_.empty()) return FieldL();
            r.den_ = den_;
            r.reduce_against_common(den_);
            return r;
        }
        detail::ZPoly g = detail::zp_gcd(den_, o.den_);
        Integer cg = gcd_int(detail::zp_content(den_), detail::zp_content(o.den_));
        detail::zp_mul_scalar(g, cg);
        if (detail::zp_is_one(g)) {
            r.num_ = detail::zp_add(detail::zp_mul(num_, o.den_), detail::zp_mul(o.num_, den_));
            if (r.num_.empty()) return FieldL();
            r.den_ = detail::zp_mul(den_, o.den_);
            r.normalize_contents();
            return r;
        }
        detail::ZPoly da = detail::zp_divexact_poly(den_, g);
        detail::ZPoly db = detail::zp_divexact_poly(o.den_, g);
        r.num_ = detail::zp_add(detail::zp_mul(num_, db), detail::zp_mul(o.num_, da));
        if (r.num_.empty()) return FieldL();
        r.den_ = detail::zp_mul(den_, db);
        r.reduce_against_common(g);
        return r;
    }
    FieldL operator-(const FieldL& o) const { return *this + (-o); }

    FieldL operator*(const FieldL& o) const {
        // Cross-reduction keeps products of reduced inputs reduced.
        if (is_zero() || o.is_zero()) return FieldL();
        detail::ZPoly n1 = num_, d2 = o.den_;
        cross_cancel(n1, d2);
        detail::ZPoly n2 = o.num_, d1 = den_;
        cross_cancel(n2, d1);
        FieldL r;
        r.num_ = detail::zp_mul(n1, n2);
        r.den_ = detail::zp_mul(d1, d2);
        r.fix_sign();
        return r;
    }
    FieldL operator/(const FieldL& o) const { return *this * o.inverse(); }
    FieldL inverse() const {
        if (is_zero()) throw std::domain_error("FieldL: division by zero");
        FieldL r;
        r.num_ = den_;
        r.den_ = num_;
        r.fix_sign();
        return r;
    }
    FieldL& operator+=(const FieldL& o) { return *this = *this + o; }
    FieldL& operator-=(const FieldL& o) { return *this = *this - o; }
    FieldL& operator*=(const FieldL& o) { return *this = *this * o; }
    FieldL& operator/=(const FieldL& o) { return *this = *this / o; }

    FieldL pow(std::int64_t e) const {
        if (e == 0) return FieldL(1);
        FieldL base = e < 0 ? inverse() : *this;
        FieldL acc(1);
        for (std::int64_t k = e < 0 ? -e : e; k > 0; k >>= 1) {
            if (k & 1) acc *= base;
            base *= base;
        }
        return acc;
    }

    // lam -> 1/lam. The coefficient-level half of the star involution:
    // p(1/lam) = lam^-deg(p) * rev(p), so the fraction rebalances by
    // lam^(deg den - deg num) and both reversed parts have valuation 0.
    FieldL star() const {
        if (is_zero()) return FieldL();
        FieldL r;
        r.num_ = detail::zp_reversed(num_);
        r.den_ = detail::zp_reversed(den_);
        const std::int64_t shift = detail::zp_degree(den_) - detail::zp_degree(num_);
        if (shift >= 0)
            r.num_ = detail::zp_shift(std::move(r.num_), shift);
        else
            r.den_ = detail::zp_shift(std::move(r.den_), -shift);
        r.fix_sign();
        return r;
    }

    static FieldL from_z(detail::ZPoly n, detail::ZPoly d) {
        FieldL f;
        f.num_ = std::move(n);
        f.den_ = std::move(d);
        f.reduce_full();
        return f;
    }

    // Exact evaluation at lam = a; nullopt when a hits a pole.
    std::optional<Rational> evaluate(const Rational& a) const;

    std::string to_string() const {
        if (num_.empty()) return "0";
        std::string n = detail::zp_to_string(num_, "lam");
        if (detail::zp_is_one(den_)) return n;
        return "(" + n + ")/(" + detail::zp_to_string(den_, "lam") + ")";
    }

  private:
    static Integer gcd_int(const Integer& a, const Integer& b) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), b.get_mpz_t());
        return g;
    }

    static void cross_cancel(detail::ZPoly& n, detail::ZPoly& d) {
        if (!detail::zp_is_one(d) && !n.empty()) {
            if (n.size() > 1 && d.size() > 1) {
                detail::ZPoly g = detail::zp_gcd(n, d);
                if (!detail::zp_is_one(g)) {
                    n = detail::zp_divexact_poly(n, g);
                    d = detail::zp_divexact_poly(d, g);
                }
            }
            Integer c = gcd_int(detail::zp_content(n), detail::zp_content(d));
            if (c != 1) {
                detail::zp_divide_scalar(n, c);
                detail::zp_divide_scalar(d, c);
            }
        }
    }

    void fix_sign() {
        if (num_.empty()) {
            den_ = detail::zp_const(1);
            return;
        }
        if (den_.empty()) throw std::domain_error("FieldL: zero denominator");
        if (sgn(den_.back()) < 0) {
            for (auto& c : num_) c = -c;
            for (auto& c : den_) c = -c;
        }
    }

    void normalize_contents() {
        Integer c = gcd_int(detail::zp_content(num_), detail::zp_content(den_));
        if (c != 1) {
            detail::zp_divide_scalar(num_, c);
            detail::zp_divide_scalar(den_, c);
        }
        fix_sign();
    }

    // After an add whose only possible common polynomial factor lies in g.
    void reduce_against_common(const detail::ZPoly& g) {
        if (!detail::zp_is_one(g) && g.size() > 1 && num_.size() > 1) {
            detail::ZPoly h = detail::zp_gcd(num_, g);
            if (!detail::zp_is_one(h) && h.size() > 1) {
                num_ = detail::zp_divexact_poly(num_, h);
                den_ = detail::zp_divexact_poly(den_, h);
            }
        }
        normalize_contents();
    }

    void reduce_full() {
        if (den_.empty()) throw std::domain_error("FieldL: zero denominator");
        if (num_.empty()) {
            den_ = detail::zp_const(1);
            return;
        }
        if (num_.size() > 1 && den_.size() > 1) {
            detail::ZPoly g = detail::zp_gcd(num_, den_);
            if (!detail::zp_is_one(g)) {
                num_ = detail::zp_divexact_poly(num_, g);
                den_ = detail::zp_divexact_poly(den_, g);
            }
        } else {
            const std::int64_t v = std::min(detail::zp_valuation(num_), detail::zp_valuation(den_));
            if (v > 0) {
                num_.erase(num_.begin(), num_.begin() + v);
                den_.erase(den_.begin(), den_.begin() + v);
            }
        }
        normalize_contents();
    }

    detail::ZPoly num_, den_;
};

inline std::optional<Rational> FieldL::evaluate(const Rational& a) const {
    auto eval = [&](const detail::ZPoly& p) {
        Rational acc(0);
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * a + Rational(*it);
        return acc;
    };
    Rational d = eval(den_);
    if (freealg::is_zero(d)) return std::nullopt;
    return eval(num_) / d;
}

template <>
struct CoeffOrder<FieldL> {
    static bool less(const FieldL& a, const FieldL& b) {
        const auto &an = a.znum(), &bn = b.znum();
        if (an.size() != bn.size()) return an.size() < bn.size();
        const auto &ad = a.zden(), &bd = b.zden();
        if (ad.size() != bd.size()) return ad.size() < bd.size();
        for (std::size_t i = an.size(); i-- > 0;) {
            int c = cmp(an[i], bn[i]);
            if (c != 0) return c < 0;
        }
        for (std::size_t i = ad.size(); i-- > 0;) {
            int c = cmp(ad[i], bd[i]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};

}  // namespace freealg
