#pragma once

// Top tower layer K = Q(lam)(t), the coefficient field of the skew ring.
//
// Elements keep their denominator as a list of monic factor powers instead of
// one expanded polynomial. The factors that arise here (t, 1 - lam^j*t, and
// inverted numerators) recombine constantly under sigma twists, so factored
// denominators turn the common-denominator work in series arithmetic into
// multiset bookkeeping, and keep every gcd small.
//
// The gcd in Q(lam)[t] evaluates lam at integer points, takes univariate gcds
// over Q, and interpolates back, verifying the candidate by exact division.
// A degree-zero image certifies coprimality immediately, which is the common
// case when reducing numerators against denominator factors.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "freealg/lambda_field.hpp"
#include "freealg/poly.hpp"
#include "freealg/rational.hpp"

namespace freealg {

using PolyT = Poly<FieldL>;

namespace detail {

inline ZPoly zp_gcd_full(const ZPoly& a, const ZPoly& b) {
    ZPoly g = zp_gcd(a, b);
    Integer ca = zp_content(a), cb = zp_content(b);
    Integer c;
    mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    zp_mul_scalar(g, c);
    return g;
}

// Clears lambda-denominators so every coefficient is a polynomial in lam.
inline PolyT clear_lambda_dens(const PolyT& p) {
    ZPoly den_lcm = zp_const(1);
    for (const auto& [e, c] : p.terms()) {
        ZPoly g = zp_gcd_full(den_lcm, c.zden());
        den_lcm = zp_mul(den_lcm, zp_divexact_poly(c.zden(), g));
    }
    if (zp_is_one(den_lcm)) return p;
    std::vector<PolyT::Term> ts;
    for (const auto& [e, c] : p.terms())
        ts.emplace_back(e, FieldL::from_z(zp_mul(c.znum(), zp_divexact_poly(den_lcm, c.zden())),
                                          zp_const(1)));
    return PolyT::from_terms(std::move(ts));
}

inline std::optional<PolyL> eval_lambda(const PolyT& p, const Rational& a) {
    std::vector<PolyL::Term> ts;
    for (const auto& [e, c] : p.terms()) {
        auto v = c.evaluate(a);
        if (!v) return std::nullopt;
        if (!freealg::is_zero(*v)) ts.emplace_back(e, *v);
    }
    return PolyL::from_terms(std::move(ts));
}

}  // namespace detail

PolyT gcd_poly(const PolyT& a, const PolyT& b);

// Monic Euclidean gcd over the field of coefficients; correct for any sizes,
// used as the last-resort fallback and for very small inputs.
inline PolyT gcd_poly_euclid(PolyT a, PolyT b) {
    while (!b.is_zero()) {
        PolyT r = a.divmod(b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline PolyT gcd_poly(const PolyT& a, const PolyT& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return PolyT(FieldL(1));
    if (a.terms().size() == 1 || b.terms().size() == 1)
        return PolyT::monomial(std::min(a.valuation(), b.valuation()), FieldL(1));
    if (a.degree() == 1 || b.degree() == 1) {
        // Linear candidate: divisibility test decides immediately.
        const PolyT& lin = a.degree() == 1 ? a : b;
        const PolyT& oth = a.degree() == 1 ? b : a;
        return oth.divisible_by(lin) ? lin.monic() : PolyT(FieldL(1));
    }

    const PolyT ca = detail::clear_lambda_dens(a);
    const PolyT cb = detail::clear_lambda_dens(b);
    const PolyL gamma = gcd_poly(ca.leading_coeff().num(), cb.leading_coeff().num());

    // Newton interpolation state for the scaled gcd images.
    std::vector<Rational> points;
    std::map<std::int64_t, PolyL> interp;  // t-exponent -> polynomial in lam
    PolyL basis(Rational(1));              // prod (lam - a_i)
    std::int64_t gcd_deg = -1;
    bool stable = false;

    const std::int64_t lam_bound = [&] {
        std::int64_t d = 2;
        for (const auto& [e, c] : ca.terms()) d += detail::zp_degree(c.znum());
        for (const auto& [e, c] : cb.terms()) d += detail::zp_degree(c.znum());
        return d;
    }();

    for (long pt = 2; pt < 2 + 4 * lam_bound; ++pt) {
        const Rational x(pt);
        auto ia = detail::eval_lambda(ca, x);
        auto ib = detail::eval_lambda(cb, x);
        if (!ia || !ib) continue;  // cannot happen for polynomial coefficients
        if (ia->degree() != ca.degree() || ib->degree() != cb.degree()) continue;  // lc vanished
        PolyL g = gcd_poly(*ia, *ib);
        if (g.is_constant()) return PolyT(FieldL(1));
        if (gcd_deg == -1 || g.degree() < gcd_deg) {
            // First usable image, or all previous images were unlucky.
            gcd_deg = g.degree();
            points.clear();
            interp.clear();
            basis = PolyL(Rational(1));
            stable = false;
        } else if (g.degree() > gcd_deg) {
            continue;
        }

        // Scale the monic image so the interpolation target is polynomial.
        const Rational scale = gamma.evaluate(x);
        PolyL h = g.scaled(scale);

        // Newton step: increment = (h - interp(x)) / basis(x).
        bool increment_zero = true;
        const Rational bx = basis.evaluate(x);
        for (std::int64_t e = 0; e <= gcd_deg; ++e) {
            Rational have(0);
            auto it = interp.find(e);
            if (it != interp.end()) have = it->second.evaluate(x);
            Rational diff = h.coeff(e) - have;
            if (!freealg::is_zero(diff)) {
                increment_zero = false;
                interp[e] = interp[e] + basis.scaled(diff / bx);
            }
        }
        basis = basis * (PolyL::variable() - PolyL(Rational(x)));
        points.push_back(x);

        if (increment_zero && points.size() > 1) stable = true;
        if (!stable) continue;

        // Candidate: strip lambda-content, make monic, verify by division.
        PolyL content;
        for (const auto& [e, c] : interp)
            if (!c.is_zero()) content = gcd_poly(content, c);
        std::vector<PolyT::Term> ts;
        for (const auto& [e, c] : interp)
            if (!c.is_zero()) ts.emplace_back(e, FieldL(c / content));
        PolyT cand = PolyT::from_terms(std::move(ts)).monic();
        if (!cand.is_zero() && ca.divisible_by(cand) && cb.divisible_by(cand)) return cand;
        stable = false;
    }
    return gcd_poly_euclid(a, b);
}

// An element of K with factored denominator: num / prod f_i^{e_i}.
class FieldK {
  public:
    using Factor = std::pair<PolyT, int>;

    FieldK() : num_() {}
    FieldK(int n) : num_(FieldL(n)) {}
    explicit FieldK(const Rational& q) : num_(FieldL(q)) {}
    explicit FieldK(const FieldL& c) : num_(c) {}
    explicit FieldK(PolyT num) : num_(std::move(num)) {}
    FieldK(PolyT num, std::vector<Factor> den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static FieldK t(std::int64_t e = 1) {
        if (e >= 0) return FieldK(PolyT::monomial(e, FieldL(1)));
        return FieldK(PolyT(FieldL(1)), {{PolyT::variable(), static_cast<int>(-e)}});
    }
    static FieldK lambda(std::int64_t e = 1) { return FieldK(FieldL::lambda(e)); }

    const PolyT& num() const { return num_; }
    const std::vector<Factor>& den_factors() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant_in_t() const { return num_.is_constant() && den_.empty(); }
    FieldL as_fieldl() const {
        if (!is_constant_in_t()) throw std::domain_error("FieldK: not constant in t");
        return num_.is_zero() ? FieldL() : num_.constant_term();
    }

    PolyT den_expanded() const {
        PolyT d(FieldL(1));
        for (const auto& [f, e] : den_)
            for (int i = 0; i < e; ++i) d = d * f;
        return d;
    }

    bool operator==(const FieldK& o) const {
        if (num_ == o.num_ && den_ == o.den_) return true;
        return (*this - o).is_zero();
    }
    bool operator!=(const FieldK& o) const { return !(*this == o); }

    FieldK operator-() const {
        FieldK r = *this;
        r.num_ = -r.num_;
        return r;
    }

    FieldK operator+(const FieldK& o) const {
        if (is_zero()) return o;
        if (o.is_zero()) return *this;
        // Common denominator by factor multiset max.
        std::vector<Factor> merged = merge_max(den_, o.den_);
        PolyT na = num_ * complement(merged, den_);
        PolyT nb = o.num_ * complement(merged, o.den_);
        return FieldK(na + nb, std::move(merged));
    }
    FieldK operator-(const FieldK& o) const { return *this + (-o); }

    FieldK operator*(const FieldK& o) const {
        if (is_zero() || o.is_zero()) return FieldK();
        std::vector<Factor> den = merge_add(den_, o.den_);
        return FieldK(num_ * o.num_, std::move(den));
    }
    FieldK operator/(const FieldK& o) const { return *this * o.inverse(); }

    FieldK inverse() const {
        if (is_zero()) throw std::domain_error("FieldK: division by zero");
        PolyT new_num(FieldL(1));
        for (const auto& [f, e] : den_)
            for (int i = 0; i < e; ++i) new_num = new_num * f;
        std::vector<Factor> new_den;
        if (num_.is_constant()) {
            new_num = new_num.scaled(FieldL(1) / num_.constant_term());
        } else {
            const FieldL lc = num_.leading_coeff();
            new_den.push_back({num_.scaled(FieldL(1) / lc), 1});
            new_num = new_num.scaled(FieldL(1) / lc);
        }
        return FieldK(std::move(new_num), std::move(new_den));
    }

    FieldK& operator+=(const FieldK& o) { return *this = *this + o; }
    FieldK& operator-=(const FieldK& o) { return *this = *this - o; }
    FieldK& operator*=(const FieldK& o) { return *this = *this * o; }
    FieldK& operator/=(const FieldK& o) { return *this = *this / o; }

    FieldK pow(std::int64_t e) const {
        if (e == 0) return FieldK(1);
        FieldK base = e < 0 ? inverse() : *this;
        FieldK acc(1);
        for (std::int64_t k = e < 0 ? -e : e; k > 0; k >>= 1) {
            if (k & 1) acc *= base;
            base *= base;
        }
        return acc;
    }

    // t -> lam^j * t, the automorphism sigma iterated j times (j may be
    // negative). Fixes Q(lam) pointwise.
    FieldK sigma_power(std::int64_t j) const {
        if (j == 0 || is_zero()) return *this;
        FieldK r;
        r.num_ = twist_poly(num_, j);
        FieldL scale(1);
        for (const auto& [f, e] : den_) {
            PolyT tf = twist_poly(f, j);
            const FieldL lc = tf.leading_coeff();
            if (!(lc == FieldL(1))) {
                tf = tf.scaled(FieldL(1) / lc);
                scale = scale * lc.pow(e);
            }
            r.den_.push_back({std::move(tf), e});
        }
        if (!(scale == FieldL(1))) r.num_ = r.num_.scaled(FieldL(1) / scale);
        r.canonical_sort();
        return r;
    }
    FieldK sigma() const { return sigma_power(1); }

    // lam -> 1/lam, t -> 1/t; the coefficient-level star map.
    FieldK star() const {
        if (is_zero()) return FieldK();
        auto star_poly_t = [](const PolyT& p) -> std::pair<PolyT, std::int64_t> {
            // p(1/t) with starred coefficients = t^(-deg) * result.
            std::vector<PolyT::Term> ts;
            const std::int64_t d = p.degree();
            for (const auto& [e, c] : p.terms()) ts.emplace_back(d - e, c.star());
            return {PolyT::from_terms(std::move(ts)), d};
        };
        auto [rn, dn] = star_poly_t(num_);
        std::int64_t tshift = -dn;
        PolyT new_num = std::move(rn);
        std::vector<Factor> new_den;
        for (const auto& [f, e] : den_) {
            auto [rf, df] = star_poly_t(f);
            tshift += static_cast<std::int64_t>(e) * df;
            if (rf.is_constant()) {
                new_num = new_num.scaled(rf.constant_term().pow(-e));
                continue;
            }
            const FieldL lc = rf.leading_coeff();
            if (!(lc == FieldL(1))) {
                rf = rf.scaled(FieldL(1) / lc);
                new_num = new_num.scaled(lc.pow(-e));
            }
            // Reversal of a factor never leaves a root at t = 0, but the
            // reversed factor can pick up a power of t when f had one.
            const std::int64_t v = rf.valuation();
            if (v > 0) {
                rf = rf.shifted(-v);
                tshift -= static_cast<std::int64_t>(e) * v;
            }
            if (rf.is_constant())
                new_num = new_num.scaled(rf.constant_term().pow(-e));
            else
                new_den.push_back({std::move(rf), e});
        }
        if (tshift >= 0)
            new_num = new_num.shifted(tshift);
        else
            new_den.push_back({PolyT::variable(), static_cast<int>(-tshift)});
        return FieldK(std::move(new_num), std::move(new_den));
    }

    enum class Layer { Q0, K_lambda, K_lambda_t };
    Layer layer() const {
        if (!is_constant_in_t()) return Layer::K_lambda_t;
        if (num_.is_zero() || num_.constant_term().is_rational()) return Layer::Q0;
        return Layer::K_lambda;
    }

    // Expanded reduced fraction (num, den) with monic den; the normal form.
    std::pair<PolyT, PolyT> as_fraction() const { return {num_, den_expanded()}; }

    std::string to_string() const {
        auto cs = [](const FieldL& c) { return c.to_string(); };
        std::string n = num_.to_string("t", cs);
        if (den_.empty()) return n;
        std::string d = den_expanded().to_string("t", cs);
        return "(" + n + ")/(" + d + ")";
    }

  private:
    static PolyT twist_poly(const PolyT& p, std::int64_t j) {
        std::vector<PolyT::Term> ts;
        for (const auto& [e, c] : p.terms()) ts.emplace_back(e, c * FieldL::lambda(j * e));
        return PolyT::from_terms(std::move(ts));
    }

    static std::vector<Factor> merge_max(const std::vector<Factor>& a, const std::vector<Factor>& b) {
        return merge_impl(a, b, true);
    }
    static std::vector<Factor> merge_add(const std::vector<Factor>& a, const std::vector<Factor>& b) {
        return merge_impl(a, b, false);
    }
    static std::vector<Factor> merge_impl(const std::vector<Factor>& a, const std::vector<Factor>& b,
                                          bool take_max) {
        std::vector<Factor> out;
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first.compare(b[j].first) < 0)) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].first.compare(a[i].first) < 0) {
                out.push_back(b[j++]);
            } else {
                out.push_back({a[i].first, take_max ? std::max(a[i].second, b[j].second)
                                                    : a[i].second + b[j].second});
                ++i, ++j;
            }
        }
        return out;
    }
    // prod over target of f^(target_exp - have_exp); target must contain have.
    static PolyT complement(const std::vector<Factor>& target, const std::vector<Factor>& have) {
        PolyT out(FieldL(1));
        std::size_t j = 0;
        for (const auto& [f, e] : target) {
            int h = 0;
            while (j < have.size() && have[j].first.compare(f) < 0) ++j;
            if (j < have.size() && have[j].first.compare(f) == 0) h = have[j].second;
            for (int k = h; k < e; ++k) out = out * f;
        }
        return out;
    }

    void canonical_sort() {
        std::sort(den_.begin(), den_.end(),
                  [](const Factor& x, const Factor& y) { return x.first.compare(y.first) < 0; });
        std::vector<Factor> merged;
        for (auto& f : den_) {
            if (!merged.empty() && merged.back().first.compare(f.first) == 0)
                merged.back().second += f.second;
            else
                merged.push_back(std::move(f));
        }
        den_ = std::move(merged);
    }

    void normalize() {
        if (num_.is_zero()) {
            den_.clear();
            return;
        }
        // Fold degenerate factors, make all factors monic.
        std::vector<Factor> kept;
        for (auto& [f, e] : den_) {
            if (e == 0) continue;
            if (f.is_zero()) throw std::domain_error("FieldK: zero denominator factor");
            if (f.is_constant()) {
                num_ = num_.scaled(f.constant_term().pow(-static_cast<std::int64_t>(e)));
                continue;
            }
            const FieldL lc = f.leading_coeff();
            if (!(lc == FieldL(1))) {
                f = f.scaled(FieldL(1) / lc);
                num_ = num_.scaled(lc.pow(-static_cast<std::int64_t>(e)));
            }
            kept.push_back({std::move(f), e});
        }
        den_ = std::move(kept);
        canonical_sort();

        // Cancel numerator content against denominator factors.
        bool changed = true;
        while (changed && !num_.is_constant()) {
            changed = false;
            for (std::size_t i = 0; i < den_.size(); ++i) {
                PolyT g = gcd_poly(num_, den_[i].first);
                if (g.is_constant()) continue;
                if (g.compare(den_[i].first) == 0) {
                    num_ = num_ / den_[i].first;
                    if (--den_[i].second == 0) den_.erase(den_.begin() + static_cast<std::ptrdiff_t>(i));
                } else {
                    // Split the factor along the common part and retry.
                    PolyT rest = den_[i].first / g;
                    int e = den_[i].second;
                    den_[i] = {g, e};
                    den_.push_back({std::move(rest), e});
                    canonical_sort();
                }
                changed = true;
                break;
            }
        }
    }

    PolyT num_;
    std::vector<Factor> den_;
};

// ---- spec-facing tower operations ---------------------------------------

using TowerElement = FieldK;

enum class FieldOp { add, sub, mul, div };

inline TowerElement field_arith(const TowerElement& a, const TowerElement& b, FieldOp op) {
    switch (op) {
        case FieldOp::add: return a + b;
        case FieldOp::sub: return a - b;
        case FieldOp::mul: return a * b;
        case FieldOp::div: return a / b;
    }
    throw std::logic_error("field_arith: bad op");
}

inline TowerElement sigma_apply(const TowerElement& f) { return f.sigma(); }
inline TowerElement sigma_power(const TowerElement& f, std::int64_t j) { return f.sigma_power(j); }
inline TowerElement star_K(const TowerElement& f) { return f.star(); }

}  // namespace freealg
