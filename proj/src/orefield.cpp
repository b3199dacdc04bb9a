#include "freealg/orefield.hpp"

namespace freealg {

namespace {

// Rewrites A * B^-1 (with A, B polynomials of min exponent 0, B != 0) as a
// left fraction s^-1 * r via the Ore condition: lclm(A, B) = u*A = v*B gives
// A * B^-1 = u^-1 * v.
struct LeftForm {
    SkewLaurentPoly s, r;
};
LeftForm commute_past(const SkewLaurentPoly& A, const SkewLaurentPoly& B) {
    if (B.is_one()) return {SkewLaurentPoly(1), A};
    LclmResult l = lclm(A, B);
    return {std::move(l.u), std::move(l.v)};
}

}  // namespace

void OreElement::normalize() {
    if (num_.is_zero()) {
        den_ = SkewLaurentPoly(1);
        return;
    }
    // Pull X powers out of the denominator: (X^e d)^-1 n = d^-1 (X^-e n).
    const std::int64_t ed = den_.min_exp();
    if (ed != 0) {
        den_ = den_.shifted(-ed);
        num_ = num_.shifted(-ed);
    }
    // Split the numerator as X^nu * num0 and cancel the greatest common left
    // divisor of den and the conjugated polynomial part.
    const std::int64_t nu = num_.min_exp();
    SkewLaurentPoly m = num_.shifted(-nu).twisted(nu);  // X^nu * num0 = m * X^nu
    if (den_.degree() > 0 && m.degree() > 0) {
        SkewLaurentPoly g = gcld(den_, m);
        if (g.degree() > 0) {
            den_ = left_divide_exact(den_, g);
            m = left_divide_exact(m, g);
        }
    }
    // Monic denominator; the same left scale is applied to both parts.
    const FieldK lc = den_.leading_coeff();
    if (!(lc == FieldK(1))) {
        const FieldK scale = lc.inverse().sigma_power(-den_.degree());
        den_ = den_.scaled_left(scale);
        m = m.scaled_left(scale);
    }
    num_ = m.shifted_right(nu);
}

bool OreElement::operator==(const OreElement& o) const {
    if (den_ == o.den_) return num_ == o.num_;
    return (*this - o).is_zero();
}

OreElement OreElement::operator-() const {
    OreElement r = *this;
    r.num_ = -r.num_;
    return r;
}

OreElement OreElement::operator+(const OreElement& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return OreElement(den_, num_ + o.num_);
    LclmResult l = lclm(den_, o.den_);
    return OreElement(l.lclm, l.u * num_ + l.v * o.num_);
}

OreElement OreElement::operator-(const OreElement& o) const { return *this + (-o); }

OreElement OreElement::operator*(const OreElement& o) const {
    if (is_zero() || o.is_zero()) return OreElement();
    // x*y = dx^-1 nx dy^-1 ny; move nx past dy^-1 through the Ore condition.
    const std::int64_t nu = num_.min_exp();
    SkewLaurentPoly A = num_.shifted(-nu).twisted(nu);
    SkewLaurentPoly D = o.den_.twisted(nu);
    LeftForm f = commute_past(A, D);
    return OreElement(f.s * den_, f.r.shifted_right(nu) * o.num_);
}

OreElement OreElement::inverse() const {
    if (is_zero()) throw std::domain_error("ore: division by zero");
    return OreElement(num_, den_);
}

OreElement OreElement::operator/(const OreElement& o) const { return *this * o.inverse(); }

OreElement OreElement::pow(std::int64_t e) const {
    if (e == 0) return OreElement(1);
    OreElement base = e < 0 ? inverse() : *this;
    OreElement acc(1);
    for (std::int64_t k = e < 0 ? -e : e; k > 0; k >>= 1) {
        if (k & 1) acc *= base;
        base *= base;
    }
    return acc;
}

std::string OreElement::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + den_.to_string() + ")^-1 * (" + num_.to_string() + ")";
}

OreElement ore_arith(const OreElement& x, const OreElement& y, OreOp op) {
    switch (op) {
        case OreOp::add: return x + y;
        case OreOp::sub: return x - y;
        case OreOp::mul: return x * y;
        case OreOp::div: return x / y;
    }
    throw std::logic_error("ore_arith: bad op");
}

OreElement star(const OreElement& x) {
    if (x.is_zero()) return OreElement();
    // (den^-1 num)* = num* (den*)^-1, a right fraction; convert back.
    SkewLaurentPoly A = star_poly(x.num());
    SkewLaurentPoly B = star_poly(x.den());
    const std::int64_t va = A.min_exp(), vb = B.min_exp();
    SkewLaurentPoly A0 = A.shifted(-va).twisted(va);
    SkewLaurentPoly B0 = B.shifted(-vb).twisted(va);
    LclmResult l = lclm(A0, B0);
    return OreElement(l.u, l.v.shifted_right(va - vb));
}

Valuation valuation(const OreElement& x) {
    if (x.is_zero()) return Valuation::infinity();
    return Valuation::of(x.num().min_exp());
}

TruncatedSkewSeries to_series(const OreElement& x, std::int64_t window) {
    if (window < 1) throw std::domain_error("to_series: window must be >= 1");
    if (x.is_zero()) return TruncatedSkewSeries::zero(window);
    const std::int64_t nu = x.num().min_exp();
    TruncatedSkewSeries den_inv = TruncatedSkewSeries::from_poly(x.den(), window).inverted();
    TruncatedSkewSeries num = TruncatedSkewSeries::from_poly(x.num(), nu + window);
    return den_inv * num;
}

}  // namespace freealg
