#pragma once

// Free nilpotent group of class 2 on x, y in the normal form x^a y^b c^m with
// c = [x,y] central. The exponent correction in the product comes from moving
// x past y: y^b x^a' = x^a' y^b c^{-a'b}.

#include <cstdint>
#include <string>

#include "freealg/skewpoly.hpp"

namespace freealg {

struct HeisenbergElement {
    std::int64_t a = 0, b = 0, m = 0;

    bool operator==(const HeisenbergElement& o) const = default;

    static HeisenbergElement identity() { return {}; }
    static HeisenbergElement x() { return {1, 0, 0}; }
    static HeisenbergElement y() { return {0, 1, 0}; }
    static HeisenbergElement c() { return {0, 0, 1}; }

    std::string to_string() const {
        auto part = [](const char* v, std::int64_t e) -> std::string {
            if (e == 0) return "";
            if (e == 1) return std::string(v);
            return std::string(v) + "^" + std::to_string(e);
        };
        std::string s;
        for (const auto& p : {part("x", a), part("y", b), part("c", m)}) {
            if (p.empty()) continue;
            if (!s.empty()) s += " ";
            s += p;
        }
        return s.empty() ? "1" : s;
    }
};

inline HeisenbergElement group_mul(const HeisenbergElement& g, const HeisenbergElement& h) {
    return {g.a + h.a, g.b + h.b, g.m + h.m - h.a * g.b};
}

inline HeisenbergElement group_inv(const HeisenbergElement& g) {
    return {-g.a, -g.b, -g.m - g.a * g.b};
}

inline HeisenbergElement group_pow(HeisenbergElement g, std::int64_t e) {
    if (e < 0) {
        g = group_inv(g);
        e = -e;
    }
    HeisenbergElement acc;
    for (; e > 0; --e) acc = group_mul(acc, g);
    return acc;
}

// The isomorphism Q -> D reads lam -> [x,y], t -> x, X -> y; read backwards
// it sends x^a y^b c^m to the normal-ordered monomial X^b (t^a lam^{m+ab}).
inline SkewLaurentPoly to_skew(const HeisenbergElement& g) {
    FieldK coeff = FieldK::t(g.a) * FieldK::lambda(g.m + g.a * g.b);
    return SkewLaurentPoly::monomial(g.b, coeff);
}

}  // namespace freealg
