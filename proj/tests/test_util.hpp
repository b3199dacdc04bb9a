#pragma once

// Shared generators for property-style tests. Small exponents and small
// coefficients keep exact arithmetic fast while still hitting the interesting
// structure (negative powers, twists, carries between tower layers).

#include <cstdint>
#include <random>

#include "freealg/lambda_field.hpp"
#include "freealg/rational.hpp"
#include "freealg/tower.hpp"

namespace freealg::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int max_abs = 9) {
    std::uniform_int_distribution<int> num(-max_abs, max_abs);
    std::uniform_int_distribution<int> den(1, max_abs);
    return rat(num(rng), den(rng));
}

inline Rational random_nonzero_rational(Rng& rng, int max_abs = 9) {
    Rational q;
    do q = random_rational(rng, max_abs);
    while (is_zero(q));
    return q;
}

inline PolyL random_polyl(Rng& rng, int max_deg = 3, int max_abs = 5) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<PolyL::Term> ts;
    int d = deg(rng);
    for (int e = 0; e <= d; ++e) {
        std::uniform_int_distribution<int> c(-max_abs, max_abs);
        int v = c(rng);
        if (v != 0) ts.emplace_back(e, Rational(v));
    }
    return PolyL::from_terms(std::move(ts));
}

inline PolyL random_nonzero_polyl(Rng& rng, int max_deg = 3, int max_abs = 5) {
    PolyL p;
    do p = random_polyl(rng, max_deg, max_abs);
    while (p.is_zero());
    return p;
}

inline FieldL random_fieldl(Rng& rng, int max_deg = 2) {
    return FieldL(random_polyl(rng, max_deg), random_nonzero_polyl(rng, max_deg));
}

inline FieldL random_nonzero_fieldl(Rng& rng, int max_deg = 2) {
    FieldL f;
    do f = random_fieldl(rng, max_deg);
    while (f.is_zero());
    return f;
}

inline PolyT random_polyt(Rng& rng, int max_deg = 2, int lam_deg = 1) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<PolyT::Term> ts;
    int d = deg(rng);
    for (int e = 0; e <= d; ++e) {
        std::uniform_int_distribution<int> keep(0, 2);
        if (keep(rng) == 0) continue;
        ts.emplace_back(e, random_fieldl(rng, lam_deg));
    }
    return PolyT::from_terms(std::move(ts));
}

inline FieldK random_fieldk(Rng& rng, int max_deg = 2) {
    PolyT num = random_polyt(rng, max_deg);
    PolyT den;
    do den = random_polyt(rng, max_deg > 1 ? max_deg - 1 : 1);
    while (den.is_zero());
    FieldK d(den);
    return FieldK(num) / d;
}

inline FieldK random_nonzero_fieldk(Rng& rng, int max_deg = 2) {
    FieldK f;
    do f = random_fieldk(rng, max_deg);
    while (f.is_zero());
    return f;
}

}  // namespace freealg::testing
