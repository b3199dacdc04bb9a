#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freealg/orefield.hpp"
#include "test_util.hpp"

using namespace freealg;

namespace {

OreElement one() { return OreElement(1); }
OreElement X() { return OreElement::X(); }
// alpha = (1-X)^-1
OreElement alpha() { return (one() - X()).inverse(); }
// beta = t(1-t)^-2, a coefficient constant
OreElement beta() {
    FieldK t = FieldK::t();
    FieldK omt = FieldK(1) - t;
    return OreElement(t / (omt * omt));
}
// gamma = alpha^2 - alpha = X(1-X)^-2
OreElement gamma() { return alpha() * alpha() - alpha(); }
// delta = gamma * beta * gamma
OreElement delta() { return gamma() * beta() * gamma(); }

OreElement random_ore(testing::Rng& rng) {
    std::vector<SkewLaurentPoly::Term> nts, dts;
    std::uniform_int_distribution<int> deg(0, 2), coin(0, 1);
    int nd = deg(rng), dd = deg(rng);
    for (int e = 0; e <= nd; ++e) {
        FieldK c(FieldL(testing::random_rational(rng, 3)));
        if (coin(rng)) c = c * FieldK::t();
        if (!c.is_zero()) nts.push_back({e, c});
    }
    for (int e = 0; e <= dd; ++e) {
        FieldK c(FieldL(testing::random_rational(rng, 3)));
        if (coin(rng)) c = c + FieldK::lambda();
        if (!c.is_zero()) dts.push_back({e, c});
    }
    SkewLaurentPoly den = SkewLaurentPoly::from_terms(std::move(dts));
    if (den.is_zero()) den = SkewLaurentPoly(1);
    if (den.min_exp() > 0) den = den.shifted(-den.min_exp());
    return OreElement(den, SkewLaurentPoly::from_terms(std::move(nts)));
}

}  // namespace

TEST_CASE("basic fraction arithmetic") {
    CHECK(alpha() * (one() - X()) == one());
    CHECK(alpha() + alpha() == OreElement(2) * alpha());
    CHECK_THROWS_AS(one() / OreElement(), std::domain_error);
}

TEST_CASE("gamma = alpha^2 - alpha equals X(1-X)^-2") {
    SkewLaurentPoly one_minus_x = SkewLaurentPoly(1) - SkewLaurentPoly::X();
    OreElement expect(one_minus_x * one_minus_x, SkewLaurentPoly::X());
    CHECK(gamma() == expect);
}

TEST_CASE("star fixes gamma, delta, and sends X to X^-1") {
    CHECK(star(OreElement::X()) == OreElement::X(-1));
    CHECK(star(gamma()) == gamma());
    CHECK(star(delta()) == delta());
    CHECK(star(one() + gamma()) == one() + gamma());
    CHECK(star(one() + delta()) == one() + delta());
}

TEST_CASE("valuations of the paper elements") {
    CHECK(valuation(gamma()) == Valuation::of(1));
    CHECK(valuation(delta()) == Valuation::of(2));
    CHECK(valuation(one()) == Valuation::of(0));
    CHECK(valuation(OreElement()) == Valuation::infinity());
    CHECK(valuation(OreElement::X(-3)) == Valuation::of(-3));
}

TEST_CASE("field axioms on random samples") {
    testing::Rng rng(41);
    for (int i = 0; i < 25; ++i) {
        OreElement a = random_ore(rng);
        OreElement b = random_ore(rng);
        OreElement c = random_ore(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == one());
    }
}

TEST_CASE("star is an involutive antiautomorphism of Q") {
    testing::Rng rng(43);
    for (int i = 0; i < 25; ++i) {
        OreElement a = random_ore(rng);
        OreElement b = random_ore(rng);
        CHECK(star(star(a)) == a);
        CHECK(star(a * b) == star(b) * star(a));
        CHECK(star(a + b) == star(a) + star(b));
    }
}

TEST_CASE("valuation is multiplicative and ultrametric") {
    testing::Rng rng(47);
    for (int i = 0; i < 25; ++i) {
        OreElement a = random_ore(rng);
        OreElement b = random_ore(rng);
        Valuation va = valuation(a), vb = valuation(b), vab = valuation(a * b);
        if (!va.infinite && !vb.infinite) CHECK(vab == Valuation::of(va.value + vb.value));
        Valuation vsum = valuation(a + b);
        if (!vsum.infinite && !va.infinite && !vb.infinite)
            CHECK(vsum.value >= std::min(va.value, vb.value));
    }
}

TEST_CASE("to_series matches known expansions") {
    // (1-X)^-1 -> 1 + X + X^2 + X^3 + X^4
    TruncatedSkewSeries s = to_series(alpha(), 5);
    CHECK(s.start() == 0);
    CHECK(s.hi() == 5);
    for (int e = 0; e < 5; ++e) CHECK(s.coeff(e) == FieldK(1));

    // gamma -> X + 2X^2 + 3X^3
    TruncatedSkewSeries g = to_series(gamma(), 3);
    CHECK(g.start() == 1);
    CHECK(g.hi() == 4);
    for (int e = 1; e <= 3; ++e) CHECK(g.coeff(e) == FieldK(e));

    // beta * alpha has leading coefficient beta itself at X^0
    TruncatedSkewSeries ba = to_series(beta() * alpha(), 1);
    FieldK t = FieldK::t();
    FieldK omt = FieldK(1) - t;
    CHECK(ba.start() == 0);
    CHECK(ba.coeff(0) == t / (omt * omt));
}

TEST_CASE("series/fraction consistency") {
    testing::Rng rng(53);
    const std::int64_t N = 6;
    for (int i = 0; i < 20; ++i) {
        OreElement a = random_ore(rng);
        OreElement b = random_ore(rng);
        TruncatedSkewSeries sa = to_series(a, N), sb = to_series(b, N);
        CHECK(to_series(a + b, N).agrees_with(sa + sb));
        CHECK(to_series(a * b, N).agrees_with(sa * sb));
        // nu(x) equals the min exponent of to_series(x, 1)
        if (!a.is_zero()) CHECK(valuation(a) == Valuation::of(to_series(a, 1).start()));
    }
}
