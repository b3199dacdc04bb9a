#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freealg/tower.hpp"
#include "test_util.hpp"

using namespace freealg;

namespace {

FieldK t() { return FieldK::t(); }
FieldK lam() { return FieldK::lambda(); }
FieldK one_minus_t() { return FieldK(1) - t(); }

// beta = t*(1-t)^-2, the paper's coefficient element.
FieldK beta() { return t() / (one_minus_t() * one_minus_t()); }

}  // namespace

TEST_CASE("field arithmetic basics") {
    CHECK(field_arith(t(), t(), FieldOp::add) == FieldK(2) * t());
    CHECK(field_arith(t(), t(), FieldOp::div) == FieldK(1));
    CHECK(t() * t().inverse() == FieldK(1));

    FieldK inv1mt = one_minus_t().inverse();
    CHECK(inv1mt + inv1mt == FieldK(2) * inv1mt);

    CHECK_THROWS_AS(field_arith(t(), FieldK(), FieldOp::div), std::domain_error);
}

TEST_CASE("reduced normal form with monic denominator") {
    // (2t^2 + 2t)/(2t) must come back as t + 1.
    FieldK x = (FieldK(2) * t() * t() + FieldK(2) * t()) / (FieldK(2) * t());
    CHECK(x == t() + FieldK(1));
    auto [n, d] = x.as_fraction();
    CHECK(d == PolyT(FieldL(1)));

    auto [bn, bd] = beta().as_fraction();
    CHECK(bd.leading_coeff() == FieldL(1));  // monic: t^2 - 2t + 1
    CHECK(bd.degree() == 2);
    CHECK(bn == PolyT::variable());
}

TEST_CASE("sigma substitutes t -> lam*t and fixes Q(lam)") {
    CHECK(sigma_apply(t()) == lam() * t());
    CHECK(sigma_apply(lam()) == lam());

    // t(1-t)^-2 -> lam*t*(1-lam*t)^-2
    FieldK lhs = sigma_apply(beta());
    FieldK oml = FieldK(1) - lam() * t();
    CHECK(lhs == lam() * t() / (oml * oml));
}

TEST_CASE("sigma_power is the j-fold iterate") {
    CHECK(sigma_power(t(), -1) == lam().inverse() * t());
    CHECK(sigma_power(t(), 0) == t());
    CHECK(sigma_power(t() * t(), 2) == lam().pow(4) * t() * t());

    testing::Rng rng(7);
    for (int i = 0; i < 30; ++i) {
        FieldK f = testing::random_fieldk(rng);
        std::uniform_int_distribution<int> js(-3, 3);
        int a = js(rng), b = js(rng);
        CHECK(sigma_power(f, a + b) == sigma_power(sigma_power(f, a), b));
    }
}

TEST_CASE("star maps lam -> 1/lam, t -> 1/t") {
    CHECK(star_K(t()) == t().inverse());
    CHECK(star_K(beta()) == beta());  // beta is star-symmetric
    CHECK(star_K(lam() + t()) == lam().inverse() + t().inverse());
}

TEST_CASE("star is an involutive automorphism commuting with sigma") {
    testing::Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        FieldK f = testing::random_fieldk(rng);
        FieldK g = testing::random_fieldk(rng);
        CHECK(star_K(star_K(f)) == f);
        CHECK(star_K(f * g) == star_K(f) * star_K(g));
        CHECK(star_K(f + g) == star_K(f) + star_K(g));
        CHECK(star_K(sigma_apply(f)) == sigma_apply(star_K(f)));
    }
}

TEST_CASE("field axioms on random samples") {
    testing::Rng rng(13);
    for (int i = 0; i < 40; ++i) {
        FieldK a = testing::random_fieldk(rng);
        FieldK b = testing::random_fieldk(rng);
        FieldK c = testing::random_fieldk(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inverse() == FieldK(1));
    }
}

TEST_CASE("layer classification") {
    CHECK(FieldK(rat(3, 4)).layer() == FieldK::Layer::Q0);
    CHECK(lam().layer() == FieldK::Layer::K_lambda);
    CHECK((lam() + FieldK(1)).inverse().layer() == FieldK::Layer::K_lambda);
    CHECK(t().layer() == FieldK::Layer::K_lambda_t);
    CHECK(beta().layer() == FieldK::Layer::K_lambda_t);
}

TEST_CASE("lambda-layer gcd") {
    PolyL a = PolyL::from_terms({{0, Rational(-1)}, {2, Rational(1)}});  // lam^2 - 1
    PolyL b = PolyL::from_terms({{0, Rational(-1)}, {1, Rational(1)}});  // lam - 1
    CHECK(gcd_poly(a, b) == b);
    CHECK(gcd_poly(a, PolyL(Rational(1))).is_constant());

    testing::Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        PolyL p = testing::random_nonzero_polyl(rng);
        PolyL q = testing::random_nonzero_polyl(rng);
        PolyL m = testing::random_nonzero_polyl(rng, 2);
        PolyL g = gcd_poly(p * m, q * m);
        CHECK(g.divisible_by(gcd_poly(p, q) * m.monic()));
        CHECK((p * m).divisible_by(g));
        CHECK((q * m).divisible_by(g));
    }
}

TEST_CASE("t-layer gcd via evaluation and interpolation") {
    testing::Rng rng(19);
    for (int i = 0; i < 40; ++i) {
        PolyT p = testing::random_polyt(rng, 3);
        PolyT q = testing::random_polyt(rng, 3);
        PolyT m = testing::random_polyt(rng, 2);
        if (p.is_zero() || q.is_zero() || m.is_zero()) continue;
        PolyT g = gcd_poly(p * m, q * m);
        CHECK((p * m).divisible_by(g));
        CHECK((q * m).divisible_by(g));
        CHECK(g.divisible_by(gcd_poly(p, q) * m.monic()));
    }
}

TEST_CASE("parith keeps fractions exact under mixed layers") {
    // lam + t with division chains
    FieldK x = (lam() + t()) / (lam() - t());
    FieldK y = x.inverse();
    CHECK(x * y == FieldK(1));
    CHECK((x + y) * (x + y) == x * x + FieldK(2) * x * y + y * y);
}
