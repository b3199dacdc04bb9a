#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freealg/orefield.hpp"
#include "freealg/skewseries.hpp"
#include "test_util.hpp"

using namespace freealg;

namespace {

TruncatedSkewSeries poly_series(const SkewLaurentPoly& p, std::int64_t hi) {
    return TruncatedSkewSeries::from_poly(p, hi);
}

}  // namespace

TEST_CASE("ts_mul with central and twisted coefficients") {
    SkewLaurentPoly one(1), X = SkewLaurentPoly::X();
    TruncatedSkewSeries u = poly_series(one + X, 6);
    TruncatedSkewSeries v = poly_series(one - X, 6);
    TruncatedSkewSeries w = ts_mul(u, v);
    CHECK(w.coeff(0) == FieldK(1));
    CHECK(w.coeff(1).is_zero());
    CHECK(w.coeff(2) == FieldK(-1));

    // (X t)*(X t) = X^2 lam t^2
    TruncatedSkewSeries xt = poly_series(SkewLaurentPoly::monomial(1, FieldK::t()), 6);
    TruncatedSkewSeries sq = ts_mul(xt, xt);
    CHECK(sq.coeff(2) == FieldK::lambda() * FieldK::t() * FieldK::t());
}

TEST_CASE("window bookkeeping") {
    TruncatedSkewSeries a = TruncatedSkewSeries::zero(4);
    TruncatedSkewSeries b = poly_series(SkewLaurentPoly::X(2), 7);
    TruncatedSkewSeries p = a * b;
    CHECK(p.zero_on_window());
    CHECK(p.hi() == 6);  // v(a) >= 4 so the product is known through X^5

    // add keeps the shorter knowledge horizon; the X^2 term is below it
    TruncatedSkewSeries s = a + b;
    CHECK(s.hi() == 4);
    CHECK(s.coeff(2) == FieldK(1));
}

TEST_CASE("ts_invert matches classic expansions") {
    SkewLaurentPoly one(1), X = SkewLaurentPoly::X();
    TruncatedSkewSeries inv = ts_invert(poly_series(one - X, 5));
    for (int e = 0; e < 5; ++e) CHECK(inv.coeff(e) == FieldK(1));
    CHECK(inv.hi() == 5);

    CHECK(ts_invert(poly_series(X, 5)).coeff(-1) == FieldK(1));

    TruncatedSkewSeries sq = ts_invert(poly_series((one - X) * (one - X), 4));
    for (int e = 0; e < 4; ++e) CHECK(sq.coeff(e) == FieldK(e + 1));

    CHECK_THROWS_AS(ts_invert(TruncatedSkewSeries::zero(3)), std::domain_error);
}

TEST_CASE("inverse of a Laurent unit keeps the window length") {
    // x = X^2(1 - X) known mod X^6: window length 4; x^-1 starts at -2 and
    // must be known mod X^2.
    SkewLaurentPoly p = SkewLaurentPoly::X(2) - SkewLaurentPoly::X(3);
    TruncatedSkewSeries x = poly_series(p, 6);
    TruncatedSkewSeries inv = ts_invert(x);
    CHECK(inv.start() == -2);
    CHECK(inv.hi() == 2);
    CHECK(inv.window_length() == x.window_length());
    TruncatedSkewSeries prod = x * inv;
    CHECK(prod.coeff(0) == FieldK(1));
}

TEST_CASE("random units invert on the valid window") {
    testing::Rng rng(59);
    for (int i = 0; i < 20; ++i) {
        std::vector<SkewLaurentPoly::Term> ts;
        ts.push_back({0, FieldK(FieldL(testing::random_nonzero_rational(rng, 4)))});
        std::uniform_int_distribution<int> coin(0, 1);
        for (int e = 1; e <= 3; ++e) {
            FieldK c(FieldL(testing::random_rational(rng, 3)));
            if (coin(rng)) c = c * FieldK::t();
            if (!c.is_zero()) ts.push_back({e, c});
        }
        TruncatedSkewSeries u = poly_series(SkewLaurentPoly::from_terms(std::move(ts)), 6);
        TruncatedSkewSeries prod = ts_mul(u, ts_invert(u));
        CHECK(prod.coeff(0) == FieldK(1));
        for (int e = 1; e < 6; ++e) CHECK(prod.coeff(e).is_zero());
    }
}

TEST_CASE("associativity on window-intersected triples") {
    testing::Rng rng(61);
    for (int i = 0; i < 15; ++i) {
        std::vector<SkewLaurentPoly::Term> ts;
        std::uniform_int_distribution<int> ex(-1, 3);
        for (int k = 0; k < 3; ++k) {
            FieldK c(FieldL(testing::random_rational(rng, 3)));
            if (k == 1) c = c * FieldK::t();
            if (!c.is_zero()) ts.push_back({ex(rng), c});
        }
        TruncatedSkewSeries a = poly_series(SkewLaurentPoly::from_terms(ts), 5);
        TruncatedSkewSeries b =
            poly_series(SkewLaurentPoly(FieldK::t()) + SkewLaurentPoly::X(), 5);
        TruncatedSkewSeries c = poly_series(SkewLaurentPoly(1) - SkewLaurentPoly::X(2), 5);
        CHECK(((a * b) * c).agrees_with(a * (b * c)));
    }
}
