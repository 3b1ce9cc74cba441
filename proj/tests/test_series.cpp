#include "qzeta/series.hpp"

#include "doctest.h"

#include <random>

using namespace qzeta;

TEST_CASE("inverse times series is one") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-6, 6);
    for (int trial = 0; trial < 20; ++trial) {
        TruncatedSeries<Rational> a(10);
        for (std::size_t k = 0; k <= 10; ++k)
            a.set(k, ratio(c(rng), 1 + trial % 4));
        if (a.coeff(0) == 0)
            a.set(0, 1);
        CHECK(a * invert(a) == TruncatedSeries<Rational>::constant(1, 10));
    }
    CHECK_THROWS_AS(invert(TruncatedSeries<Rational>(4)), DomainError);
}

TEST_CASE("exp series is a homomorphism") {
    const auto e2 = exp_series(Rational(2), 12);
    const auto e3 = exp_series(Rational(3), 12);
    CHECK(e2 * e3 == exp_series(Rational(5), 12));
    CHECK(e2.coeff(3) == ratio(8, 6));
}

TEST_CASE("truncation semantics") {
    const TruncatedSeries<Rational> a(std::vector<Rational>{1, 2, 3});
    const TruncatedSeries<Rational> b(std::vector<Rational>{1, 1});
    const auto prod = a * b;
    CHECK(prod.order() == 1);
    CHECK(prod.coeff(1) == 3);
    CHECK_THROWS_AS(prod.coeff(2), std::out_of_range);
    CHECK_THROWS(TruncatedSeries<Rational>(std::vector<Rational>{}));
}

TEST_CASE("series over rational functions") {
    // 1 / (1 - q t) = sum q^n t^n
    TruncatedSeries<RationalFunction> a(6);
    a.set(0, 1);
    a.set(1, -RationalFunction::q());
    const auto inv = invert(a);
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(inv.coeff(n) == RationalFunction::q_power(static_cast<long>(n)));
}

TEST_CASE("complex series inverse") {
    using C = std::complex<double>;
    const auto e = exp_series(C(0.5, 0.25), 15);
    const auto inv = invert(e);
    const auto back = exp_series(C(-0.5, -0.25), 15);
    for (std::size_t n = 0; n <= 15; ++n)
        CHECK(std::abs(inv.coeff(n) - back.coeff(n)) < 1e-14);
}
