#include "qzeta/analytic.hpp"
#include "qzeta/errors.hpp"

#include "doctest.h"

#include <cmath>
#include <numbers>

using namespace qzeta;

namespace {

Complex brute_lerch(Complex w, Complex s, double x, int terms) {
    Complex acc = 0.0, wk = 1.0;
    for (int k = 0; k < terms; ++k, wk *= w)
        acc += wk * std::pow(Complex(k + x), -s);
    return acc;
}

} // namespace

TEST_CASE("lerch sum against a closed form") {
    // sum 2^{-k} / (k+1)^2 = 2 Li_2(1/2) = pi^2/6 - log(2)^2
    const auto v = lerch_sum(0.5, 2.0, 1.0);
    const double expected = std::numbers::pi * std::numbers::pi / 6 - std::log(2.0) * std::log(2.0);
    CHECK(std::abs(v.value - expected) < 1e-12);
    CHECK(v.tail_bound <= 1e-12);
}

TEST_CASE("lerch sum against brute force, with honest tail bounds") {
    for (Complex w : {Complex(0.5), Complex(0.3, 0.4), Complex(-0.9)}) {
        for (Complex s : {Complex(-3.0), Complex(2.5), Complex(0.5, 1.0), Complex(-6.0)}) {
            for (double x : {1.0, 0.5, 2.7}) {
                const auto v = lerch_sum(w, s, x);
                const Complex ref = brute_lerch(w, s, x, 4000);
                CHECK(std::abs(v.value - ref) <= v.tail_bound + 1e-9 * (1 + std::abs(ref)));
            }
        }
    }
}

TEST_CASE("preconditions") {
    CHECK_THROWS_AS(q_zeta(1, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(q_zeta(1, 1.5, 2.0), DomainError);
    CHECK_THROWS_AS(q_zeta(-1, 0.5, 2.0), DomainError);
    CHECK_THROWS_AS(q_hurwitz_zeta(1, 0.5, 2.0, -1.0), DomainError);
    CHECK_THROWS_AS(lerch_sum(1.0, 2.0, 1.0), DomainError);
    SeriesEvalConfig tiny;
    tiny.max_terms = 5;
    CHECK_THROWS_AS(q_zeta(1, 0.99, 2.0, tiny), PrecisionError);
    SeriesEvalConfig bad;
    bad.tol = 1e-20;
    CHECK_THROWS_AS(q_zeta(1, 0.5, 2.0, bad), DomainError);
}

TEST_CASE("q-zeta matches its defining series") {
    for (int h : {1, 2}) {
        for (Complex qv : {Complex(0.5), Complex(0.3, 0.4)}) {
            for (Complex s : {Complex(3.0), Complex(-2.0), Complex(0.5, 2.0)}) {
                const Complex hl = static_cast<double>(h) * std::log(qv);
                Complex a = 0.0, b = 0.0;
                for (int n = 1; n < 3000; ++n) {
                    const Complex w = std::pow(qv, (n - 1) * h);
                    a += w * std::pow(Complex(n), -s);
                    b += w * std::pow(Complex(n), 1.0 - s);
                }
                const Complex ref = a - hl / (s - 1.0) * b;
                const auto v = q_zeta(h, qv, s);
                CHECK(std::abs(v.value - ref) < 1e-9 * (1 + std::abs(ref)));
                CHECK(std::abs(q_hurwitz_zeta(h, qv, s, 1.0).value - v.value) < 1e-12 * (1 + std::abs(ref)));
            }
        }
    }
}

TEST_CASE("q-L function matches its defining series") {
    const auto chi = character(5, 1);
    const Complex qv(0.4, 0.3), s(-1.5, 0.5);
    const int h = 2;
    const Complex hl = static_cast<double>(h) * std::log(qv);
    Complex a = 0.0, b = 0.0;
    for (int n = 1; n < 3000; ++n) {
        const Complex w = std::pow(qv, n * h) * to_complex(chi(n));
        a += w * std::pow(Complex(n), -s);
        b += w * std::pow(Complex(n), 1.0 - s);
    }
    const Complex ref = a - hl / (s - 1.0) * b;
    CHECK(std::abs(q_l_function(h, qv, s, chi).value - ref) < 1e-9 * (1 + std::abs(ref)));
    // trivial character: L = q^h zeta because of the shifted index
    const auto one = character(1, 0);
    CHECK(std::abs(q_l_function(h, qv, s, one).value - std::pow(qv, h) * q_zeta(h, qv, s).value) < 1e-10);
}

TEST_CASE("interpolation at negative integers") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(zeta_interpolation_verify(1, 0.5, n, 1.0).pass);
        CHECK(zeta_interpolation_verify(3, Complex(0.3, 0.4), n, 2.7).pass);
        CHECK(l_interpolation_verify(2, 0.2, n, character(4, 1)).pass);
        CHECK(l_interpolation_verify(1, Complex(0.3, 0.4), n, character(5, 1)).pass);
    }
    CHECK(l_interpolation_verify(1, 0.5, 2, character(1, 0)).pass);
}

TEST_CASE("trivial character at n = 1 misses by exactly one") {
    // The L-series starts at n = 1 and so drops the 0^0 term carried by the
    // generalized Bernoulli number of the mod-1 character.
    for (int h : {1, 2, 3}) {
        for (Complex qv : {Complex(0.2), Complex(0.5), Complex(0.3, 0.4)}) {
            const auto r = l_interpolation_verify(h, qv, 1, character(1, 0));
            CHECK_FALSE(r.pass);
            REQUIRE(r.witnesses.size() == 1);
            CHECK(std::abs(r.witnesses[0].error - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("formatting is pinned") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_complex(Complex(1.5, -2.0)) == "1.5-2i");
}
