#include "qzeta/errors.hpp"
#include "qzeta/qbernoulli.hpp"
#include "qzeta/volkenborn.hpp"
#include "qzeta/volkenborn_kernels.hpp"

#include "doctest.h"

#include <random>

using namespace qzeta;

namespace {

// Valuation of a - b, at least the smaller absolute precision.
long agreement(const Padic& a, const Padic& b) { return (a - b).valuation(); }

} // namespace

TEST_CASE("construction and valuation") {
    const Padic a = Padic::from_rational(5, Rational(50, 3), 10);
    CHECK(a.valuation() == 2);
    CHECK(a.relative_precision() == 10);
    CHECK(a.absolute_precision() == 12);
    CHECK(Padic::from_rational(5, Rational(1, 5), 4).valuation() == -1);
    CHECK(Padic::from_rational(5, 0, 7).is_zero());
    CHECK(Padic::from_rational(5, 0, 7).valuation() == 7);
    CHECK(Padic::from_rational(7, Rational(3, 4), 6).to_rational() != Rational(3, 4)); // truncated representative
    CHECK(agreement(Padic::from_rational(7, Rational(3, 4), 6), Padic::from_rational(7, Rational(3, 4), 20)) >= 6);
    CHECK_THROWS_AS(Padic::from_rational(5, 1, 0), PrecisionError);
    CHECK(valuation(Integer(250), 5) == 3);
}

TEST_CASE("field operations agree with rational arithmetic") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> num(-500, 500), den(1, 60);
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (int trial = 0; trial < 50; ++trial) {
            Rational x(num(rng), den(rng)), y(num(rng), den(rng));
            if (x == 0 || y == 0)
                continue;
            const long prec = 12;
            const Padic a = Padic::from_rational(p, x, prec), b = Padic::from_rational(p, y, prec);
            const auto check = [&](const Padic& got, const Rational& exact) {
                const Padic want = Padic::from_rational(p, exact, 40);
                CHECK(agreement(got, want) >= got.absolute_precision());
            };
            check(a + b, x + y);
            check(a - b, x - y);
            check(a * b, x * y);
            check(a / b, x / y);
            CHECK((a * b).relative_precision() == prec);
        }
    }
    CHECK_THROWS_AS(Padic::from_rational(5, 1, 5) / Padic::zero(5, 5), DomainError);
}

TEST_CASE("log and exp") {
    for (std::int64_t p : {2, 3, 5}) {
        const long prec = 20;
        const long dom = padic_series_domain(p);
        const Integer pd = prime_power(p, dom);
        const Padic x = Padic::from_rational(p, Rational(pd * 3), prec);
        const Padic y = Padic::from_rational(p, ratio(pd * 7, 11), prec);
        CHECK(agreement(padic_log(padic_exp(x)), x) >= prec);
        CHECK(agreement(padic_exp(x + y), padic_exp(x) * padic_exp(y)) >= prec);
        const Padic u = Padic::from_rational(p, 1 + Rational(pd), prec);
        const Padic v = Padic::from_rational(p, 1 - Rational(pd * 2), prec);
        CHECK(agreement(padic_log(u * v), padic_log(u) + padic_log(v)) >= prec);
    }
    CHECK_THROWS_AS(padic_log(Padic::from_rational(5, 2, 10)), DomainError);
    CHECK_THROWS_AS(padic_exp(Padic::from_rational(2, 2, 10)), DomainError);
}

TEST_CASE("integer powers") {
    const Padic q = Padic::from_rational(5, 6, 15);
    CHECK(agreement(padic_pow(q, 7), Padic::from_rational(5, 279936, 30)) >= 15);
    CHECK(agreement(padic_pow(q, -2) * padic_pow(q, 2), Padic::from_rational(5, 1, 30)) >= 15);
    const Padic x = Padic::from_rational(5, 13, 15);
    CHECK(agreement(padic_pow_exp_log(q, x), padic_pow(q, 13)) >= 14);
    // dividing by 1 - q costs one digit
    CHECK(agreement(q_bracket(3, q), Padic::from_rational(5, 1 + 6 + 36, 30)) >= 14);
}

TEST_CASE("exp(t)^x equals exp(x t)") {
    const Padic t = Padic::from_rational(7, 7, 25);
    const Padic et = padic_exp(t);
    for (long x : {0L, 1L, 5L, 48L, 343L})
        CHECK(agreement(padic_pow(et, x), padic_exp(Padic::from_rational(7, Rational(7 * x), 25))) >= 25);
}

TEST_CASE("rational function evaluation") {
    const auto b1 = q_bernoulli_numbers(0, 1).values[1];
    CHECK(agreement(eval_padic(b1, Padic::from_rational(5, 6, 10)), Padic::from_rational(5, Rational(-1, 2), 20)) >= 10);
    const RationalFunction pole(QPoly::constant(1), QPoly({Rational(-6), Rational(1)}));
    CHECK_THROWS_AS(eval_padic(pole, Padic::from_rational(5, 6, 10)), PrecisionError);
}

TEST_CASE("serial and parallel moment kernels agree") {
    std::mt19937 rng(23);
    for (std::int64_t p : {3, 5, 7}) {
        for (int trial = 0; trial < 4; ++trial) {
            MomentJob job;
            job.p = p;
            job.work_precision = 12;
            job.base = 1 + p * (1 + trial);
            job.count = 1000 + 517 * trial;
            job.max_moment = 5;
            if (trial % 2 == 1)
                job.weights = {0, 1, -1, 1};
            CHECK(moment_sums_serial(job) == moment_sums_parallel(job));
        }
    }
}

TEST_CASE("moment sums match exact rational sums") {
    // h = 0: p^{-N} sum_{x < p^N} x^k computed in Q
    const std::int64_t p = 5;
    const int level = 3;
    const Padic q = Padic::from_rational(p, 6, 20);
    const auto sums = volkenborn_moments(0, q, 4, level);
    for (int k = 0; k <= 4; ++k) {
        Rational exact = 0;
        for (long x = 0; x < 125; ++x)
            exact += pow(Rational(x), k);
        exact /= 125;
        CHECK(agreement(sums[static_cast<std::size_t>(k)], Padic::from_rational(p, exact, 40)) >=
              sums[static_cast<std::size_t>(k)].absolute_precision());
    }
    // h = 2: weights q^{2x}
    const auto weighted = volkenborn_moments(2, q, 2, 2);
    Rational exact = 0;
    for (long x = 0; x < 25; ++x)
        exact += pow(Rational(36), x) * x * x;
    exact /= 25;
    CHECK(agreement(weighted[2], Padic::from_rational(p, exact, 40)) >= weighted[2].absolute_precision());
    VolkenbornOptions serial;
    serial.mode = KernelMode::serial;
    const auto s2 = volkenborn_moments(2, q, 2, 2, serial);
    CHECK(s2[2] == weighted[2]);
}

TEST_CASE("Witt formula converges and fails against the wrong target") {
    const Padic q = Padic::from_rational(5, 6, 30);
    const auto r = witt_verify(1, 3, q, {3, 4, 5});
    CHECK(r.pass);
    const auto sums = volkenborn_moments(1, q, 3, 5);
    const Padic wrong = eval_padic(q_bernoulli_numbers(2, 3).values[3], q);
    CHECK(agreement(sums[3], wrong) < 2);
    CHECK(agreement(sums[3], eval_padic(q_bernoulli_numbers(1, 3).values[3], q)) >= 4);
}

TEST_CASE("shift, closed form and character sums") {
    const Padic q = Padic::from_rational(5, 6, 30);
    CHECK(shift_identity_verify({3, 1, q}, 2, {3, 4, 5}).pass);
    CHECK(closed_form_verify(1, Padic::from_rational(5, 5, 30), q, {3, 4, 5}).pass);
    CHECK(padic_generalized_verify(character(3, 1), 1, 2, q, {3, 4}).pass);
    CHECK_THROWS_AS(padic_generalized_verify(character(5, 2), 1, 2, q, {3}), DomainError);
}

TEST_CASE("q-Volkenborn approximants stabilize") {
    const Padic q = Padic::from_rational(5, 6, 25);
    const Padic s3 = q_volkenborn_sum(2, 1, 0, q, 3);
    const Padic s4 = q_volkenborn_sum(2, 1, 0, q, 4);
    const Padic s5 = q_volkenborn_sum(2, 1, 0, q, 5);
    CHECK(agreement(s4, s5) > agreement(s3, s4));
}
