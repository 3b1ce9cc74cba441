#pragma once

#include "qzeta/log_scalar.hpp"

#include <cstdint>
#include <string>

namespace qzeta {

/// Element of Q_p known to finite precision: p^v * u + O(p^{v + r}), with u a
/// unit modulo p^r (r the relative precision). A value that vanishes to the
/// available precision is stored as the zero O(p^k); for it valuation()
/// returns k, a lower bound on the true valuation.
class Padic {
public:
    // O(p^abs_precision)
    static Padic zero(std::int64_t p, long abs_precision);
    // The rational x with `precision` digits of relative precision; an exact
    // zero becomes O(p^precision).
    static Padic from_rational(std::int64_t p, const Rational& x, long precision);
    static Padic from_integer(std::int64_t p, const Integer& x, long precision) {
        return from_rational(p, Rational(x), precision);
    }

    std::int64_t prime() const { return p_; }
    bool is_zero() const { return unit_ == 0; }
    long valuation() const { return val_; }
    long relative_precision() const { return is_zero() ? 0 : rel_; }
    long absolute_precision() const { return is_zero() ? val_ : val_ + rel_; }
    const Integer& unit() const { return unit_; }
    // Representative p^v * u as an exact rational.
    Rational to_rational() const;
    // Residue modulo p^abs_precision (requires nonnegative valuation).
    Integer residue() const;

    Padic operator-() const;
    friend Padic operator+(const Padic& a, const Padic& b);
    friend Padic operator-(const Padic& a, const Padic& b);
    friend Padic operator*(const Padic& a, const Padic& b);
    friend Padic operator/(const Padic& a, const Padic& b);

    // Same value and precision.
    friend bool operator==(const Padic&, const Padic&) = default;

    std::string to_string() const;

private:
    Padic(std::int64_t p, long val, Integer unit, long rel) : p_(p), val_(val), unit_(std::move(unit)), rel_(rel) {}
    static Padic normalized(std::int64_t p, long val, Integer value, long abs_precision);

    std::int64_t p_ = 2;
    long val_ = 0;
    Integer unit_{0};
    long rel_ = 0;
};

Integer prime_power(std::int64_t p, long k);
long valuation(const Integer& x, std::int64_t p);

// Smallest valuation the log/exp series accept: 1 for odd p, 2 for p = 2.
long padic_series_domain(std::int64_t p);

// sum (-1)^{k+1} (q-1)^k / k; needs v_p(q - 1) >= padic_series_domain(p).
Padic padic_log(const Padic& q);
// sum t^k / k!; needs v_p(t) >= padic_series_domain(p).
Padic padic_exp(const Padic& t);
// Square-and-multiply; negative exponents invert.
Padic padic_pow(const Padic& q, long x);
// exp(x log q) for a p-adic integer exponent.
Padic padic_pow_exp_log(const Padic& q, const Padic& x);
// (1 - q^x) / (1 - q); q = 1 throws DomainError.
Padic q_bracket(long x, const Padic& q);

// rat(q) + log(q) * log_p(q).
Padic eval_padic(const LogScalar& a, const Padic& q);
Padic eval_padic(const RationalFunction& f, const Padic& q);

} // namespace qzeta
