#pragma once

#include "qzeta/qpoly.hpp"

#include <complex>

namespace qzeta {

/// Element of Q(q) in canonical form: gcd(num, den) = 1 and den monic.
class RationalFunction {
public:
    RationalFunction() : den_(QPoly::constant(1)) {}
    RationalFunction(const Rational& c) : num_(QPoly::constant(c)), den_(QPoly::constant(1)) {}
    RationalFunction(long c) : RationalFunction(Rational(c)) {}
    explicit RationalFunction(QPoly num);
    RationalFunction(QPoly num, QPoly den);

    // q^k for any integer k.
    static RationalFunction q_power(long k);
    static RationalFunction q() { return q_power(1); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction scaled(const Rational& c) const;
    RationalFunction inverse() const;
    // q -> q^m; preserves canonical form.
    RationalFunction subst_power(unsigned m) const;

    // Throws DomainError("pole") if the denominator vanishes at x.
    Rational eval(const Rational& x) const;
    std::complex<double> eval(std::complex<double> x) const;

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }

private:
    struct Canonical {};
    RationalFunction(QPoly num, QPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}
    static RationalFunction make_monic(QPoly num, QPoly den);

    QPoly num_;
    QPoly den_;
};

} // namespace qzeta
