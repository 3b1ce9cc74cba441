#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qzeta {

// Arbitrary-precision rational. The two-argument mpq_class constructor does not
// reduce; build fractions with ratio().
using Rational = mpq_class;
using Integer = mpz_class;

// num/den in lowest terms; den = 0 throws DomainError.
Rational ratio(const Integer& num, const Integer& den);

// Accepts "a", "a/b", or a finite decimal such as "-0.125" or "2.7".
Rational parse_rational(std::string_view text);

// Always renders "a/b" (integers as "a/1").
std::string to_string(const Rational& r);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

// Rational power with a signed exponent; 0^negative throws DomainError.
Rational pow(const Rational& base, long exponent);

} // namespace qzeta
