#pragma once

#include "qzeta/rational.hpp"

#include <complex>
#include <cstddef>
#include <vector>

namespace qzeta {

using IntegerVector = std::vector<Integer>;

/// Univariate polynomial in q with rational coefficients.
///
/// Stored as content * primitive part: the primitive part is an integer
/// coefficient vector (ascending degree) with coprime entries and a positive
/// leading coefficient. The zero polynomial has an empty primitive part and
/// content 0. The representation is unique, so equality is structural.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const std::vector<Rational>& coeffs);

    static QPoly constant(const Rational& c);
    static QPoly monomial(const Rational& c, std::size_t degree);
    // Normalizes an arbitrary (content, integer vector) pair.
    static QPoly from_integers(Rational content, IntegerVector coeffs);

    int degree() const { return static_cast<int>(prim_.size()) - 1; }
    bool is_zero() const { return prim_.empty(); }
    bool is_constant() const { return prim_.size() <= 1; }
    bool is_one() const;

    Rational coeff(std::size_t i) const;
    Rational leading() const;
    std::vector<Rational> coeffs() const;
    const Rational& content() const { return content_; }
    const IntegerVector& primitive() const { return prim_; }

    QPoly operator-() const;
    QPoly scaled(const Rational& c) const;
    QPoly primitive_part() const;
    // q -> q^m.
    QPoly subst_power(unsigned m) const;

    Rational eval(const Rational& x) const;
    std::complex<double> eval(std::complex<double> x) const;

    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend bool operator==(const QPoly& a, const QPoly& b) {
        return a.content_ == b.content_ && a.prim_ == b.prim_;
    }

private:
    Rational content_{0};
    IntegerVector prim_;
};

// Greatest common divisor as a primitive polynomial with positive leading
// coefficient. gcd(0, 0) = 0; gcd(a, 0) = primitive_part(a).
QPoly gcd(const QPoly& a, const QPoly& b);

// a / b where b divides a exactly over Q. Throws DomainError otherwise.
QPoly divide_exact(const QPoly& a, const QPoly& b);

} // namespace qzeta
