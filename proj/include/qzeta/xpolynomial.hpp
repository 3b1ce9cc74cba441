#pragma once

#include "qzeta/log_scalar.hpp"

#include <complex>
#include <vector>

namespace qzeta {

/// Polynomial in x with LogScalar coefficients, ascending degree.
class XPolynomial {
public:
    XPolynomial() = default;
    explicit XPolynomial(std::vector<LogScalar> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<LogScalar>& coeffs() const { return coeffs_; }
    LogScalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : LogScalar(); }

    LogScalar eval(const Rational& x) const;
    std::complex<double> eval(std::complex<double> qv, std::complex<double> x) const;

    // P(a*x + b).
    XPolynomial compose_affine(const Rational& a, const Rational& b) const;
    XPolynomial scaled(const RationalFunction& c) const;
    XPolynomial scaled(const Rational& c) const;
    XPolynomial subst_power(unsigned m) const;

    friend XPolynomial operator+(const XPolynomial& a, const XPolynomial& b);
    friend bool operator==(const XPolynomial&, const XPolynomial&) = default;

private:
    void trim();
    std::vector<LogScalar> coeffs_;
};

} // namespace qzeta
