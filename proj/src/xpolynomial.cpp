#include "qzeta/xpolynomial.hpp"

namespace qzeta {

XPolynomial::XPolynomial(std::vector<LogScalar> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void XPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

LogScalar XPolynomial::eval(const Rational& x) const {
    LogScalar acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc.scaled(x) + coeffs_[i];
    return acc;
}

std::complex<double> XPolynomial::eval(std::complex<double> qv, std::complex<double> x) const {
    std::complex<double> acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;)
        acc = acc * x + eval_complex(coeffs_[i], qv);
    return acc;
}

XPolynomial XPolynomial::compose_affine(const Rational& a, const Rational& b) const {
    // Taylor shift by b, then scale x by a.
    std::vector<LogScalar> c = coeffs_;
    const std::size_t n = c.size();
    if (b != 0)
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = n - 1; j-- > i;)
                c[j] = c[j] + c[j + 1].scaled(b);
    if (a != 1) {
        Rational power = 1;
        for (auto& coeff : c) {
            coeff = coeff.scaled(power);
            power *= a;
        }
    }
    return XPolynomial(std::move(c));
}

XPolynomial XPolynomial::scaled(const RationalFunction& s) const {
    std::vector<LogScalar> c;
    c.reserve(coeffs_.size());
    for (const auto& coeff : coeffs_)
        c.push_back(coeff.scaled(s));
    return XPolynomial(std::move(c));
}

XPolynomial XPolynomial::scaled(const Rational& s) const {
    std::vector<LogScalar> c;
    c.reserve(coeffs_.size());
    for (const auto& coeff : coeffs_)
        c.push_back(coeff.scaled(s));
    return XPolynomial(std::move(c));
}

XPolynomial XPolynomial::subst_power(unsigned m) const {
    std::vector<LogScalar> c;
    c.reserve(coeffs_.size());
    for (const auto& coeff : coeffs_)
        c.push_back(coeff.subst_power(m));
    return XPolynomial(std::move(c));
}

XPolynomial operator+(const XPolynomial& a, const XPolynomial& b) {
    std::vector<LogScalar> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(i) + b.coeff(i);
    return XPolynomial(std::move(c));
}

} // namespace qzeta
