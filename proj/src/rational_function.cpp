#include "qzeta/rational_function.hpp"

#include "qzeta/errors.hpp"

#include <cmath>

namespace qzeta {

RationalFunction::RationalFunction(QPoly num) : num_(std::move(num)), den_(QPoly::constant(1)) {}

RationalFunction::RationalFunction(QPoly num, QPoly den) {
    if (den.is_zero())
        throw DomainError("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = QPoly::constant(1);
        return;
    }
    QPoly g = gcd(num, den);
    if (!g.is_constant()) {
        num = divide_exact(num, g);
        den = divide_exact(den, g);
    }
    *this = make_monic(std::move(num), std::move(den));
}

RationalFunction RationalFunction::make_monic(QPoly num, QPoly den) {
    if (num.is_zero())
        return RationalFunction();
    Rational lead = den.leading();
    if (lead != 1) {
        Rational inv = 1 / lead;
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
    return RationalFunction(std::move(num), std::move(den), Canonical{});
}

RationalFunction RationalFunction::q_power(long k) {
    if (k >= 0)
        return RationalFunction(QPoly::monomial(1, static_cast<std::size_t>(k)));
    return RationalFunction(QPoly::constant(1), QPoly::monomial(1, static_cast<std::size_t>(-k)), Canonical{});
}

RationalFunction RationalFunction::operator-() const {
    return RationalFunction(-num_, den_, Canonical{});
}

RationalFunction RationalFunction::scaled(const Rational& c) const {
    if (c == 0)
        return {};
    return RationalFunction(num_.scaled(c), den_, Canonical{});
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero())
        throw DomainError("division by zero rational function");
    return make_monic(den_, num_);
}

RationalFunction RationalFunction::subst_power(unsigned m) const {
    if (m == 0)
        throw DomainError("substitution exponent must be positive");
    return RationalFunction(num_.subst_power(m), den_.subst_power(m), Canonical{});
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0)
        throw DomainError("pole: denominator vanishes at q = " + x.get_str());
    return num_.eval(x) / d;
}

std::complex<double> RationalFunction::eval(std::complex<double> x) const {
    std::complex<double> d = den_.eval(x);
    if (d == 0.0 || !std::isfinite(d.real()) || !std::isfinite(d.imag()))
        throw DomainError("pole: denominator vanishes at the evaluation point");
    return num_.eval(x) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    using RF = RationalFunction;
    if (a.den_ == b.den_) {
        QPoly n = a.num_ + b.num_;
        if (n.is_zero())
            return {};
        if (a.den_.is_one())
            return RF(std::move(n), a.den_, RF::Canonical{});
        QPoly g = gcd(n, a.den_);
        if (g.is_constant())
            return RF(std::move(n), a.den_, RF::Canonical{});
        return RF::make_monic(divide_exact(n, g), divide_exact(a.den_, g));
    }
    if (a.den_.is_one())
        return RF(a.num_ * b.den_ + b.num_, b.den_, RF::Canonical{});
    if (b.den_.is_one())
        return RF(b.num_ * a.den_ + a.num_, a.den_, RF::Canonical{});

    // Henrici: any common factor of the new numerator and denominator
    // divides gcd(a.den, b.den).
    QPoly g = gcd(a.den_, b.den_);
    if (g.is_constant()) {
        QPoly n = a.num_ * b.den_ + b.num_ * a.den_;
        return RF::make_monic(std::move(n), a.den_ * b.den_);
    }
    QPoly ad = divide_exact(a.den_, g);
    QPoly bd = divide_exact(b.den_, g);
    QPoly n = a.num_ * bd + b.num_ * ad;
    if (n.is_zero())
        return {};
    QPoly d = a.den_ * bd;
    QPoly g2 = gcd(n, g);
    if (!g2.is_constant()) {
        n = divide_exact(n, g2);
        d = divide_exact(d, g2);
    }
    return RF::make_monic(std::move(n), std::move(d));
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    using RF = RationalFunction;
    if (a.is_zero() || b.is_zero())
        return {};
    if (a.den_.is_one() && b.den_.is_one())
        return RF(a.num_ * b.num_, a.den_, RF::Canonical{});
    QPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    QPoly g1 = gcd(an, bd);
    if (!g1.is_constant()) {
        an = divide_exact(an, g1);
        bd = divide_exact(bd, g1);
    }
    QPoly g2 = gcd(bn, ad);
    if (!g2.is_constant()) {
        bn = divide_exact(bn, g2);
        ad = divide_exact(ad, g2);
    }
    return RF::make_monic(an * bn, ad * bd);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero())
        throw DomainError("division by zero rational function");
    return a * b.inverse();
}

} // namespace qzeta
