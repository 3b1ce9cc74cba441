#include "qzeta/log_scalar.hpp"

#include "qzeta/errors.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace qzeta {

LogScalar operator*(const LogScalar& a, const LogScalar& b) {
    if (a.has_log() && b.has_log())
        throw DomainError("log-degree overflow");
    if (!b.has_log())
        return LogScalar(a.rat_ * b.rat_, a.log_ * b.rat_);
    return LogScalar(a.rat_ * b.rat_, b.log_ * a.rat_);
}

LogScalar operator/(const LogScalar& a, const LogScalar& b) {
    if (b.has_log() || b.rat_.is_zero())
        throw DomainError("non-invertible");
    RationalFunction inv = b.rat_.inverse();
    return LogScalar(a.rat_ * inv, a.log_ * inv);
}

LogScalar LogScalar::subst_power(unsigned m) const {
    if (m == 0)
        throw DomainError("substitution exponent must be positive");
    if (m == 1)
        return *this;
    return LogScalar(rat_.subst_power(m), log_.subst_power(m).scaled(Rational(m)));
}

std::complex<double> eval_complex(const LogScalar& a, std::complex<double> qv) {
    if (qv == 0.0)
        throw DomainError("log q undefined at q = 0");
    std::complex<double> out = a.rat().eval(qv);
    if (a.has_log())
        out += a.log().eval(qv) * std::log(qv);
    return out;
}

double eval_high_precision(const LogScalar& a, const Rational& q) {
    using Float = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<150>>;
    if (q <= 0)
        throw DomainError("high-precision evaluation requires q > 0");
    auto to_float = [](const Rational& r) {
        return Float(r.get_num().get_str()) / Float(r.get_den().get_str());
    };
    Float out = to_float(a.rat().eval(q));
    if (a.has_log())
        out += to_float(a.log().eval(q)) * boost::multiprecision::log(to_float(q));
    return static_cast<double>(out);
}

} // namespace qzeta
