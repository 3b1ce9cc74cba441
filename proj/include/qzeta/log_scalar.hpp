#pragma once

#include "qzeta/rational_function.hpp"

#include <complex>

namespace qzeta {

/// rat(q) + log(q) * L, where L stands for log q.
///
/// Values are at most linear in L: multiplying two log-bearing scalars
/// throws DomainError("log-degree overflow").
class LogScalar {
public:
    LogScalar() = default;
    LogScalar(RationalFunction rat, RationalFunction log = {}) : rat_(std::move(rat)), log_(std::move(log)) {}
    LogScalar(const Rational& c) : rat_(c) {}
    LogScalar(long c) : rat_(c) {}

    // 0 + 1 * L
    static LogScalar lambda() { return LogScalar(RationalFunction(), RationalFunction(1)); }

    const RationalFunction& rat() const { return rat_; }
    const RationalFunction& log() const { return log_; }
    bool has_log() const { return !log_.is_zero(); }
    bool is_zero() const { return rat_.is_zero() && log_.is_zero(); }

    LogScalar operator-() const { return LogScalar(-rat_, -log_); }
    LogScalar scaled(const Rational& c) const { return LogScalar(rat_.scaled(c), log_.scaled(c)); }
    LogScalar scaled(const RationalFunction& c) const { return LogScalar(rat_ * c, log_ * c); }

    // q -> q^m in both components; the L coefficient gains a factor m.
    LogScalar subst_power(unsigned m) const;

    friend LogScalar operator+(const LogScalar& a, const LogScalar& b) {
        return LogScalar(a.rat_ + b.rat_, a.log_ + b.log_);
    }
    friend LogScalar operator-(const LogScalar& a, const LogScalar& b) {
        return LogScalar(a.rat_ - b.rat_, a.log_ - b.log_);
    }
    friend LogScalar operator*(const LogScalar& a, const LogScalar& b);
    friend LogScalar operator/(const LogScalar& a, const LogScalar& b);
    friend bool operator==(const LogScalar&, const LogScalar&) = default;

    LogScalar& operator+=(const LogScalar& b) { return *this = *this + b; }
    LogScalar& operator-=(const LogScalar& b) { return *this = *this - b; }
    LogScalar& operator*=(const LogScalar& b) { return *this = *this * b; }

private:
    RationalFunction rat_;
    RationalFunction log_;
};

// rat(qv) + log(qv) * Log(qv), principal branch. Throws DomainError for
// qv = 0 or when a denominator vanishes at qv.
std::complex<double> eval_complex(const LogScalar& a, std::complex<double> qv);

// Real evaluation at a positive rational q carried out with ~150 significant
// digits before rounding to double; the rat and log parts are evaluated
// exactly. Suited to q close to 1, where both parts blow up and cancel.
double eval_high_precision(const LogScalar& a, const Rational& q);

} // namespace qzeta
