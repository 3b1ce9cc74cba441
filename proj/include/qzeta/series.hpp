#pragma once

#include "qzeta/errors.hpp"
#include "qzeta/log_scalar.hpp"

#include <algorithm>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qzeta {

// Coefficient ring interface for TruncatedSeries.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
    static Rational zero() { return 0; }
    static Rational one() { return 1; }
    static Rational inverse(const Rational& c) {
        if (c == 0)
            throw DomainError("non-invertible constant term");
        return 1 / c;
    }
    static Rational div_integer(const Rational& c, const Integer& k) { return c / k; }
};

template <>
struct RingTraits<RationalFunction> {
    static RationalFunction zero() { return {}; }
    static RationalFunction one() { return 1; }
    static RationalFunction inverse(const RationalFunction& c) {
        if (c.is_zero())
            throw DomainError("non-invertible constant term");
        return c.inverse();
    }
    static RationalFunction div_integer(const RationalFunction& c, const Integer& k) {
        return c.scaled(Rational(Integer(1), k));
    }
};

template <>
struct RingTraits<LogScalar> {
    static LogScalar zero() { return {}; }
    static LogScalar one() { return 1L; }
    static LogScalar inverse(const LogScalar& c) {
        if (c.has_log() || c.rat().is_zero())
            throw DomainError("non-invertible constant term");
        return LogScalar(c.rat().inverse());
    }
    static LogScalar div_integer(const LogScalar& c, const Integer& k) {
        return c.scaled(Rational(Integer(1), k));
    }
};

template <>
struct RingTraits<std::complex<double>> {
    using C = std::complex<double>;
    static C zero() { return 0.0; }
    static C one() { return 1.0; }
    static C inverse(const C& c) {
        if (c == 0.0)
            throw DomainError("non-invertible constant term");
        return 1.0 / c;
    }
    static C div_integer(const C& c, const Integer& k) { return c / k.get_d(); }
};

/// Power series in t truncated after t^order. Coefficient n is the
/// coefficient of t^n (no factorial normalization).
template <class R>
class TruncatedSeries {
public:
    using Traits = RingTraits<R>;

    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, Traits::zero()) {}
    explicit TruncatedSeries(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("truncated series needs at least one coefficient");
    }

    static TruncatedSeries constant(const R& c, std::size_t order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<R>& coeffs() const { return coeffs_; }

    const R& coeff(std::size_t n) const {
        if (n > order())
            throw std::out_of_range("coefficient index " + std::to_string(n) + " beyond truncation order " +
                                    std::to_string(order()));
        return coeffs_[n];
    }
    void set(std::size_t n, R value) {
        if (n > order())
            throw std::out_of_range("coefficient index beyond truncation order");
        coeffs_[n] = std::move(value);
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= out.order(); ++i)
            out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return out;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries out(std::min(a.order(), b.order()));
        for (std::size_t i = 0; i <= out.order(); ++i)
            out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return out;
    }

    // Cauchy product truncated at min(order).
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t order = std::min(a.order(), b.order());
        TruncatedSeries out(order);
        for (std::size_t n = 0; n <= order; ++n) {
            R acc = Traits::zero();
            for (std::size_t k = 0; k <= n; ++k) {
                if (is_zero(a.coeffs_[k]) || is_zero(b.coeffs_[n - k]))
                    continue;
                acc = acc + a.coeffs_[k] * b.coeffs_[n - k];
            }
            out.coeffs_[n] = std::move(acc);
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    static bool is_zero(const R& c) {
        if constexpr (std::is_same_v<R, std::complex<double>>)
            return c == 0.0;
        else if constexpr (std::is_same_v<R, Rational>)
            return c == 0;
        else
            return c.is_zero();
    }

    std::vector<R> coeffs_;
};

// 1 / A through the truncation order: b0 = 1/c0, b_n = -b0 * sum_{k=1..n} c_k b_{n-k}.
template <class R>
TruncatedSeries<R> invert(const TruncatedSeries<R>& a) {
    using Traits = RingTraits<R>;
    const std::size_t order = a.order();
    const R c0_inv = Traits::inverse(a.coeff(0));
    std::vector<R> b(order + 1, Traits::zero());
    b[0] = c0_inv;
    for (std::size_t n = 1; n <= order; ++n) {
        R acc = Traits::zero();
        for (std::size_t k = 1; k <= n; ++k)
            acc = acc + a.coeff(k) * b[n - k];
        b[n] = -(acc * c0_inv);
    }
    return TruncatedSeries<R>(std::move(b));
}

// exp(a t) = sum a^n / n! t^n.
template <class R>
TruncatedSeries<R> exp_series(const R& a, std::size_t order) {
    using Traits = RingTraits<R>;
    std::vector<R> c(order + 1, Traits::zero());
    c[0] = Traits::one();
    for (std::size_t n = 1; n <= order; ++n)
        c[n] = Traits::div_integer(c[n - 1] * a, Integer(static_cast<unsigned long>(n)));
    return TruncatedSeries<R>(std::move(c));
}

} // namespace qzeta
