#include "qzeta/qbernoulli.hpp"

#include "qzeta/errors.hpp"
#include "qzeta/series.hpp"

#include <cmath>
#include <string>

namespace qzeta {

namespace {

using CSeries = TruncatedSeries<std::complex<double>>;

std::complex<double> int_power(std::complex<double> z, long k) {
    if (k < 0)
        return 1.0 / int_power(z, -k);
    std::complex<double> r = 1.0;
    while (k > 0) {
        if (k & 1)
            r *= z;
        z *= z;
        k >>= 1;
    }
    return r;
}

void require_unit_disc(std::complex<double> qv) {
    const double r = std::abs(qv);
    if (!(r > 0.0 && r < 1.0))
        throw DomainError("numeric q must satisfy 0 < |q| < 1");
}

Witness exact_witness(std::string label, const LogScalar& diff) {
    Witness w;
    w.label = std::move(label);
    w.kind = DiscrepancyKind::exact;
    w.ok = diff.is_zero();
    if (!w.ok)
        w.exact = to_json(diff);
    return w;
}

} // namespace

std::vector<Rational> classical_bernoulli(int max_n) {
    if (max_n < 0)
        throw DomainError("Bernoulli index must be nonnegative");
    std::vector<Rational> b(static_cast<std::size_t>(max_n) + 1);
    b[0] = 1;
    for (int n = 1; n <= max_n; ++n) {
        Rational acc = 0;
        for (int k = 0; k < n; ++k)
            acc += binomial(static_cast<unsigned long>(n + 1), static_cast<unsigned long>(k)) * b[k];
        b[n] = -acc / (n + 1);
    }
    return b;
}

QBernoulliTable q_bernoulli_numbers(int h, int max_n) {
    if (max_n < 0)
        throw DomainError("Bernoulli index must be nonnegative");
    QBernoulliTable table{h, max_n, {}};
    table.values.reserve(static_cast<std::size_t>(max_n) + 1);
    if (h == 0) {
        for (const auto& b : classical_bernoulli(max_n))
            table.values.emplace_back(b);
        return table;
    }

    const auto order = static_cast<std::size_t>(max_n);
    const LogScalar w(RationalFunction::q_power(h));
    // q^h e^t - 1
    TruncatedSeries<LogScalar> denominator = exp_series(LogScalar(1L), order);
    for (std::size_t k = 0; k <= order; ++k)
        denominator.set(k, denominator.coeff(k) * w);
    denominator.set(0, denominator.coeff(0) - LogScalar(1L));
    const TruncatedSeries<LogScalar> g = invert(denominator);

    const LogScalar h_lambda = LogScalar::lambda().scaled(Rational(h));
    Integer fact = 1;
    for (int n = 0; n <= max_n; ++n) {
        if (n > 0)
            fact *= n;
        LogScalar coeff = h_lambda * g.coeff(static_cast<std::size_t>(n));
        if (n > 0)
            coeff += g.coeff(static_cast<std::size_t>(n - 1));
        table.values.push_back(coeff.scaled(Rational(fact)));
    }
    return table;
}

XPolynomial q_bernoulli_polynomial(const QBernoulliTable& table, int n) {
    if (n < 0 || n > table.max_n)
        throw DomainError("polynomial degree outside the Bernoulli table");
    std::vector<LogScalar> coeffs(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        coeffs[static_cast<std::size_t>(n - k)] =
            table.values[static_cast<std::size_t>(k)].scaled(
                Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))));
    return XPolynomial(std::move(coeffs));
}

XPolynomial q_bernoulli_polynomial(int h, int n) {
    return q_bernoulli_polynomial(q_bernoulli_numbers(h, n), n);
}

VerificationReport gen_function_identity_check(int h, int order) {
    if (h == 0)
        throw DomainError("generating-function check needs h != 0");
    if (order < 2)
        throw DomainError("truncation order must be at least 2");
    VerificationReport report;
    report.identity = "genfunction";
    report.add_param("h", std::to_string(h));
    report.add_param("T", std::to_string(order));

    const auto t_order = static_cast<std::size_t>(order);
    const QBernoulliTable table = q_bernoulli_numbers(h, order);
    TruncatedSeries<LogScalar> f(t_order);
    Integer fact = 1;
    for (int n = 0; n <= order; ++n) {
        if (n > 0)
            fact *= n;
        f.set(static_cast<std::size_t>(n), table.values[static_cast<std::size_t>(n)].scaled(Rational(Integer(1), fact)));
    }
    const LogScalar w(RationalFunction::q_power(h));
    TruncatedSeries<LogScalar> d = exp_series(LogScalar(1L), t_order);
    for (std::size_t k = 0; k <= t_order; ++k)
        d.set(k, d.coeff(k) * w);
    d.set(0, d.coeff(0) - LogScalar(1L));
    const TruncatedSeries<LogScalar> product = d * f;

    for (std::size_t n = 0; n <= t_order; ++n) {
        LogScalar expected;
        if (n == 0)
            expected = LogScalar::lambda().scaled(Rational(h));
        else if (n == 1)
            expected = LogScalar(1L);
        report.witnesses.push_back(exact_witness("t^" + std::to_string(n), product.coeff(n) - expected));
    }
    report.finalize();
    return report;
}

VerificationReport distribution_check(const QBernoulliTable& table, int n, int m) {
    if (m < 1)
        throw DomainError("distribution relation needs m >= 1");
    if (n < 0 || n > table.max_n)
        throw DomainError("distribution relation index outside the Bernoulli table");
    VerificationReport report;
    report.identity = "distribution";
    report.add_param("h", std::to_string(table.h));
    report.add_param("n", std::to_string(n));
    report.add_param("m", std::to_string(m));

    const XPolynomial lhs = q_bernoulli_polynomial(table, n);
    const XPolynomial base_m = lhs.subst_power(static_cast<unsigned>(m));
    XPolynomial rhs;
    const Rational inv_m(1, m);
    for (int i = 0; i < m; ++i) {
        XPolynomial shifted = base_m.compose_affine(inv_m, ratio(i, m));
        if (i > 0 && table.h != 0)
            shifted = shifted.scaled(RationalFunction::q_power(static_cast<long>(table.h) * i));
        rhs = rhs + shifted;
    }
    rhs = rhs.scaled(pow(Rational(m), n - 1));

    const int top = std::max(lhs.degree(), rhs.degree());
    for (int k = 0; k <= std::max(top, 0); ++k) {
        const auto idx = static_cast<std::size_t>(k);
        report.witnesses.push_back(exact_witness("x^" + std::to_string(k), lhs.coeff(idx) - rhs.coeff(idx)));
    }
    report.finalize();
    return report;
}

VerificationReport distribution_check(int h, int n, int m) {
    return distribution_check(q_bernoulli_numbers(h, n), n, m);
}

GeneralizedBernoulliTerms::GeneralizedBernoulliTerms(int h, int n, std::int64_t d)
    : GeneralizedBernoulliTerms(q_bernoulli_numbers(h, n), n, d) {}

GeneralizedBernoulliTerms::GeneralizedBernoulliTerms(const QBernoulliTable& table, int n, std::int64_t d)
    : h_(table.h), n_(n), d_(d) {
    if (d < 1)
        throw DomainError("modulus must be positive");
    const XPolynomial poly = q_bernoulli_polynomial(table, n).subst_power(static_cast<unsigned>(d));
    const Rational scale = pow(Rational(d), n - 1);
    terms_.reserve(static_cast<std::size_t>(d));
    for (std::int64_t i = 0; i < d; ++i)
        terms_.push_back(poly.eval(ratio(i, d)).scaled(scale));
}

std::complex<double> GeneralizedBernoulliTerms::eval(const DirichletCharacter& chi, std::complex<double> qv) const {
    if (chi.modulus() != d_)
        throw DomainError("character modulus does not match the precomputed terms");
    if (h_ == 0)
        throw DomainError("degenerate h * d = 0");
    require_unit_disc(qv);
    const std::complex<double> w = int_power(qv, h_);
    std::complex<double> acc = 0.0, wi = 1.0;
    for (std::int64_t i = 0; i < d_; ++i, wi *= w) {
        const UnityRoot c = chi(i);
        if (c.is_zero())
            continue;
        acc += to_complex(c) * wi * eval_complex(terms_[static_cast<std::size_t>(i)], qv);
    }
    return acc;
}

LogScalar GeneralizedBernoulliTerms::exact(const DirichletCharacter& chi) const {
    if (chi.modulus() != d_)
        throw DomainError("character modulus does not match the precomputed terms");
    if (!chi.is_real())
        throw DomainError("exact generalized Bernoulli needs a character with values in {-1, 0, 1}");
    LogScalar acc;
    for (std::int64_t i = 0; i < d_; ++i) {
        const int c = chi.real_value(i);
        if (c == 0)
            continue;
        LogScalar term = terms_[static_cast<std::size_t>(i)];
        if (h_ != 0 && i != 0)
            term = term.scaled(RationalFunction::q_power(static_cast<long>(h_) * i));
        acc += c > 0 ? term : -term;
    }
    return acc;
}

std::complex<double> generalized_q_bernoulli(const DirichletCharacter& chi, int h, int n, std::complex<double> qv) {
    if (h == 0)
        throw DomainError("degenerate h * d = 0");
    require_unit_disc(qv);
    return GeneralizedBernoulliTerms(h, n, chi.modulus()).eval(chi, qv);
}

LogScalar generalized_q_bernoulli_exact(const DirichletCharacter& chi, int h, int n) {
    if (!chi.is_real())
        throw DomainError("exact generalized Bernoulli needs a character with values in {-1, 0, 1}");
    return GeneralizedBernoulliTerms(h, n, chi.modulus()).exact(chi);
}

std::vector<std::complex<double>> generalized_via_generating_function(const DirichletCharacter& chi, int h,
                                                                      int max_n, std::complex<double> qv,
                                                                      int order) {
    if (h == 0)
        throw DomainError("degenerate h * d = 0");
    if (max_n < 0)
        throw DomainError("Bernoulli index must be nonnegative");
    require_unit_disc(qv);
    if (order < 0)
        order = 2 * max_n + 4;
    if (order < max_n)
        throw DomainError("truncation order must be at least max_n");
    const auto t = static_cast<std::size_t>(order);
    const std::int64_t d = chi.modulus();
    const std::complex<double> w = int_power(qv, h);
    const std::complex<double> h_log = static_cast<double>(h) * std::log(qv);

    // sum_i chi(i) w^i e^{it}
    CSeries twisted(t);
    std::complex<double> wi = 1.0;
    for (std::int64_t i = 0; i < d; ++i, wi *= w) {
        const UnityRoot c = chi(i);
        if (c.is_zero())
            continue;
        const CSeries e = exp_series(std::complex<double>(static_cast<double>(i)), t);
        const std::complex<double> weight = to_complex(c) * wi;
        for (std::size_t k = 0; k <= t; ++k)
            twisted.set(k, twisted.coeff(k) + weight * e.coeff(k));
    }
    CSeries linear(t);
    linear.set(0, h_log);
    if (t >= 1)
        linear.set(1, 1.0);
    CSeries denominator = exp_series(std::complex<double>(static_cast<double>(d)), t);
    const std::complex<double> wd = int_power(w, d);
    for (std::size_t k = 0; k <= t; ++k)
        denominator.set(k, denominator.coeff(k) * wd);
    denominator.set(0, denominator.coeff(0) - 1.0);

    const CSeries f = linear * twisted * invert(denominator);
    std::vector<std::complex<double>> out;
    double fact = 1.0;
    for (int n = 0; n <= max_n; ++n) {
        if (n > 0)
            fact *= n;
        out.push_back(fact * f.coeff(static_cast<std::size_t>(n)));
    }
    return out;
}

} // namespace qzeta
