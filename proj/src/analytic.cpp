#include "qzeta/analytic.hpp"

#include "qzeta/errors.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace qzeta {

namespace {

void validate(const SeriesEvalConfig& cfg) {
    if (!(cfg.tol >= 1e-14))
        throw DomainError("series tolerance must be >= 1e-14");
    if (cfg.max_terms < 1 || cfg.max_terms > 100'000'000)
        throw DomainError("max_terms must lie in [1, 1e8]");
}

Complex int_power(Complex z, long k) {
    if (k < 0)
        return 1.0 / int_power(z, -k);
    Complex r = 1.0;
    while (k > 0) {
        if (k & 1)
            r *= z;
        z *= z;
        k >>= 1;
    }
    return r;
}

// w = q^h with the analytic-side constraints.
Complex checked_base(int h, Complex qv, Complex s) {
    const double r = std::abs(qv);
    if (!(r > 0.0 && r < 1.0))
        throw DomainError("q must satisfy 0 < |q| < 1");
    if (s == Complex(1.0, 0.0))
        throw DomainError("pole at s = 1");
    const Complex w = int_power(qv, h);
    if (!(std::abs(w) < 1.0))
        throw DomainError("series diverges: |q^h| >= 1 (h must be positive for |q| < 1)");
    return w;
}

} // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_complex(Complex z) {
    return format_double(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + format_double(std::abs(z.imag())) + "i";
}

SeriesValue lerch_sum(Complex w, Complex s, double x, const SeriesEvalConfig& cfg) {
    validate(cfg);
    const double aw = std::abs(w);
    if (!(aw < 1.0))
        throw DomainError("lerch sum diverges for |w| >= 1");
    if (!(x > 0.0))
        throw DomainError("lerch sum needs x > 0");
    if (aw == 0.0)
        return {std::exp(-s * std::log(x)), 0.0, 1};

    const double sigma = s.real();
    const double log_aw = std::log(aw);
    const double ratio_gate = 0.5 * (1.0 + aw);
    Complex acc = 0.0, wk = 1.0;
    for (std::int64_t k = 0; k < cfg.max_terms; ++k) {
        const double base = static_cast<double>(k) + x;
        acc += wk * std::exp(-s * std::log(base));
        wk *= w;

        // Ratio bound for every later step: |w| ((j+x)/(j+1+x))^sigma, j > k.
        // Increasing in j towards |w| when sigma >= 0, decreasing when sigma < 0.
        const double next = base + 1.0;
        const double rho = sigma >= 0.0 ? aw : aw * std::pow(next / (next + 1.0), sigma);
        if (rho > ratio_gate)
            continue;
        const double log_next = static_cast<double>(k + 1) * log_aw - sigma * std::log(next);
        const double tail = std::exp(log_next) / (1.0 - rho);
        if (tail <= cfg.tol)
            return {acc, tail, k + 1};
    }
    throw PrecisionError("lerch sum did not converge within " + std::to_string(cfg.max_terms) + " terms");
}

SeriesValue q_hurwitz_zeta(int h, Complex qv, Complex s, double x, const SeriesEvalConfig& cfg) {
    const Complex w = checked_base(h, qv, s);
    if (!(x > 0.0))
        throw DomainError("Hurwitz parameter x must be positive");
    const SeriesValue a = lerch_sum(w, s, x, cfg);
    const SeriesValue b = lerch_sum(w, s - 1.0, x, cfg);
    const Complex coeff = static_cast<double>(h) * std::log(qv) / (s - 1.0);
    return {a.value - coeff * b.value, a.tail_bound + std::abs(coeff) * b.tail_bound, a.terms + b.terms};
}

SeriesValue q_zeta(int h, Complex qv, Complex s, const SeriesEvalConfig& cfg) {
    return q_hurwitz_zeta(h, qv, s, 1.0, cfg);
}

SeriesValue q_l_function(int h, Complex qv, Complex s, const DirichletCharacter& chi, const SeriesEvalConfig& cfg) {
    const Complex w = checked_base(h, qv, s);
    const std::int64_t d = chi.modulus();
    const double dd = static_cast<double>(d);
    const Complex wd = int_power(w, d);
    const Complex coeff = static_cast<double>(h) * std::log(qv) / (s - 1.0);
    // n = r + d j: chi(r) w^r d^{-s} sum_j (w^d)^j (j + r/d)^{-s}
    Complex first = 0.0, second = 0.0;
    double tail = 0.0;
    std::int64_t terms = 0;
    Complex wr = 1.0;
    const Complex d_pow_s = std::exp(-s * std::log(dd));
    const Complex d_pow_s1 = std::exp(-(s - 1.0) * std::log(dd));
    for (std::int64_t r = 1; r <= d; ++r) {
        wr *= w;
        const UnityRoot c = chi(r);
        if (c.is_zero())
            continue;
        const Complex weight = to_complex(c) * wr;
        const double x = static_cast<double>(r) / dd;
        const SeriesValue a = lerch_sum(wd, s, x, cfg);
        const SeriesValue b = lerch_sum(wd, s - 1.0, x, cfg);
        first += weight * d_pow_s * a.value;
        second += weight * d_pow_s1 * b.value;
        tail += std::abs(weight) * (std::abs(d_pow_s) * a.tail_bound + std::abs(coeff * d_pow_s1) * b.tail_bound);
        terms += a.terms + b.terms;
    }
    return {first - coeff * second, tail, terms};
}

VerificationReport zeta_interpolation_verify(const QBernoulliTable& table, Complex qv, int n, double x,
                                             const SeriesEvalConfig& cfg, double tolerance) {
    if (n < 1)
        throw DomainError("interpolation check needs n >= 1");
    VerificationReport r;
    r.identity = "interp-zeta";
    r.add_param("h", std::to_string(table.h));
    r.add_param("q", format_complex(qv));
    r.add_param("n", std::to_string(n));
    r.add_param("x", format_double(x));
    const SeriesValue z = q_hurwitz_zeta(table.h, qv, Complex(1.0 - n, 0.0), x, cfg);
    const Complex b = q_bernoulli_polynomial(table, n).eval(qv, Complex(x, 0.0));
    r.add_param("tail_bound", format_double(z.tail_bound));
    Witness w;
    w.label = "zeta(1-n,x) + B_n(x)/n";
    w.kind = DiscrepancyKind::numeric;
    w.error = std::abs(z.value + b / static_cast<double>(n));
    w.tolerance = tolerance;
    w.ok = w.error <= tolerance;
    r.witnesses.push_back(w);
    r.finalize();
    return r;
}

VerificationReport zeta_interpolation_verify(int h, Complex qv, int n, double x, const SeriesEvalConfig& cfg,
                                             double tolerance) {
    if (n < 1)
        throw DomainError("interpolation check needs n >= 1");
    return zeta_interpolation_verify(q_bernoulli_numbers(h, n), qv, n, x, cfg, tolerance);
}

VerificationReport l_interpolation_verify(const GeneralizedBernoulliTerms& terms, Complex qv,
                                          const DirichletCharacter& chi, const SeriesEvalConfig& cfg,
                                          double tolerance) {
    const int n = terms.n();
    if (n < 1)
        throw DomainError("interpolation check needs n >= 1");
    VerificationReport r;
    r.identity = "interp-l";
    r.add_param("h", std::to_string(terms.h()));
    r.add_param("q", format_complex(qv));
    r.add_param("n", std::to_string(n));
    r.add_param("modulus", std::to_string(chi.modulus()));
    r.add_param("char_index", std::to_string(chi.index()));
    const SeriesValue l = q_l_function(terms.h(), qv, Complex(1.0 - n, 0.0), chi, cfg);
    const Complex b = terms.eval(chi, qv);
    r.add_param("tail_bound", format_double(l.tail_bound));
    Witness w;
    w.label = "L(1-n,chi) + B_{n,chi}/n";
    w.kind = DiscrepancyKind::numeric;
    w.error = std::abs(l.value + b / static_cast<double>(n));
    w.tolerance = tolerance;
    w.ok = w.error <= tolerance;
    r.witnesses.push_back(w);
    r.finalize();
    return r;
}

VerificationReport l_interpolation_verify(int h, Complex qv, int n, const DirichletCharacter& chi,
                                          const SeriesEvalConfig& cfg, double tolerance) {
    if (n < 1)
        throw DomainError("interpolation check needs n >= 1");
    return l_interpolation_verify(GeneralizedBernoulliTerms(h, n, chi.modulus()), qv, chi, cfg, tolerance);
}

} // namespace qzeta
