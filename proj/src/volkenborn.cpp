#include "qzeta/volkenborn.hpp"

#include "qzeta/errors.hpp"
#include "qzeta/qbernoulli.hpp"
#include "qzeta/volkenborn_kernels.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

namespace qzeta {

namespace {

// residue known modulo p^abs_precision
Padic from_residue(std::int64_t p, const Integer& residue, long abs_precision) {
    if (abs_precision <= 0)
        throw PrecisionError("precision exhausted");
    Integer r;
    const Integer modulus = prime_power(p, abs_precision);
    mpz_fdiv_r(r.get_mpz_t(), residue.get_mpz_t(), modulus.get_mpz_t());
    if (r == 0)
        return Padic::zero(p, abs_precision);
    const long v = valuation(r, p);
    return Padic::from_integer(p, r, abs_precision - v);
}

Padic inverse_prime_power(std::int64_t p, long level, long precision) {
    return Padic::from_rational(p, Rational(Integer(1), prime_power(p, level)), precision + 64);
}

std::int64_t level_count(std::int64_t p, int level, std::int64_t factor, const VolkenbornOptions& opts) {
    if (level < 1)
        throw DomainError("Volkenborn level must be >= 1");
    const Integer count = prime_power(p, level) * factor;
    if (count > opts.max_terms)
        throw DomainError("summation needs " + count.get_str() + " terms, above the cap of " +
                          std::to_string(opts.max_terms));
    return count.get_si();
}

Integer unit_power_residue(const Padic& q, long exponent, long work) {
    if (q.is_zero() || q.valuation() != 0)
        throw DomainError("q must be a p-adic unit");
    const Integer modulus = prime_power(q.prime(), work);
    Integer r;
    const Integer e(exponent < 0 ? -exponent : exponent);
    mpz_powm(r.get_mpz_t(), q.unit().get_mpz_t(), e.get_mpz_t(), modulus.get_mpz_t());
    if (exponent < 0 && mpz_invert(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t()) == 0)
        throw DomainError("q is not invertible");
    return r;
}

std::vector<Integer> run(const MomentJob& job, const VolkenbornOptions& opts) {
    return opts.mode == KernelMode::parallel ? moment_sums_parallel(job) : moment_sums_serial(job);
}

std::vector<int> sorted_levels(std::vector<int> levels) {
    if (levels.empty())
        throw DomainError("at least one level is required");
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

std::string join_levels(const std::vector<int>& levels) {
    std::ostringstream os;
    for (std::size_t i = 0; i < levels.size(); ++i)
        os << (i ? "," : "") << levels[i];
    return os.str();
}

void require_log_domain(const Padic& q) {
    const Padic one = Padic::from_integer(q.prime(), 1, std::max(q.absolute_precision(), 1L));
    const Padic u = q - one;
    if (!u.is_zero() && u.valuation() < padic_series_domain(q.prime()))
        throw DomainError("q must satisfy v_p(q - 1) >= " + std::to_string(padic_series_domain(q.prime())));
}

LevelValuation level_entry(int level, const Padic& diff) {
    return LevelValuation{level, diff.valuation(), diff.is_zero()};
}

Witness level_witness(int level, const Padic& diff, long required) {
    Witness w;
    w.label = "N=" + std::to_string(level);
    w.kind = DiscrepancyKind::valuation;
    w.valuation = diff.valuation();
    w.at_precision = diff.is_zero();
    w.tolerance = static_cast<double>(required);
    w.ok = w.valuation >= required;
    return w;
}

// Witt-style acceptance: nondecreasing valuations, final one >= N_max - c.
void convergence_witnesses(VerificationReport& r, int slack) {
    long min_step = 0;
    bool first = true;
    for (std::size_t i = 1; i < r.levels.size(); ++i) {
        const long step = r.levels[i].valuation - r.levels[i - 1].valuation;
        // a capped level followed by a capped level is not a decrease
        const bool capped_pair = r.levels[i].at_precision && r.levels[i - 1].at_precision;
        if (capped_pair)
            continue;
        if (first || step < min_step)
            min_step = step;
        first = false;
    }
    Witness mono;
    mono.label = "nondecreasing";
    mono.kind = DiscrepancyKind::valuation;
    mono.valuation = min_step;
    mono.tolerance = 0;
    mono.ok = min_step >= 0;
    r.witnesses.push_back(mono);

    const LevelValuation& last = r.levels.back();
    Witness fin;
    fin.label = "final N=" + std::to_string(last.level);
    fin.kind = DiscrepancyKind::valuation;
    fin.valuation = last.valuation;
    fin.at_precision = last.at_precision;
    fin.tolerance = static_cast<double>(last.level - slack);
    fin.ok = last.valuation >= last.level - slack;
    r.witnesses.push_back(fin);
}

void common_params(VerificationReport& r, const Padic& q, const std::vector<int>& levels, int slack) {
    r.add_param("p", std::to_string(q.prime()));
    r.add_param("q", to_string(q.to_rational()));
    r.add_param("precision", std::to_string(q.absolute_precision()));
    r.add_param("levels", join_levels(levels));
    r.add_param("slack", std::to_string(slack));
}

} // namespace

std::vector<Padic> volkenborn_moments(int h, const Padic& q, int max_n, int level, const VolkenbornOptions& opts) {
    if (max_n < 0)
        throw DomainError("moment index must be nonnegative");
    const std::int64_t p = q.prime();
    const long work = q.absolute_precision();
    if (work - level < 1)
        throw PrecisionError("precision exhausted: q carries " + std::to_string(work) + " digits, level " +
                             std::to_string(level) + " consumes them all");
    MomentJob job;
    job.p = p;
    job.work_precision = work;
    job.base = h == 0 ? Integer(1) : unit_power_residue(q, h, work);
    job.count = level_count(p, level, 1, opts);
    job.max_moment = max_n;
    const auto sums = run(job, opts);
    const Padic scale = inverse_prime_power(p, level, work);
    std::vector<Padic> out;
    out.reserve(sums.size());
    for (const auto& s : sums)
        out.push_back(from_residue(p, s, work) * scale);
    return out;
}

Padic volkenborn_sum(const MonomialTestFunction& f, int level, const VolkenbornOptions& opts) {
    if (f.n < 0)
        throw DomainError("monomial degree must be nonnegative");
    return volkenborn_moments(f.h, f.q, f.n, level, opts).back();
}

Padic q_volkenborn_sum(int n, int h, const Rational& x0, const Padic& q, int level) {
    if (n < 0)
        throw DomainError("degree must be nonnegative");
    const std::int64_t p = q.prime();
    const long prec = q.absolute_precision();
    const Padic one = Padic::from_integer(p, 1, prec);
    const Padic one_minus_q = one - q;
    if (one_minus_q.is_zero())
        throw DomainError("q-Volkenborn sum undefined at q = 1");
    const std::int64_t count = level_count(p, level, 1, {});

    Padic q_x0 = one;
    if (x0 != 0) {
        if (x0.get_den() == 1 && x0.get_num().fits_slong_p())
            q_x0 = padic_pow(q, x0.get_num().get_si());
        else
            q_x0 = padic_pow_exp_log(q, Padic::from_rational(p, x0, prec));
    }
    const Padic q_h1 = padic_pow(q, h - 1);
    Padic q_x1 = one;       // q^{x1}
    Padic weight = one;     // q^{x1 (h-1)}
    Padic acc = Padic::zero(p, prec + 64);
    for (std::int64_t x1 = 0; x1 < count; ++x1) {
        const Padic bracket = (one - q_x0 * q_x1) / one_minus_q;
        acc = acc + padic_pow(bracket, n) * weight * q_x1;
        q_x1 = q_x1 * q;
        weight = weight * q_h1;
    }
    return acc / q_bracket(static_cast<long>(count), q);
}

std::vector<VerificationReport> witt_verify_all(int h, int max_n, const Padic& q, const std::vector<int>& levels_in,
                                                const VolkenbornOptions& opts) {
    const auto levels = sorted_levels(levels_in);
    if (h != 0)
        require_log_domain(q);
    const QBernoulliTable table = q_bernoulli_numbers(h, max_n);
    std::vector<Padic> targets;
    for (const auto& b : table.values)
        targets.push_back(eval_padic(b, q));

    std::vector<VerificationReport> reports(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) {
        auto& r = reports[static_cast<std::size_t>(n)];
        r.identity = "witt";
        r.add_param("h", std::to_string(h));
        r.add_param("n", std::to_string(n));
        common_params(r, q, levels, opts.slack);
    }
    for (int level : levels) {
        const auto sums = volkenborn_moments(h, q, max_n, level, opts);
        for (int n = 0; n <= max_n; ++n) {
            const auto idx = static_cast<std::size_t>(n);
            reports[idx].levels.push_back(level_entry(level, sums[idx] - targets[idx]));
        }
    }
    for (auto& r : reports) {
        convergence_witnesses(r, opts.slack);
        r.finalize();
    }
    return reports;
}

VerificationReport witt_verify(int h, int n, const Padic& q, const std::vector<int>& levels,
                               const VolkenbornOptions& opts) {
    return witt_verify_all(h, n, q, levels, opts).back();
}

VerificationReport shift_identity_verify(const MonomialTestFunction& f, int b, const std::vector<int>& levels_in,
                                         const VolkenbornOptions& opts) {
    if (b < 1)
        throw DomainError("shift b must be >= 1");
    if (f.n < 0)
        throw DomainError("monomial degree must be nonnegative");
    const auto levels = sorted_levels(levels_in);
    const Padic& q = f.q;
    const std::int64_t p = q.prime();
    const long prec = q.absolute_precision();
    if (f.h != 0)
        require_log_domain(q);

    VerificationReport r;
    r.identity = "shift";
    r.add_param("n", std::to_string(f.n));
    r.add_param("h", std::to_string(f.h));
    r.add_param("b", std::to_string(b));
    common_params(r, q, levels, opts.slack);

    // sum_{i<b} f'(i), f'(x) = q^{hx} (n x^{n-1} + h log q x^n)
    const Padic log_q = f.h != 0 ? padic_log(q) : Padic::zero(p, prec);
    Padic derivative_sum = Padic::zero(p, prec + 64);
    for (int i = 0; i < b; ++i) {
        const Rational poly_part = f.n == 0 ? Rational(0) : Rational(f.n) * pow(Rational(i), f.n - 1);
        Padic term = Padic::from_rational(p, poly_part, prec + 64);
        if (f.h != 0) {
            const Padic xi = Padic::from_rational(p, pow(Rational(i), f.n) * f.h, prec + 64);
            term = (term + xi * log_q) * padic_pow(q, static_cast<long>(f.h) * i);
        }
        derivative_sum = derivative_sum + term;
    }
    const Padic shift_factor = f.h != 0 ? padic_pow(q, static_cast<long>(f.h) * b) : Padic::from_integer(p, 1, prec + 64);

    for (int level : levels) {
        const auto s = volkenborn_moments(f.h, q, f.n, level, opts);
        // f(x + b) = q^{hb} sum_k C(n,k) b^{n-k} x^k q^{hx}
        Padic shifted = Padic::zero(p, prec + 64);
        for (int k = 0; k <= f.n; ++k) {
            const Rational c = Rational(binomial(static_cast<unsigned long>(f.n), static_cast<unsigned long>(k))) *
                               pow(Rational(b), f.n - k);
            shifted = shifted + Padic::from_rational(p, c, prec + 64) * s[static_cast<std::size_t>(k)];
        }
        shifted = shifted * shift_factor;
        const Padic residual = shifted - s.back() - derivative_sum;
        r.levels.push_back(level_entry(level, residual));
        r.witnesses.push_back(level_witness(level, residual, level - opts.slack));
    }
    r.finalize();
    return r;
}

VerificationReport closed_form_verify(int h, const Padic& t, const Padic& q, const std::vector<int>& levels_in,
                                      const VolkenbornOptions& opts) {
    const auto levels = sorted_levels(levels_in);
    const std::int64_t p = q.prime();
    if (t.prime() != p)
        throw DomainError("t and q over different primes");
    if (h != 0)
        require_log_domain(q);

    VerificationReport r;
    r.identity = "closedform";
    r.add_param("h", std::to_string(h));
    r.add_param("t", to_string(t.to_rational()));
    common_params(r, q, levels, opts.slack);

    const Padic exp_t = padic_exp(t);
    const Padic base = h != 0 ? padic_pow(q, h) * exp_t : exp_t;
    const Padic one = Padic::from_integer(p, 1, std::max(base.absolute_precision(), 1L));
    const Padic denom = base - one;
    if (denom.is_zero())
        throw DomainError("q^h e^t = 1 to working precision");
    const Padic numer = h != 0 ? Padic::from_integer(p, h, q.absolute_precision() + 64) * padic_log(q) + t : t;
    const Padic rhs = numer / denom;

    const long work = base.absolute_precision();
    const Padic scale_unit = base; // unit by construction: q^h e^t = 1 mod p
    for (int level : levels) {
        if (work - level < 1)
            throw PrecisionError("precision exhausted at level " + std::to_string(level));
        MomentJob job;
        job.p = p;
        job.work_precision = work;
        job.base = scale_unit.residue();
        job.count = level_count(p, level, 1, opts);
        job.max_moment = 0;
        const auto sums = run(job, opts);
        const Padic lhs = from_residue(p, sums[0], work) * inverse_prime_power(p, level, work);
        const Padic diff = lhs - rhs;
        r.levels.push_back(level_entry(level, diff));
        r.witnesses.push_back(level_witness(level, diff, level - opts.slack));
    }
    r.finalize();
    return r;
}

VerificationReport padic_generalized_verify(const DirichletCharacter& chi, int h, int n, const Padic& q,
                                            const std::vector<int>& levels_in, const VolkenbornOptions& opts) {
    const auto levels = sorted_levels(levels_in);
    const std::int64_t p = q.prime();
    const std::int64_t d = chi.modulus();
    if (std::gcd(p, d) != 1)
        throw DomainError("eq9 check needs gcd(p, d) = 1");
    if (!chi.is_real())
        throw DomainError("p-adic check needs a character with values in {-1, 0, 1}");
    if (n < 0)
        throw DomainError("degree must be nonnegative");
    if (h != 0)
        require_log_domain(q);

    VerificationReport r;
    r.identity = "eq9";
    r.add_param("modulus", std::to_string(d));
    r.add_param("char_index", std::to_string(chi.index()));
    r.add_param("h", std::to_string(h));
    r.add_param("n", std::to_string(n));
    common_params(r, q, levels, opts.slack);

    const Padic target = eval_padic(generalized_q_bernoulli_exact(chi, h, n), q);
    std::vector<int> weights(static_cast<std::size_t>(d));
    for (std::int64_t i = 0; i < d; ++i)
        weights[static_cast<std::size_t>(i)] = chi.real_value(i);
    const long work = q.absolute_precision();
    const Padic inv_d = Padic::from_rational(p, ratio(1, d), work + 64);

    for (int level : levels) {
        if (work - level < 1)
            throw PrecisionError("precision exhausted at level " + std::to_string(level));
        MomentJob job;
        job.p = p;
        job.work_precision = work;
        job.base = h == 0 ? Integer(1) : unit_power_residue(q, h, work);
        job.count = level_count(p, level, d, opts);
        job.max_moment = n;
        job.weights = weights;
        const auto sums = run(job, opts);
        const Padic s = from_residue(p, sums.back(), work) * inverse_prime_power(p, level, work) * inv_d;
        const Padic diff = s - target;
        r.levels.push_back(level_entry(level, diff));
        r.witnesses.push_back(level_witness(level, diff, level - opts.slack));
    }
    r.finalize();
    return r;
}

} // namespace qzeta
