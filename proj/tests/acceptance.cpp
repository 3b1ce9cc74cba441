// Acceptance suite: one PASS/FAIL line per criterion. Tolerances, grids and
// time budgets are fixed here.

#include "qzeta/analytic.hpp"
#include "qzeta/qbernoulli.hpp"
#include "qzeta/volkenborn.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace qzeta;

namespace {

constexpr double interpolation_tol = 1e-8;
constexpr double cross_path_tol = 1e-10;
constexpr double classical_final_tol = 1e-3;
constexpr int valuation_slack = 3;
constexpr long padic_digits = 20;

const std::vector<Complex> q_grid{Complex(0.2), Complex(0.5), Complex(0.3, 0.4)};

struct Outcome {
    bool pass = true;
    std::string summary;
    std::vector<std::string> failures;

    void fail(std::string what) {
        pass = false;
        failures.push_back(std::move(what));
    }
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds; // <= 0: no runtime limit
    std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Padic padic_q(std::int64_t p, int max_level) {
    return Padic::from_rational(p, Rational(1 + p), padic_digits + max_level + 10);
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> v(static_cast<std::size_t>(hi - lo + 1));
    std::iota(v.begin(), v.end(), lo);
    return v;
}

std::string level_trace(const VerificationReport& r) {
    std::ostringstream os;
    for (const auto& l : r.levels)
        os << " N=" << l.level << ":" << l.valuation << (l.at_precision ? "+" : "");
    return os.str();
}

std::string qstr(Complex q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g%+gi", q.real(), q.imag());
    return buf;
}

Outcome generating_function() {
    Outcome o;
    int witnesses = 0;
    for (int h : {-3, -2, -1, 1, 2, 3}) {
        const auto r = gen_function_identity_check(h, 12);
        witnesses += static_cast<int>(r.witnesses.size());
        if (!r.pass)
            o.fail("h=" + std::to_string(h));
    }
    o.summary = std::to_string(witnesses) + " coefficient discrepancies checked for exact zero";
    return o;
}

Outcome distribution() {
    Outcome o;
    int cases = 0;
    for (int h = -2; h <= 3; ++h) {
        const auto table = q_bernoulli_numbers(h, 10);
        for (int n = 0; n <= 10; ++n)
            for (int m : {1, 2, 3, 5}) {
                ++cases;
                if (!distribution_check(table, n, m).pass)
                    o.fail("h=" + std::to_string(h) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
            }
    }
    o.summary = std::to_string(cases) + " (h,n,m) cases, exact coefficientwise equality";
    return o;
}

Outcome witt() {
    Outcome o;
    int cases = 0;
    const auto levels = range(3, 7);
    VolkenbornOptions opts;
    opts.slack = valuation_slack;
    for (std::int64_t p : {5, 7})
        for (int h : {1, 2}) {
            const auto reports = witt_verify_all(h, 6, padic_q(p, 7), levels, opts);
            for (std::size_t n = 0; n < reports.size(); ++n) {
                ++cases;
                if (!reports[n].pass)
                    o.fail("p=" + std::to_string(p) + " h=" + std::to_string(h) + " n=" + std::to_string(n) +
                           level_trace(reports[n]));
            }
        }
    o.summary = std::to_string(cases) + " cases, valuations nondecreasing over N=3..7 and >= 4 at N=7";
    return o;
}

Outcome shift() {
    Outcome o;
    int cases = 0;
    VolkenbornOptions opts;
    opts.slack = valuation_slack;
    const Padic q = padic_q(5, 6);
    for (int b : {1, 2, 3})
        for (int n = 0; n <= 4; ++n)
            for (int h : {0, 1}) {
                ++cases;
                const auto r = shift_identity_verify({n, h, q}, b, range(3, 6), opts);
                if (!r.pass)
                    o.fail("b=" + std::to_string(b) + " n=" + std::to_string(n) + " h=" + std::to_string(h) +
                           level_trace(r));
            }
    o.summary = std::to_string(cases) + " cases at p=5, residual valuation >= N-3 for N=3..6";
    return o;
}

Outcome closed_form() {
    Outcome o;
    int cases = 0;
    VolkenbornOptions opts;
    opts.slack = valuation_slack;
    for (std::int64_t p : {5, 7}) {
        const Padic q = padic_q(p, 6);
        const Padic t = Padic::from_rational(p, Rational(p), q.absolute_precision());
        for (int h : {0, 1, 2}) {
            ++cases;
            const auto r = closed_form_verify(h, t, q, range(3, 6), opts);
            if (!r.pass)
                o.fail("p=" + std::to_string(p) + " h=" + std::to_string(h) + level_trace(r));
        }
    }
    o.summary = std::to_string(cases) + " cases at t=p, agreement valuation >= N-3 for N=3..6";
    return o;
}

Outcome generalized_padic() {
    Outcome o;
    int cases = 0;
    VolkenbornOptions opts;
    opts.slack = valuation_slack;
    for (std::int64_t d : {3, 4}) {
        const auto chi = character(d, 1); // the quadratic character
        for (std::int64_t p : {5, 7})
            for (int h : {1, 2})
                for (int n = 0; n <= 3; ++n) {
                    ++cases;
                    const auto r = padic_generalized_verify(chi, h, n, padic_q(p, 5), range(3, 5), opts);
                    if (!r.pass)
                        o.fail("d=" + std::to_string(d) + " p=" + std::to_string(p) + " h=" + std::to_string(h) +
                               " n=" + std::to_string(n) + level_trace(r));
                }
    }
    o.summary = std::to_string(cases) + " cases, agreement valuation >= N-3 for N=3..5";
    return o;
}

Outcome zeta_interpolation() {
    Outcome o;
    int cases = 0;
    double worst = 0.0;
    for (int h : {1, 2, 3}) {
        const auto table = q_bernoulli_numbers(h, 8);
        for (Complex qv : q_grid)
            for (double x : {1.0, 0.5, 2.7})
                for (int n = 1; n <= 8; ++n) {
                    ++cases;
                    const auto r = zeta_interpolation_verify(table, qv, n, x, {}, interpolation_tol);
                    worst = std::max(worst, r.witnesses.front().error);
                    if (!r.pass)
                        o.fail("h=" + std::to_string(h) + " q=" + qstr(qv) + " x=" + format_double(x) +
                               " n=" + std::to_string(n) + " error=" + fmt("%.3g", r.witnesses.front().error));
                }
    }
    o.summary = std::to_string(cases) + " cases, worst error " + fmt("%.3g", worst) + " (tol 1e-8)";
    return o;
}

Outcome l_interpolation() {
    Outcome o;
    int cases = 0;
    double worst_ok = 0.0;
    for (std::int64_t d : {1, 3, 4, 5})
        for (int h : {1, 2, 3})
            for (int n = 1; n <= 6; ++n) {
                const GeneralizedBernoulliTerms terms(h, n, d);
                for (const auto& chi : enumerate_characters(d))
                    for (Complex qv : q_grid) {
                        ++cases;
                        const auto r = l_interpolation_verify(terms, qv, chi, {}, interpolation_tol);
                        const double err = r.witnesses.front().error;
                        if (r.pass)
                            worst_ok = std::max(worst_ok, err);
                        else
                            o.fail("d=" + std::to_string(d) + " chi=" + std::to_string(chi.index()) +
                                   " h=" + std::to_string(h) + " q=" + qstr(qv) + " n=" + std::to_string(n) +
                                   " error=" + fmt("%.12g", err));
                    }
            }
    o.summary = std::to_string(cases) + " cases, " + std::to_string(o.failures.size()) + " over tol 1e-8" +
                ", worst passing error " + fmt("%.3g", worst_ok);
    return o;
}

Outcome cross_path() {
    Outcome o;
    int cases = 0;
    double worst = 0.0;
    for (std::int64_t d : {1, 3, 4, 5})
        for (const auto& chi : enumerate_characters(d))
            for (int h : {1, 2, 3})
                for (Complex qv : q_grid) {
                    const auto via_gf = generalized_via_generating_function(chi, h, 6, qv);
                    for (int n = 0; n <= 6; ++n) {
                        ++cases;
                        const Complex finite = generalized_q_bernoulli(chi, h, n, qv);
                        const double err = std::abs(finite - via_gf[static_cast<std::size_t>(n)]);
                        worst = std::max(worst, err);
                        if (!(err <= cross_path_tol))
                            o.fail("d=" + std::to_string(d) + " chi=" + std::to_string(chi.index()) +
                                   " h=" + std::to_string(h) + " q=" + qstr(qv) + " n=" + std::to_string(n) +
                                   " error=" + fmt("%.3g", err));
                    }
                }
    o.summary = std::to_string(cases) + " cases, worst difference " + fmt("%.3g", worst) + " (tol 1e-10)";
    return o;
}

Outcome classical_limit() {
    Outcome o;
    int cases = 0;
    double worst_final = 0.0;
    const auto classical = classical_bernoulli(8);
    const std::vector<Rational> eps{Rational(1, 1000), Rational(1, 10000), Rational(1, 100000)};
    for (int h : {1, 2}) {
        const auto table = q_bernoulli_numbers(h, 8);
        for (int n = 0; n <= 8; ++n) {
            ++cases;
            std::vector<double> err;
            for (const auto& e : eps)
                err.push_back(std::abs(eval_high_precision(table.values[static_cast<std::size_t>(n)], 1 + e) -
                                       classical[static_cast<std::size_t>(n)].get_d()));
            bool ok = err.back() <= classical_final_tol;
            for (std::size_t i = 1; i < err.size(); ++i)
                ok = ok && (err[i] < err[i - 1] || err[i] == 0.0);
            worst_final = std::max(worst_final, err.back());
            if (!ok)
                o.fail("h=" + std::to_string(h) + " n=" + std::to_string(n) + " errors " + fmt("%.3g", err[0]) +
                       ", " + fmt("%.3g", err[1]) + ", " + fmt("%.3g", err[2]));
        }
    }
    o.summary = std::to_string(cases) + " cases, monotone in eps, worst error at 1e-5 " + fmt("%.3g", worst_final);
    return o;
}

Outcome character_algebra() {
    Outcome o;
    long checks = 0;
    for (std::int64_t d = 1; d <= 24; ++d) {
        const auto chars = enumerate_characters(d);
        if (static_cast<std::int64_t>(chars.size()) != euler_phi(d))
            o.fail("count mod " + std::to_string(d));
        std::vector<std::vector<Complex>> table;
        for (const auto& chi : chars) {
            std::vector<Complex> row;
            for (std::int64_t a = 0; a < d; ++a) {
                row.push_back(to_complex(chi(a)));
                ++checks;
                if (!(chi(a) == chi(a + d) && chi(a) == chi(a + 7 * d)))
                    o.fail("periodicity mod " + std::to_string(d));
                for (std::int64_t b = 0; b < d; ++b) {
                    ++checks;
                    if (!(chi(a * b) == chi(a) * chi(b)))
                        o.fail("multiplicativity mod " + std::to_string(d));
                }
            }
            table.push_back(std::move(row));
        }
        for (std::size_t i = 0; i < chars.size(); ++i)
            for (std::size_t j = 0; j < chars.size(); ++j) {
                ++checks;
                Complex s = 0.0;
                for (std::int64_t a = 0; a < d; ++a)
                    s += table[i][static_cast<std::size_t>(a)] * std::conj(table[j][static_cast<std::size_t>(a)]);
                const double want = i == j ? static_cast<double>(euler_phi(d)) : 0.0;
                if (std::abs(s - want) > 1e-9)
                    o.fail("orthogonality mod " + std::to_string(d));
            }
    }
    o.summary = std::to_string(checks) + " checks over d=1..24";
    return o;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "generating-function identity through t^12", 5, generating_function},
        {2, "distribution relation", 30, distribution},
        {3, "Witt formula convergence", 60, witt},
        {4, "Volkenborn shift identity", 0, shift},
        {5, "p-adic closed form of the generating function", 0, closed_form},
        {6, "character-weighted p-adic integral", 0, generalized_padic},
        {7, "q-zeta interpolation at 1-n", 10, zeta_interpolation},
        {8, "q-L interpolation at 1-n", 30, l_interpolation},
        {9, "generalized Bernoulli: finite sum vs generating function", 0, cross_path},
        {10, "classical limit q -> 1", 0, classical_limit},
        {11, "Dirichlet character algebra", 0, character_algebra},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string timing = fmt("%.2f s", seconds);
        if (c.budget_seconds > 0) {
            timing += fmt(" (limit %.0f s)", c.budget_seconds);
            if (seconds > c.budget_seconds)
                o.fail("runtime " + fmt("%.2f s", seconds) + " over budget");
        }
        failed += !o.pass;
        std::printf("%s criterion %2d  %s: %s; %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    o.summary.c_str(), timing.c_str());
        const std::size_t shown = std::min<std::size_t>(o.failures.size(), 12);
        for (std::size_t i = 0; i < shown; ++i)
            std::printf("     - %s\n", o.failures[i].c_str());
        if (o.failures.size() > shown)
            std::printf("     - ... %zu more\n", o.failures.size() - shown);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
