#pragma once

#include "qzeta/characters.hpp"
#include "qzeta/padic.hpp"
#include "qzeta/report.hpp"

#include <vector>

namespace qzeta {

/// f(x) = x^n q^{hx}; q must satisfy v_p(q - 1) >= padic_series_domain(p)
/// whenever h != 0.
struct MonomialTestFunction {
    int n = 0;
    int h = 0;
    Padic q;
};

enum class KernelMode { serial, parallel };

struct VolkenbornOptions {
    int slack = 3;                     // convergence slack c in "valuation >= N - c"
    std::int64_t max_terms = 1'000'000; // cap on the number of summands per level
    KernelMode mode = KernelMode::parallel;
};

// p^{-N} sum_{x<p^N} q^{hx} x^k for k = 0..max_n. Sums run modulo p^W with W
// the absolute precision of q, so the results carry W - N digits.
std::vector<Padic> volkenborn_moments(int h, const Padic& q, int max_n, int level,
                                      const VolkenbornOptions& opts = {});
Padic volkenborn_sum(const MonomialTestFunction& f, int level, const VolkenbornOptions& opts = {});

// Level-N approximant of the q-integral of [x0 + x1]_q^n q^{x1 (h-1)}:
// (1/[p^N]_q) sum_{x1<p^N} [x0 + x1]_q^n q^{x1 (h-1)} q^{x1}.
Padic q_volkenborn_sum(int n, int h, const Rational& x0, const Padic& q, int level);

// S_N against the exact B_{n,q}^{(h)} evaluated at q.
VerificationReport witt_verify(int h, int n, const Padic& q, const std::vector<int>& levels,
                               const VolkenbornOptions& opts = {});
// Same for n = 0..max_n sharing one pass over the summands per level.
std::vector<VerificationReport> witt_verify_all(int h, int max_n, const Padic& q, const std::vector<int>& levels,
                                                const VolkenbornOptions& opts = {});

// I(f_b) - I(f) - sum_{i<b} f'(i) at each level.
VerificationReport shift_identity_verify(const MonomialTestFunction& f, int b, const std::vector<int>& levels,
                                         const VolkenbornOptions& opts = {});

// Volkenborn approximant of q^{hx} e^{xt} against (h log q + t)/(q^h e^t - 1).
VerificationReport closed_form_verify(int h, const Padic& t, const Padic& q, const std::vector<int>& levels,
                                      const VolkenbornOptions& opts = {});

// (1/(d p^N)) sum_{x<d p^N} chi(x) q^{hx} x^n against the exact generalized
// Bernoulli value. chi must be real and gcd(p, d) = 1.
VerificationReport padic_generalized_verify(const DirichletCharacter& chi, int h, int n, const Padic& q,
                                            const std::vector<int>& levels, const VolkenbornOptions& opts = {});

} // namespace qzeta
