#pragma once

#include "qzeta/characters.hpp"
#include "qzeta/qbernoulli.hpp"
#include "qzeta/report.hpp"

#include <complex>
#include <cstdint>

namespace qzeta {

using Complex = std::complex<double>;

struct SeriesEvalConfig {
    double tol = 1e-12;                  // absolute truncation target, >= 1e-14
    std::int64_t max_terms = 10'000'000; // <= 1e8
};

struct SeriesValue {
    Complex value;
    double tail_bound = 0.0; // certified bound on the discarded tail
    std::int64_t terms = 0;
};

// sum_{k>=0} w^k (k + x)^{-s}, |w| < 1, x > 0, summed in ascending k until a
// geometric tail bound drops below cfg.tol.
SeriesValue lerch_sum(Complex w, Complex s, double x, const SeriesEvalConfig& cfg = {});

// sum_{n>=1} q^{(n-1)h} n^{-s} - (h Log q / (s-1)) sum_{n>=1} q^{(n-1)h} n^{1-s}
SeriesValue q_zeta(int h, Complex qv, Complex s, const SeriesEvalConfig& cfg = {});
// sum_{n>=0} q^{nh} (n+x)^{-s} - (h Log q / (s-1)) sum_{n>=0} q^{nh} (n+x)^{1-s}
SeriesValue q_hurwitz_zeta(int h, Complex qv, Complex s, double x, const SeriesEvalConfig& cfg = {});
// sum_{n>=1} q^{nh} chi(n) n^{-s} - (h Log q / (s-1)) sum_{n>=1} q^{nh} chi(n) n^{1-s}
SeriesValue q_l_function(int h, Complex qv, Complex s, const DirichletCharacter& chi,
                         const SeriesEvalConfig& cfg = {});

// |zeta_q^{(h)}(1-n, x) + B_{n,q}^{(h)}(x)/n| <= tolerance
VerificationReport zeta_interpolation_verify(int h, Complex qv, int n, double x, const SeriesEvalConfig& cfg = {},
                                             double tolerance = 1e-8);
VerificationReport zeta_interpolation_verify(const QBernoulliTable& table, Complex qv, int n, double x,
                                             const SeriesEvalConfig& cfg = {}, double tolerance = 1e-8);

// |L_q^{(h)}(1-n, chi) + B_{n,q,chi}^{(h)}/n| <= tolerance
VerificationReport l_interpolation_verify(int h, Complex qv, int n, const DirichletCharacter& chi,
                                          const SeriesEvalConfig& cfg = {}, double tolerance = 1e-8);
VerificationReport l_interpolation_verify(const GeneralizedBernoulliTerms& terms, Complex qv,
                                          const DirichletCharacter& chi, const SeriesEvalConfig& cfg = {},
                                          double tolerance = 1e-8);

std::string format_double(double v);
std::string format_complex(Complex z);

} // namespace qzeta
