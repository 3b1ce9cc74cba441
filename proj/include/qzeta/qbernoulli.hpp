#pragma once

#include "qzeta/characters.hpp"
#include "qzeta/report.hpp"
#include "qzeta/xpolynomial.hpp"

#include <complex>
#include <vector>

namespace qzeta {

// B_0..B_N from sum_{k=0}^{n} C(n+1,k) B_k = 0, B_0 = 1 (so B_1 = -1/2).
std::vector<Rational> classical_bernoulli(int max_n);

/// B_{0..max_n, q}^{(h)} as exact LogScalars.
struct QBernoulliTable {
    int h = 0;
    int max_n = 0;
    std::vector<LogScalar> values;
};

// Coefficients of (h L + t) / (q^h e^t - 1) times n!. For h = 0 the
// generating function degenerates to t / (e^t - 1) and the classical
// numbers are returned.
QBernoulliTable q_bernoulli_numbers(int h, int max_n);

// B_{n,q}^{(h)}(x) = sum_k C(n,k) x^{n-k} B_{k,q}^{(h)}. Needs table.max_n >= n.
XPolynomial q_bernoulli_polynomial(const QBernoulliTable& table, int n);
XPolynomial q_bernoulli_polynomial(int h, int n);

// (q^h e^t - 1) * sum B_n t^n / n! == h L + t through t^order, exactly.
VerificationReport gen_function_identity_check(int h, int order);

// B_{n,q}(x) == m^{n-1} sum_{i<m} q^{hi} B_{n,q^m}((x+i)/m) as exact
// polynomials in x.
VerificationReport distribution_check(int h, int n, int m);
VerificationReport distribution_check(const QBernoulliTable& table, int n, int m);

/// The exact pieces d^{n-1} B_{n,q^d}^{(h)}(i/d), i = 0..d-1, shared by
/// every character mod d; combine with chi(i) q^{hi}.
class GeneralizedBernoulliTerms {
public:
    GeneralizedBernoulliTerms(int h, int n, std::int64_t d);
    GeneralizedBernoulliTerms(const QBernoulliTable& table, int n, std::int64_t d);

    int h() const { return h_; }
    int n() const { return n_; }
    std::int64_t modulus() const { return d_; }
    const std::vector<LogScalar>& terms() const { return terms_; }

    std::complex<double> eval(const DirichletCharacter& chi, std::complex<double> qv) const;
    LogScalar exact(const DirichletCharacter& chi) const;

private:
    int h_;
    int n_;
    std::int64_t d_;
    std::vector<LogScalar> terms_;
};

// Finite-sum evaluation of B_{n,q,chi}^{(h)} at numeric q.
std::complex<double> generalized_q_bernoulli(const DirichletCharacter& chi, int h, int n, std::complex<double> qv);

// Exact B_{n,q,chi}^{(h)} for characters with values in {-1, 0, 1}.
LogScalar generalized_q_bernoulli_exact(const DirichletCharacter& chi, int h, int n);

// B_{0..max_n,q,chi}^{(h)} by expanding the character generating function as
// a complex power series. order < 0 selects 2 * max_n + 4.
std::vector<std::complex<double>> generalized_via_generating_function(const DirichletCharacter& chi, int h,
                                                                      int max_n, std::complex<double> qv,
                                                                      int order = -1);

} // namespace qzeta
