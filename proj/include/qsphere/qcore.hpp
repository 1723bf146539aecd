#ifndef QSPHERE_QCORE_HPP
#define QSPHERE_QCORE_HPP

#include <complex>
#include <utility>
#include <vector>

#include "qsphere/context.hpp"
#include "qsphere/rational.hpp"

namespace qsphere {

// [n]_q = (q^n - q^{-n}) / (q - q^{-1}), q in (0,1). Odd in n.
double q_number(int n, const QContext& ctx);

// Q(n) = sqrt(1 - q^{2n}), n >= 0. Q(0) = 0; at q = 0, Q(n) = 1 for n >= 1.
double q_factor(int n, const QContext& ctx);

// Coefficients c_k^r of N^k in binomial(N + r, r), exact.
// Recurrence r c_k^r = c_{k-1}^{r-1} + r c_k^{r-1}, c_0^0 = 1.
struct BinomialPolynomial {
    int r = 0;
    std::vector<Rational> coeffs; // coeffs[k] = c_k^r, k = 0..r

    Rational eval(std::int64_t n) const;
};

BinomialPolynomial binomial_polynomial(int r);

// binomial(n, k) as exact int64 (throws on overflow).
std::int64_t binomial_int(std::int64_t n, int k);

// Euler-Maclaurin zeta: direct sum to N = 50 plus Bernoulli corrections
// through B_12, long-double accumulation. Accurate (rel. <= 1e-10 on the
// contract grid) for Re z > -10; z = 1 is the pole.
std::complex<double> riemann_zeta(std::complex<double> z);

// Least-squares slope alpha of log(magnitude) against size*log(q), i.e. the
// empirical exponent in magnitude ~ C * q^{alpha * size}.
double fit_decay_exponent(const std::vector<std::pair<int, double>>& samples, double q);

} // namespace qsphere

#endif
