#ifndef QSPHERE_CG_HPP
#define QSPHERE_CG_HPP

#include "qsphere/context.hpp"
#include "qsphere/rational.hpp"
#include "qsphere/tableau.hpp"

namespace qsphere {

// The two R-factors of the CG coefficient, evaluated literally from the
// signed q-number products. Throws singularity_error on a vanishing
// denominator (possible only in invalid move contexts).
double R_direct(const GTTableau& r, int a, int j, int k, const QContext& ctx);
double R_prime_direct(const GTTableau& r, int a, int j, const QContext& ctx);

// C_q(i, r, M(r)) = prod_{a<i} R(r,a,m_a,m_{a+1}) * R'(r,i,m_i); zero when
// M(r) is not a valid pattern.
double cg_direct(int i, const GTTableau& r, const Move& m, const QContext& ctx);

// Factorized form: sign(M) * q^{B(M)+C(r,M)} * (prod L) * L'. The q-exponent
// is exact (a nonnegative integer for valid patterns); the L-product collects
// the Q-ratios.
struct CGFactorization {
    int sign = 1;
    Rational q_exponent;
    double L_product = 0.0;
    double value = 0.0;
};

CGFactorization cg_factorized(int i, const GTTableau& r, const Move& m, const QContext& ctx);

int move_sign(const Move& m);
std::int64_t move_B(const Move& m);
std::int64_t move_C(const GTTableau& r, const Move& m);

// Pieces of the factorized R-factors (lemma-level surface, used as oracles).
double L_factor(const GTTableau& r, int a, int j, int k, const QContext& ctx);
double L_prime_factor(const GTTableau& r, int a, int j, const QContext& ctx);
std::int64_t P_exponent(const GTTableau& r, int a, int j, int k);
std::int64_t S_exponent(int j, int k);
std::int64_t P_prime_exponent(const GTTableau& r, int a, int j);

// A(M) = sum |m_j - m_{j+1}| - #{descents}; K(M) = ell + 2 - i - m_i.
// Satisfies B(M) + ell + 2 - i - m_1 = A(M) + K(M).
std::pair<std::int64_t, std::int64_t> a_k_decomposition(const Move& m, int ell);

// kappa(r, M) = d_lambda^{1/2} d_mu^{-1/2} q^{psi(r) - psi(M(r))}; the closed
// d_lambda form is used for hook-shaped top rows, brute force otherwise.
double kappa_exact(const GTTableau& r, const Move& m, const QContext& ctx);

} // namespace qsphere

#endif
