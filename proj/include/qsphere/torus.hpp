#ifndef QSPHERE_TORUS_HPP
#define QSPHERE_TORUS_HPP

#include <memory>
#include <string>
#include <vector>

#include "qsphere/operators.hpp"

namespace qsphere {

// Y_{j,q} on H_ell (index set Sigma_ell): q^N (x) ... (x) sqrt(1-q^{2N}) S* (x) I ...
// for j <= ell, and q^N (x) ... (x) S* for j = ell+1. At q = 0, q^N is the
// rank-one projection p_0. S* raises, so Y_j shifts coordinate j up.
SparseOperator build_Y(int j, SpacePtr space);

// Max interior defect (margin 2) over the four sphere relation families:
//   z_i z_j = q z_j z_i (j < i),  z_i* z_j = q z_j z_i* (i != j),
//   z_i z_i* - z_i* z_i + (1-q^2) sum_{k>i} z_k z_k* = 0,  sum z_i z_i* = 1.
double verify_sphere_relations(const std::vector<SparseOperator>& ops, const QContext& ctx);

// z^n on the ell = 0 space (z raises; z^{-1} = z*).
SparseOperator z_power(SpacePtr circle, int n);

// [F_0, z^n] computed directly; equals 2 sum_{k=0}^{n-1} p_k z^n p_{k-n}
// entrywise for n >= 0, and -[F_0, z^{|n|}]* for n < 0.
SparseOperator f0_commutator(int n, SpacePtr circle);
// Max entrywise deviation between the commutator and its finite-rank form.
double f0_structure_deviation(int n, SpacePtr circle);

// Element of the recursive smooth-algebra canonical form: for ell = 0 a
// Fourier series, for ell >= 1 corner blocks alpha_1*^j (p_0 (x) a_{jk}) alpha_1^k
// plus shift coefficients on alpha_1.
struct CanonicalElement {
    int ell = 0;
    std::vector<std::pair<int, double>> shift;                       // (k, lambda_k), k in Z
    std::vector<std::tuple<int, int, CanonicalElement>> corner;      // (j, k, a_{jk}), ell >= 1

    CanonicalElement adjointed() const;
    std::string json() const;
    static CanonicalElement from_json(const std::string& text);
};

SparseOperator canonical_to_operator(const CanonicalElement& a, SpacePtr space);

// ||a||_m = max_{r,s <= m} sum (1+j+k)^r ||a_jk||_s + sum (1+|k|)^m |lambda_k|,
// with the ell = 0 base ||(lambda)||_p = sum (1+|n|)^p |lambda_n|. Computed on
// the truncated (finitely supported) element.
double canonical_seminorm(const CanonicalElement& a, int m);

// Deterministic random element for property tests.
CanonicalElement random_canonical(int ell, unsigned seed, int support = 3);

// Zeroes all off-diagonal entries (degree-0 symbol extraction).
SparseOperator degree_zero_part(const SparseOperator& t);

} // namespace qsphere

#endif
