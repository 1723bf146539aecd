#ifndef QSPHERE_TABLEAU_HPP
#define QSPHERE_TABLEAU_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsphere/context.hpp"
#include "qsphere/rational.hpp"

namespace qsphere {

// Gelfand-Tsetlin pattern for SU(ell+1): ell+1 rows, row i (1-based) has
// ell+2-i entries, interlacing r_{ij} >= r_{i+1,j} >= r_{i,j+1} >= 0,
// top-right entry zero.
struct GTTableau {
    int ell = 0;
    std::vector<std::vector<int>> rows;

    int entry(int i, int j) const { return rows[i - 1][j - 1]; } // paper's 1-based (i,j)
    int row_size(int i) const { return ell + 2 - i; }
    const std::vector<int>& top_row() const { return rows.front(); }

    bool operator==(const GTTableau& o) const { return ell == o.ell && rows == o.rows; }

    std::string json() const;                    // {"ell":L,"rows":[[...],...]}
    static GTTableau from_json(const std::string& text);
};

// Validates shape + interlacing + zero top-right; throws validation_error
// naming the offending 1-based position.
GTTableau validate_tableau(const std::vector<std::vector<int>>& rows);

// True iff interlacing and nonnegativity hold; shape must already be right.
// Ignores the top-right-zero constraint (used mid-move).
bool interlacing_ok(const GTTableau& t);

// 2*psi(r), always an integer: psi(r) = -(ell/2) sum_j r_{1j} + sum_{i>=2} r_{ij}.
std::int64_t psi_twice(const GTTableau& r);
Rational psi(const GTTableau& r);

// H_{ab} = r_{a+1,b} - r_{a,b+1}, V_{ab} = r_{ab} - r_{a+1,b}; both >= 0 on
// valid patterns. Indices 1-based per the paper.
std::pair<int, int> hv_differences(const GTTableau& r, int a, int b);

// A move M = (m_1, ..., m_j) in M_j: increments entry m_a of row a, a = 1..j.
struct Move {
    int j = 0;
    std::vector<int> entries; // 1-based positions, 1 <= m_i <= ell+2-i

    bool operator==(const Move& o) const { return entries == o.entries; }
    std::string str() const; // "(m1 m2 ...)"
};

// N_{i,j} = (1,...,1 [i times], ell+1-i, ell-i, ..., ell+2-j).
Move special_move(int i, int j, int ell);

// All of M_j in lexicographic order; |M_j| = prod_{i=1}^{j} (ell+2-i).
std::vector<Move> enumerate_moves(int j, int ell);
// Boundary subsets: every m_i extreme (in {1, ell+2-i}), m_1 = 1 (plus) or
// m_1 = ell+1 (minus).
std::vector<Move> moves_plus(int j, int ell);
std::vector<Move> moves_minus(int j, int ell);
bool move_in_plus(const Move& m, int ell);
bool move_in_minus(const Move& m, int ell);

// Applies M to r. When the move bumps the top-right entry to 1, the result is
// renormalized by subtracting 1 from every entry (SU-weight convention).
// Returns nullopt when the raw pattern violates interlacing/nonnegativity.
std::optional<GTTableau> apply_move(const GTTableau& r, const Move& m);

// Hook tableau r^{n,k}: top row (n+k, k, ..., k, 0), all lower entries k.
GTTableau hook_tableau(int n, int k, int ell);
bool is_hook_top_row(const std::vector<int>& lambda);

// d_lambda = sum over patterns with top row lambda of q^{2 psi}; enumeration,
// guarded by a pattern-count cap.
double d_lambda_bruteforce(const std::vector<int>& lambda, const QContext& ctx);

// Closed form for lambda_{n,k}; agrees with the brute-force sum.
double d_lambda_closed(int n, int k, const QContext& ctx);

// Enumerate all valid patterns with the given top row (lexicographic order).
std::vector<GTTableau> enumerate_patterns(const std::vector<int>& lambda, int ell,
                                          std::size_t cap = 10'000'000);

// --- sphere basis <-> Gamma_Sigma bijection (ell >= 2) ---

using Gamma = std::vector<int>; // length 2*ell+1, Z-coordinate at index ell (0-based)

struct SphereBasisLabel {
    int n = 0, k = 0;
    GTTableau s; // top row (n+k, k, ..., k, 0)
};

// Reads the (c_i, d_i) parameters off a lambda_{n,k}-shaped tableau.
// c[m], d[m] for m = 1..ell+1 (index 0 unused), d[1] = 0, c[ell+1] = d[ell+1].
struct HookParams {
    int n = 0, k = 0;
    std::vector<int> c, d;
};
HookParams hook_params(const SphereBasisLabel& label);

SphereBasisLabel gamma_to_label(const Gamma& gamma, int ell);
Gamma label_to_gamma(const SphereBasisLabel& label);

// eta(gamma) = sum_{i=1}^{ell} (i-1) gamma_i + ell (gamma_{ell+1})_+ ; the
// sign exponent of xi'_gamma = (-1)^eta xi_gamma.
std::int64_t eta(const Gamma& gamma, int ell);

inline int positive_part(int t) { return t > 0 ? t : 0; }
inline int negative_part(int t) { return t < 0 ? -t : 0; }

} // namespace qsphere

#endif
