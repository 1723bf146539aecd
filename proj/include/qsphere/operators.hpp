#ifndef QSPHERE_OPERATORS_HPP
#define QSPHERE_OPERATORS_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsphere/context.hpp"
#include "qsphere/tableau.hpp"

namespace qsphere {

// Truncated ell_2(Gamma_A) for A a subset of Sigma = {1, ..., 2*ell+1}.
// N-coordinates run 0..cutoff, the Z-coordinate (ell+1, when present) runs
// -cutoff..cutoff. Basis order: lexicographic in the coordinates of A
// (ascending), first coordinate slowest.
class TruncatedSpace {
public:
    TruncatedSpace(const QContext& ctx, std::vector<int> coords);

    static std::shared_ptr<const TruncatedSpace> full(const QContext& ctx);    // Sigma
    static std::shared_ptr<const TruncatedSpace> torus(const QContext& ctx);   // Sigma_ell
    static std::shared_ptr<const TruncatedSpace> make(const QContext& ctx, std::vector<int> coords);

    const QContext& ctx() const { return ctx_; }
    const std::vector<int>& coords() const { return coords_; }
    int num_coords() const { return static_cast<int>(coords_.size()); }
    long long dim() const { return dim_; }
    bool has_z() const { return z_pos_ >= 0; }
    int z_pos() const { return z_pos_; } // position of the Z-coordinate, -1 if absent
    bool is_z_pos(int pos) const { return pos == z_pos_; }

    // -1 when gamma falls outside the truncation.
    long long index_of(const Gamma& gamma) const;
    Gamma gamma_of(long long idx) const;

    bool same_as(const TruncatedSpace& o) const {
        return coords_ == o.coords_ && ctx_.cutoff == o.ctx_.cutoff && ctx_.ell == o.ctx_.ell;
    }

private:
    QContext ctx_;
    std::vector<int> coords_;
    int z_pos_ = -1;
    std::vector<long long> stride_;
    std::vector<int> radix_;
    long long dim_ = 0;
};

using SpacePtr = std::shared_ptr<const TruncatedSpace>;

// Finitely supported real matrix over a truncated basis, stored by column.
class SparseOperator {
public:
    SparseOperator() = default;
    explicit SparseOperator(SpacePtr space);

    const SpacePtr& space() const { return space_; }
    long long dim() const { return space_ ? space_->dim() : 0; }

    void add(long long row, long long col, double v);
    void set(long long row, long long col, double v);
    double entry(long long row, long long col) const;
    const std::vector<std::pair<long long, double>>& column(long long col) const {
        return cols_[col];
    }

    std::size_t nnz() const;
    void prune(double eps = 0.0); // drop entries with |v| <= eps

    SparseOperator adjoint() const;
    SparseOperator scaled(double c) const;
    friend SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
    friend SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);

    static SparseOperator identity(SpacePtr space);
    static SparseOperator diagonal(SpacePtr space, const std::function<double(const Gamma&)>& f);

    bool is_diagonal() const;
    double max_abs() const;
    double max_abs_diff(const SparseOperator& o) const;

    // Common column->row displacement when one exists (operator homogeneity
    // as an entry-support condition).
    std::optional<Gamma> fixed_degree() const;

    void apply(const std::vector<double>& x, std::vector<double>& y) const; // y = T x

    std::string to_csv() const; // row_gamma, col_gamma, value

private:
    void check_same_space(const SparseOperator& o) const;

    SpacePtr space_;
    std::vector<std::vector<std::pair<long long, double>>> cols_;
};

// Matrix building blocks (paper sec 2.2): S e_n = e_{n-1}, N e_n = n e_n,
// p_k the rank-one projection.
SparseOperator shift_op(SpacePtr space, int coordinate);       // left shift on one coordinate
SparseOperator number_op(SpacePtr space, int coordinate);
SparseOperator projection_op(SpacePtr space, int coordinate, int k);

struct DiracTriple {
    SparseOperator D;    // signed
    SparseOperator absD; // |D|
    SparseOperator F;    // sign(D), with F e_gamma = e_gamma on the kernel
};

// Torus Dirac on Sigma_ell: d(gamma) = +-(gamma_1 + ... + gamma_ell + |gamma_{ell+1}|),
// negative iff gamma_{ell+1} < 0.
DiracTriple dirac_torus(SpacePtr space);

// Equivariant Dirac on Sigma, computed through the label (n,k) and through
// the decomposition D_l (x) P - |D_l| (x) (I-P) - I (x) N~; the two must agree.
DiracTriple dirac_equivariant(SpacePtr space);

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);

// Operator norm: exact for diagonal operators, power iteration on T*T
// otherwise (relative tolerance 1e-6, deterministic start vector).
double op_norm(const SparseOperator& t);

// || |D|'^r T |D|'^s || with |D|' = |D| + kernel projection (eigenvalue 0 -> 1).
double smoothing_seminorm(const SparseOperator& t, int r, int s, const SparseOperator& d_abs);

// Diagonal 0/1 operator keeping basis vectors with every |gamma_i| <= cutoff - margin.
SparseOperator interior_projector(SpacePtr space, int margin);
// P T P for the interior projector of the given margin.
SparseOperator compress_interior(const SparseOperator& t, int margin);

// Extends an operator living on a sub-index-set space to act as identity on
// the remaining coordinates of the big space (same ctx/cutoff).
SparseOperator embed_operator(const SparseOperator& t, SpacePtr big);

} // namespace qsphere

#endif
