#include "qsphere/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qsphere/errors.hpp"

namespace qsphere {

TruncatedSpace::TruncatedSpace(const QContext& ctx, std::vector<int> coords)
    : ctx_(ctx), coords_(std::move(coords)) {
    ctx_.validate();
    if (coords_.empty()) throw std::invalid_argument("TruncatedSpace: empty index set");
    if (!std::is_sorted(coords_.begin(), coords_.end()))
        throw std::invalid_argument("TruncatedSpace: coordinates must be sorted");
    for (int c : coords_)
        if (c < 1 || c > ctx_.sigma_size())
            throw std::out_of_range("TruncatedSpace: coordinate outside Sigma");

    radix_.resize(coords_.size());
    for (std::size_t p = 0; p < coords_.size(); ++p) {
        if (coords_[p] == ctx_.z_coordinate()) {
            z_pos_ = static_cast<int>(p);
            radix_[p] = 2 * ctx_.cutoff + 1;
        } else {
            radix_[p] = ctx_.cutoff + 1;
        }
    }
    stride_.assign(coords_.size(), 1);
    for (int p = static_cast<int>(coords_.size()) - 2; p >= 0; --p)
        stride_[p] = stride_[p + 1] * radix_[p + 1];
    dim_ = stride_[0] * radix_[0];
}

SpacePtr TruncatedSpace::make(const QContext& ctx, std::vector<int> coords) {
    return std::make_shared<TruncatedSpace>(ctx, std::move(coords));
}

SpacePtr TruncatedSpace::full(const QContext& ctx) {
    std::vector<int> coords(ctx.sigma_size());
    for (int i = 0; i < ctx.sigma_size(); ++i) coords[i] = i + 1;
    return make(ctx, std::move(coords));
}

SpacePtr TruncatedSpace::torus(const QContext& ctx) {
    std::vector<int> coords(ctx.ell + 1);
    for (int i = 0; i <= ctx.ell; ++i) coords[i] = i + 1;
    return make(ctx, std::move(coords));
}

long long TruncatedSpace::index_of(const Gamma& gamma) const {
    if (gamma.size() != coords_.size())
        throw std::invalid_argument("index_of: wrong gamma length");
    long long idx = 0;
    for (std::size_t p = 0; p < coords_.size(); ++p) {
        int digit = gamma[p];
        if (static_cast<int>(p) == z_pos_) digit += ctx_.cutoff;
        if (digit < 0 || digit >= radix_[p]) return -1;
        idx += stride_[p] * digit;
    }
    return idx;
}

Gamma TruncatedSpace::gamma_of(long long idx) const {
    Gamma g(coords_.size());
    for (std::size_t p = 0; p < coords_.size(); ++p) {
        long long digit = idx / stride_[p];
        idx -= digit * stride_[p];
        g[p] = static_cast<int>(digit) - (static_cast<int>(p) == z_pos_ ? ctx_.cutoff : 0);
    }
    return g;
}

SparseOperator::SparseOperator(SpacePtr space) : space_(std::move(space)) {
    cols_.resize(space_->dim());
}

void SparseOperator::check_same_space(const SparseOperator& o) const {
    if (!space_ || !o.space_ || !space_->same_as(*o.space_))
        throw std::invalid_argument("operator spaces do not match");
}

void SparseOperator::add(long long row, long long col, double v) {
    if (v == 0.0) return;
    auto& c = cols_[col];
    for (auto& [r, val] : c) {
        if (r == row) {
            val += v;
            return;
        }
    }
    c.emplace_back(row, v);
}

void SparseOperator::set(long long row, long long col, double v) {
    auto& c = cols_[col];
    for (auto& [r, val] : c) {
        if (r == row) {
            val = v;
            return;
        }
    }
    if (v != 0.0) c.emplace_back(row, v);
}

double SparseOperator::entry(long long row, long long col) const {
    for (const auto& [r, v] : cols_[col])
        if (r == row) return v;
    return 0.0;
}

std::size_t SparseOperator::nnz() const {
    std::size_t n = 0;
    for (const auto& c : cols_) n += c.size();
    return n;
}

void SparseOperator::prune(double eps) {
    for (auto& c : cols_)
        c.erase(std::remove_if(c.begin(), c.end(),
                               [eps](const auto& e) { return std::abs(e.second) <= eps; }),
                c.end());
}

SparseOperator SparseOperator::adjoint() const {
    SparseOperator out(space_);
    for (long long col = 0; col < dim(); ++col)
        for (const auto& [row, v] : cols_[col]) out.add(col, row, v);
    return out;
}

SparseOperator SparseOperator::scaled(double c) const {
    SparseOperator out = *this;
    for (auto& col : out.cols_)
        for (auto& [r, v] : col) v *= c;
    return out;
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
    a.check_same_space(b);
    SparseOperator out = a;
    for (long long col = 0; col < b.dim(); ++col)
        for (const auto& [row, v] : b.cols_[col]) out.add(row, col, v);
    out.prune();
    return out;
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
    a.check_same_space(b);
    SparseOperator out = a;
    for (long long col = 0; col < b.dim(); ++col)
        for (const auto& [row, v] : b.cols_[col]) out.add(row, col, -v);
    out.prune();
    return out;
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
    a.check_same_space(b);
    SparseOperator out(a.space_);
    for (long long col = 0; col < b.dim(); ++col) {
        for (const auto& [mid, bv] : b.cols_[col])
            for (const auto& [row, av] : a.cols_[mid]) out.add(row, col, av * bv);
    }
    out.prune();
    return out;
}

SparseOperator SparseOperator::identity(SpacePtr space) {
    SparseOperator out(space);
    for (long long i = 0; i < out.dim(); ++i) out.set(i, i, 1.0);
    return out;
}

SparseOperator SparseOperator::diagonal(SpacePtr space,
                                        const std::function<double(const Gamma&)>& f) {
    SparseOperator out(space);
    for (long long i = 0; i < out.dim(); ++i) {
        const double v = f(space->gamma_of(i));
        if (v != 0.0) out.set(i, i, v);
    }
    return out;
}

bool SparseOperator::is_diagonal() const {
    for (long long col = 0; col < dim(); ++col)
        for (const auto& [row, v] : cols_[col])
            if (row != col && v != 0.0) return false;
    return true;
}

double SparseOperator::max_abs() const {
    double m = 0.0;
    for (const auto& c : cols_)
        for (const auto& [r, v] : c) m = std::max(m, std::abs(v));
    return m;
}

double SparseOperator::max_abs_diff(const SparseOperator& o) const {
    check_same_space(o);
    double m = 0.0;
    for (long long col = 0; col < dim(); ++col) {
        for (const auto& [row, v] : cols_[col]) m = std::max(m, std::abs(v - o.entry(row, col)));
        for (const auto& [row, v] : o.cols_[col]) m = std::max(m, std::abs(v - entry(row, col)));
    }
    return m;
}

std::optional<Gamma> SparseOperator::fixed_degree() const {
    std::optional<Gamma> deg;
    for (long long col = 0; col < dim(); ++col) {
        if (cols_[col].empty()) continue;
        const Gamma gc = space_->gamma_of(col);
        for (const auto& [row, v] : cols_[col]) {
            if (v == 0.0) continue;
            Gamma gr = space_->gamma_of(row);
            for (std::size_t p = 0; p < gr.size(); ++p) gr[p] -= gc[p];
            if (!deg)
                deg = gr;
            else if (*deg != gr)
                return std::nullopt;
        }
    }
    return deg;
}

void SparseOperator::apply(const std::vector<double>& x, std::vector<double>& y) const {
    y.assign(dim(), 0.0);
    for (long long col = 0; col < dim(); ++col) {
        const double xc = x[col];
        if (xc == 0.0) continue;
        for (const auto& [row, v] : cols_[col]) y[row] += v * xc;
    }
}

std::string SparseOperator::to_csv() const {
    std::ostringstream os;
    os << "row_gamma,col_gamma,value\n";
    auto fmt_gamma = [&](const Gamma& g) {
        std::string s = "\"";
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(g[i]);
        }
        return s + "\"";
    };
    for (long long col = 0; col < dim(); ++col) {
        auto sorted = cols_[col];
        std::sort(sorted.begin(), sorted.end());
        for (const auto& [row, v] : sorted) {
            os << fmt_gamma(space_->gamma_of(row)) << ',' << fmt_gamma(space_->gamma_of(col))
               << ',';
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g", v);
            os << buf << '\n';
        }
    }
    return os.str();
}

namespace {

int coord_position(const TruncatedSpace& space, int coordinate) {
    const auto& cs = space.coords();
    auto it = std::find(cs.begin(), cs.end(), coordinate);
    if (it == cs.end()) throw std::out_of_range("coordinate not in this space's index set");
    return static_cast<int>(it - cs.begin());
}

} // namespace

SparseOperator shift_op(SpacePtr space, int coordinate) {
    const int pos = coord_position(*space, coordinate);
    SparseOperator out(space);
    for (long long col = 0; col < space->dim(); ++col) {
        Gamma g = space->gamma_of(col);
        --g[pos];
        const long long row = space->index_of(g);
        if (row >= 0) out.set(row, col, 1.0);
    }
    return out;
}

SparseOperator number_op(SpacePtr space, int coordinate) {
    const int pos = coord_position(*space, coordinate);
    return SparseOperator::diagonal(space,
                                    [pos](const Gamma& g) { return static_cast<double>(g[pos]); });
}

SparseOperator projection_op(SpacePtr space, int coordinate, int k) {
    const int pos = coord_position(*space, coordinate);
    const int cutoff = space->ctx().cutoff;
    const bool zc = space->is_z_pos(pos);
    if (zc ? (k < -cutoff || k > cutoff) : (k < 0 || k > cutoff))
        throw std::out_of_range("projection_op: level outside truncation");
    return SparseOperator::diagonal(space,
                                    [pos, k](const Gamma& g) { return g[pos] == k ? 1.0 : 0.0; });
}

DiracTriple dirac_torus(SpacePtr space) {
    const QContext& ctx = space->ctx();
    std::vector<int> expected(ctx.ell + 1);
    for (int i = 0; i <= ctx.ell; ++i) expected[i] = i + 1;
    if (space->coords() != expected)
        throw std::invalid_argument("dirac_torus: index set must be Sigma_ell");

    const int zpos = space->z_pos();
    auto absval = [zpos](const Gamma& g) {
        double s = 0.0;
        for (std::size_t p = 0; p < g.size(); ++p)
            s += (static_cast<int>(p) == zpos) ? std::abs(g[p]) : g[p];
        return s;
    };
    DiracTriple t{SparseOperator(space), SparseOperator(space), SparseOperator(space)};
    t.absD = SparseOperator::diagonal(space, absval);
    t.F = SparseOperator::diagonal(space,
                                   [zpos](const Gamma& g) { return g[zpos] < 0 ? -1.0 : 1.0; });
    t.D = SparseOperator::diagonal(space, [&](const Gamma& g) {
        return (g[zpos] < 0 ? -1.0 : 1.0) * absval(g);
    });
    return t;
}

DiracTriple dirac_equivariant(SpacePtr space) {
    const QContext& ctx = space->ctx();
    if (space->num_coords() != ctx.sigma_size())
        throw std::invalid_argument("dirac_equivariant: index set must be full Sigma");
    const int ell = ctx.ell;

    auto eigen_label = [&](const Gamma& g) {
        SphereBasisLabel lab = gamma_to_label(g, ell);
        return lab.n == 0 ? static_cast<double>(lab.k) : -static_cast<double>(lab.n + lab.k);
    };
    auto eigen_split = [&](const Gamma& g) {
        double head = 0.0;
        for (int i = 0; i < ell; ++i) head += g[i];
        head += std::abs(g[ell]);
        double tail = 0.0;
        for (int i = ell + 1; i < 2 * ell + 1; ++i) tail += g[i];
        if (tail == 0.0) return g[ell] < 0 ? -head : head; // D_l (x) P branch
        return -head - tail;                               // -|D_l| (x) (I-P) - I (x) N~
    };

    DiracTriple t{SparseOperator(space), SparseOperator(space), SparseOperator(space)};
    t.D = SparseOperator::diagonal(space, [&](const Gamma& g) {
        const double a = eigen_label(g);
        const double b = eigen_split(g);
        if (a != b)
            throw std::logic_error("dirac_equivariant: label and decomposition eigenvalues differ");
        return a;
    });
    t.absD = SparseOperator::diagonal(space,
                                      [&](const Gamma& g) { return std::abs(eigen_split(g)); });
    t.F = SparseOperator::diagonal(
        space, [&](const Gamma& g) { return eigen_split(g) < 0.0 ? -1.0 : 1.0; });
    return t;
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
    return a * b - b * a;
}

double op_norm(const SparseOperator& t) {
    if (t.dim() == 0) return 0.0;
    if (t.is_diagonal()) return t.max_abs();
    if (t.nnz() == 0) return 0.0;

    const SparseOperator ta = t.adjoint();
    const long long n = t.dim();
    std::vector<double> v(n), w(n), u(n);
    for (long long i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(static_cast<double>(i));
    double norm0 = 0.0;
    for (double x : v) norm0 += x * x;
    norm0 = std::sqrt(norm0);
    for (auto& x : v) x /= norm0;

    double lambda = 0.0;
    for (int it = 0; it < 2000; ++it) {
        t.apply(v, w);
        ta.apply(w, u);
        double nu = 0.0;
        for (double x : u) nu += x * x;
        nu = std::sqrt(nu);
        if (nu == 0.0) return 0.0;
        const double next = std::sqrt(nu); // ||T*T v|| -> lambda_max(T*T) = ||T||^2
        for (long long i = 0; i < n; ++i) v[i] = u[i] / nu;
        if (it > 4 && std::abs(next - lambda) <= 1e-7 * std::max(1.0, next)) return next;
        lambda = next;
    }
    return lambda;
}

double smoothing_seminorm(const SparseOperator& t, int r, int s, const SparseOperator& d_abs) {
    if (r < 0 || s < 0) throw std::domain_error("smoothing_seminorm: r,s >= 0");
    auto weight = [&](long long i) {
        const double d = d_abs.entry(i, i);
        return d == 0.0 ? 1.0 : d; // finite-rank perturbation |D|' on the kernel
    };
    SparseOperator out(t.space());
    for (long long col = 0; col < t.dim(); ++col) {
        const double ws = std::pow(weight(col), s);
        for (const auto& [row, v] : t.column(col))
            out.add(row, col, std::pow(weight(row), r) * v * ws);
    }
    return op_norm(out);
}

SparseOperator interior_projector(SpacePtr space, int margin) {
    const int keep = space->ctx().cutoff - margin;
    if (keep < 0) throw std::domain_error("interior_projector: margin exceeds cutoff");
    return SparseOperator::diagonal(space, [keep](const Gamma& g) {
        for (int x : g)
            if (std::abs(x) > keep) return 0.0;
        return 1.0;
    });
}

SparseOperator compress_interior(const SparseOperator& t, int margin) {
    const int keep = t.space()->ctx().cutoff - margin;
    SparseOperator out(t.space());
    const auto& sp = *t.space();
    auto inside = [&](const Gamma& g) {
        for (int x : g)
            if (std::abs(x) > keep) return false;
        return true;
    };
    for (long long col = 0; col < t.dim(); ++col) {
        if (!inside(sp.gamma_of(col))) continue;
        for (const auto& [row, v] : t.column(col))
            if (inside(sp.gamma_of(row))) out.add(row, col, v);
    }
    return out;
}

SparseOperator embed_operator(const SparseOperator& t, SpacePtr big) {
    const auto& small = *t.space();
    if (small.ctx().cutoff != big->ctx().cutoff || small.ctx().ell != big->ctx().ell)
        throw std::invalid_argument("embed_operator: context mismatch");
    // positions of the small space's coordinates inside the big one
    std::vector<int> pos(small.num_coords());
    for (int p = 0; p < small.num_coords(); ++p) {
        const auto& bc = big->coords();
        auto it = std::find(bc.begin(), bc.end(), small.coords()[p]);
        if (it == bc.end())
            throw std::invalid_argument("embed_operator: small index set not contained in big");
        pos[p] = static_cast<int>(it - bc.begin());
    }
    SparseOperator out(big);
    for (long long col = 0; col < big->dim(); ++col) {
        Gamma g = big->gamma_of(col);
        Gamma gs(small.num_coords());
        for (int p = 0; p < small.num_coords(); ++p) gs[p] = g[pos[p]];
        const long long scol = small.index_of(gs);
        for (const auto& [srow, v] : t.column(scol)) {
            Gamma gr = small.gamma_of(srow);
            Gamma gbig = g;
            for (int p = 0; p < small.num_coords(); ++p) gbig[pos[p]] = gr[p];
            out.add(big->index_of(gbig), col, v);
        }
    }
    return out;
}

} // namespace qsphere
