#include "qsphere/torus.hpp"

#include <cmath>
#include <random>

#include <json.hpp>

#include "qsphere/errors.hpp"
#include "qsphere/qcore.hpp"

namespace qsphere {

SparseOperator build_Y(int j, SpacePtr space) {
    const QContext& ctx = space->ctx();
    const int ell = ctx.ell;
    if (j < 1 || j > ell + 1) throw std::out_of_range("build_Y: j must lie in 1..ell+1");
    std::vector<int> expected(ell + 1);
    for (int i = 0; i <= ell; ++i) expected[i] = i + 1;
    if (space->coords() != expected)
        throw std::invalid_argument("build_Y: index set must be Sigma_ell");

    const double q = ctx.q;
    SparseOperator out(space);
    for (long long col = 0; col < space->dim(); ++col) {
        Gamma g = space->gamma_of(col);
        // q^N prefix on coordinates 1..j-1 (at q=0 this is the projection p_0)
        int prefix = 0;
        for (int p = 0; p < j - 1; ++p) prefix += g[p];
        double amp;
        if (q == 0.0)
            amp = (prefix == 0) ? 1.0 : 0.0;
        else
            amp = std::pow(q, prefix);
        if (amp == 0.0) continue;

        Gamma target = g;
        ++target[j - 1];
        if (j <= ell) {
            // sqrt(1 - q^{2N}) S* : amplitude Q(gamma_j + 1) into the raised level
            amp *= q_factor(target[j - 1], ctx);
        }
        const long long row = space->index_of(target);
        if (row >= 0 && amp != 0.0) out.set(row, col, amp);
    }
    return out;
}

double verify_sphere_relations(const std::vector<SparseOperator>& ops, const QContext& ctx) {
    if (ops.empty()) throw std::invalid_argument("verify_sphere_relations: no operators");
    const double q = ctx.q;
    const auto space = ops.front().space();
    const int n = static_cast<int>(ops.size());
    const SparseOperator id = SparseOperator::identity(space);

    double dev = 0.0;
    auto record = [&](const SparseOperator& defect) {
        dev = std::max(dev, compress_interior(defect, 2).max_abs());
    };

    std::vector<SparseOperator> adj;
    adj.reserve(n);
    for (const auto& z : ops) adj.push_back(z.adjoint());

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) record(ops[i] * ops[j] - (ops[j] * ops[i]).scaled(q));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            record(adj[i] * ops[j] - (ops[j] * adj[i]).scaled(q));
        }
    for (int i = 0; i < n; ++i) {
        SparseOperator defect = ops[i] * adj[i] - adj[i] * ops[i];
        for (int k = i + 1; k < n; ++k)
            defect = defect + (ops[k] * adj[k]).scaled(1.0 - q * q);
        record(defect);
    }
    SparseOperator sum(space);
    for (int i = 0; i < n; ++i) sum = sum + ops[i] * adj[i];
    record(sum - id);
    return dev;
}

SparseOperator z_power(SpacePtr circle, int n) {
    if (circle->num_coords() != 1 || !circle->has_z())
        throw std::invalid_argument("z_power: expected the ell_2(Z) space");
    SparseOperator out(circle);
    for (long long col = 0; col < circle->dim(); ++col) {
        Gamma g = circle->gamma_of(col);
        g[0] += n;
        const long long row = circle->index_of(g);
        if (row >= 0) out.set(row, col, 1.0);
    }
    return out;
}

SparseOperator f0_commutator(int n, SpacePtr circle) {
    SparseOperator f0 = SparseOperator::diagonal(
        *&circle, [](const Gamma& g) { return g[0] < 0 ? -1.0 : 1.0; });
    return commutator(f0, z_power(circle, n));
}

double f0_structure_deviation(int n, SpacePtr circle) {
    if (std::abs(n) > circle->ctx().cutoff / 2)
        throw std::out_of_range("f0_structure_deviation: |n| must be <= cutoff/2");
    const SparseOperator direct = f0_commutator(n, circle);
    const int a = std::abs(n);
    SparseOperator form(circle);
    for (int k = 0; k <= a - 1; ++k) {
        // 2 p_k z^a p_{k-a}: the single entry (k, k-a) of value 2
        Gamma from{k - a};
        Gamma to{k};
        const long long col = circle->index_of(from);
        const long long row = circle->index_of(to);
        if (col >= 0 && row >= 0) form.set(row, col, 2.0);
    }
    if (n < 0) form = form.adjoint().scaled(-1.0); // [F_0, z^{-a}] = -[F_0, z^a]*
    return direct.max_abs_diff(form);
}

CanonicalElement CanonicalElement::adjointed() const {
    CanonicalElement out;
    out.ell = ell;
    for (const auto& [k, v] : shift) out.shift.emplace_back(-k, v);
    for (const auto& [j, k, a] : corner) out.corner.emplace_back(k, j, a.adjointed());
    return out;
}

std::string CanonicalElement::json() const {
    nlohmann::json j;
    j["ell"] = ell;
    auto& sh = j["shift"] = nlohmann::json::array();
    for (const auto& [k, v] : shift) sh.push_back({k, v});
    auto& co = j["corner"] = nlohmann::json::array();
    for (const auto& [jj, kk, a] : corner)
        co.push_back({jj, kk, nlohmann::json::parse(a.json())});
    return j.dump();
}

CanonicalElement CanonicalElement::from_json(const std::string& text) {
    auto parse = [](const nlohmann::json& j, auto&& self) -> CanonicalElement {
        CanonicalElement out;
        out.ell = j.at("ell").get<int>();
        for (const auto& e : j.at("shift"))
            out.shift.emplace_back(e.at(0).get<int>(), e.at(1).get<double>());
        if (j.contains("corner"))
            for (const auto& e : j.at("corner"))
                out.corner.emplace_back(e.at(0).get<int>(), e.at(1).get<int>(),
                                        self(e.at(2), self));
        if (out.ell == 0 && !out.corner.empty())
            throw validation_error("canonical element of rank 0 cannot carry corner blocks");
        return out;
    };
    auto j = nlohmann::json::parse(text);
    return parse(j, parse);
}

namespace {

SparseOperator op_power(const SparseOperator& t, int n, const SparseOperator& id) {
    SparseOperator acc = id;
    for (int i = 0; i < n; ++i) acc = acc * t;
    return acc;
}

} // namespace

SparseOperator canonical_to_operator(const CanonicalElement& a, SpacePtr space) {
    const QContext& ctx = space->ctx();
    if (a.ell != ctx.ell)
        throw std::invalid_argument("canonical_to_operator: rank mismatch");

    const SparseOperator id = SparseOperator::identity(space);
    // alpha_1 = Y_{1,0}^*: lowers the first coordinate of the space.
    QContext ctx0 = ctx;
    ctx0.q = 0.0;
    auto space0 = TruncatedSpace::torus(ctx0);
    SparseOperator alpha1 = build_Y(1, space0).adjoint();
    // rebuild on the requested space (same index set, possibly different q tag)
    SparseOperator alpha(space);
    for (long long col = 0; col < space->dim(); ++col)
        for (const auto& [row, v] : alpha1.column(col)) alpha.set(row, col, v);

    SparseOperator acc(space);
    for (const auto& [k, v] : a.shift) {
        if (k >= 0)
            acc = acc + op_power(alpha, k, id).scaled(v);
        else
            acc = acc + op_power(alpha.adjoint(), -k, id).scaled(v);
    }
    if (a.ell >= 1 && !a.corner.empty()) {
        // p_0 on coordinate 1, blocks on coordinates 2..ell+1
        QContext sub_ctx = ctx;
        sub_ctx.ell = ctx.ell - 1;
        auto sub = TruncatedSpace::torus(sub_ctx);
        const SparseOperator p0 = projection_op(space, 1, 0);
        for (const auto& [j, k, blk] : a.corner) {
            SparseOperator blk_small = canonical_to_operator(blk, sub);
            // shift the sub-space coordinates up by one inside the big space
            SparseOperator blk_big(space);
            for (long long col = 0; col < space->dim(); ++col) {
                Gamma g = space->gamma_of(col);
                Gamma gs(g.begin() + 1, g.end());
                const long long scol = sub->index_of(gs);
                for (const auto& [srow, v] : blk_small.column(scol)) {
                    Gamma gr = sub->gamma_of(srow);
                    Gamma gbig = g;
                    std::copy(gr.begin(), gr.end(), gbig.begin() + 1);
                    blk_big.add(space->index_of(gbig), col, v);
                }
            }
            acc = acc + op_power(alpha.adjoint(), j, id) * (p0 * blk_big) * op_power(alpha, k, id);
        }
    }
    return acc;
}

double canonical_seminorm(const CanonicalElement& a, int m) {
    if (a.ell == 0) {
        double s = 0.0;
        for (const auto& [k, v] : a.shift) s += std::pow(1.0 + std::abs(k), m) * std::abs(v);
        return s;
    }
    double best = 0.0;
    for (int r = 0; r <= m; ++r)
        for (int s = 0; s <= m; ++s) {
            double acc = 0.0;
            for (const auto& [j, k, blk] : a.corner)
                acc += std::pow(1.0 + j + k, r) * canonical_seminorm(blk, s);
            best = std::max(best, acc);
        }
    double sh = 0.0;
    for (const auto& [k, v] : a.shift) sh += std::pow(1.0 + std::abs(k), m) * std::abs(v);
    return best + sh;
}

CanonicalElement random_canonical(int ell, unsigned seed, int support) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    CanonicalElement out;
    out.ell = ell;
    for (int k = -support; k <= support; ++k)
        out.shift.emplace_back(k, coef(rng) * std::pow(2.0, -std::abs(k)));
    if (ell >= 1) {
        for (int j = 0; j <= support - 1; ++j)
            for (int k = 0; k <= support - 1; ++k)
                out.corner.emplace_back(
                    j, k, random_canonical(ell - 1, rng(), std::max(1, support - 1)));
    }
    return out;
}

SparseOperator degree_zero_part(const SparseOperator& t) {
    SparseOperator out(t.space());
    for (long long col = 0; col < t.dim(); ++col) {
        const double v = t.entry(col, col);
        if (v != 0.0) out.set(col, col, v);
    }
    return out;
}

} // namespace qsphere
