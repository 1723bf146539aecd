#include "qsphere/cg.hpp"

#include <algorithm>
#include <cmath>

#include "qsphere/errors.hpp"
#include "qsphere/qcore.hpp"

namespace qsphere {

namespace {

int sign_of(int x) { return x >= 0 ? 1 : -1; } // paper: sign(k-j) = 1 iff k >= j

void require_q(const QContext& ctx) {
    if (!(ctx.q > 0.0 && ctx.q < 1.0))
        throw std::domain_error("CG formulas need q in (0,1); the q=0 operators are built "
                                "directly from their combinatorial form");
}

// Q-ratio product with numerator/denominator factors paired in descending
// magnitude, keeping partial products near 1 for q close to 1.
double ratio_product(std::vector<double> nums, std::vector<double> dens) {
    std::sort(nums.begin(), nums.end(), std::greater<>());
    std::sort(dens.begin(), dens.end(), std::greater<>());
    double acc = 1.0;
    std::size_t i = 0;
    for (; i < nums.size() && i < dens.size(); ++i) acc *= nums[i] / dens[i];
    for (; i < nums.size(); ++i) acc *= nums[i];
    for (std::size_t j = i; j < dens.size(); ++j) acc /= dens[j];
    return acc;
}

} // namespace

double R_direct(const GTTableau& r, int a, int j, int k, const QContext& ctx) {
    require_q(ctx);
    const int ell = r.ell;
    if (a < 1 || a > ell || j < 1 || j > r.row_size(a) || k < 1 || k > r.row_size(a + 1))
        throw std::out_of_range("R_direct: indices out of range");

    double prod = 1.0;
    for (int i = 1; i <= ell + 2 - a; ++i) {
        if (i == j) continue;
        const int den_arg = r.entry(a, i) - r.entry(a, j) - i + j;
        if (den_arg == 0)
            throw singularity_error("R: zero q-number denominator in row-a product", a, i, j, k);
        prod *= q_number(r.entry(a, i) - r.entry(a + 1, k) - i + k, ctx) / q_number(den_arg, ctx);
    }
    for (int i = 1; i <= ell + 1 - a; ++i) {
        if (i == k) continue;
        const int den_arg = r.entry(a + 1, i) - r.entry(a + 1, k) - i + k - 1;
        if (den_arg == 0)
            throw singularity_error("R: zero q-number denominator in row-(a+1) product", a, i, j,
                                    k);
        prod *= q_number(r.entry(a + 1, i) - r.entry(a, j) - i + j - 1, ctx) /
                q_number(den_arg, ctx);
    }
    if (prod < 0.0) prod = 0.0; // the product is a square; negatives are rounding dust
    const double expo = 0.5 * (-r.entry(a, j) + r.entry(a + 1, k) - k + j);
    return sign_of(k - j) * std::pow(ctx.q, expo) * std::sqrt(prod);
}

double R_prime_direct(const GTTableau& r, int a, int j, const QContext& ctx) {
    require_q(ctx);
    const int ell = r.ell;
    if (a < 1 || a > ell + 1 || j < 1 || j > r.row_size(a))
        throw std::out_of_range("R_prime_direct: indices out of range");

    double prod = 1.0;
    int expo2 = 1 - j; // twice the q-exponent accumulates integer terms
    for (int i = 1; i <= ell + 1 - a; ++i) {
        prod *= q_number(r.entry(a + 1, i) - r.entry(a, j) - i + j - 1, ctx);
        expo2 += r.entry(a + 1, i);
    }
    for (int i = 1; i <= ell + 2 - a; ++i) {
        if (i == j) continue;
        const int den_arg = r.entry(a, i) - r.entry(a, j) - i + j;
        if (den_arg == 0)
            throw singularity_error("R': zero q-number denominator", a, i, j, 0);
        prod /= q_number(den_arg, ctx);
        expo2 -= r.entry(a, i);
    }
    if (prod < 0.0) prod = 0.0;
    return std::pow(ctx.q, 0.5 * expo2) * std::sqrt(prod);
}

double cg_direct(int i, const GTTableau& r, const Move& m, const QContext& ctx) {
    require_q(ctx);
    if (m.j != i) throw std::invalid_argument("cg_direct: move must lie in M_i");
    if (!apply_move(r, m)) return 0.0;
    double acc = 1.0;
    for (int a = 1; a <= i - 1; ++a)
        acc *= R_direct(r, a, m.entries[a - 1], m.entries[a], ctx);
    acc *= R_prime_direct(r, i, m.entries[i - 1], ctx);
    return acc;
}

int move_sign(const Move& m) {
    int s = 1;
    for (std::size_t a = 0; a + 1 < m.entries.size(); ++a)
        s *= sign_of(m.entries[a + 1] - m.entries[a]);
    return s;
}

std::int64_t move_B(const Move& m) {
    std::int64_t b = 0;
    for (std::size_t a = 0; a + 1 < m.entries.size(); ++a)
        if (m.entries[a] > m.entries[a + 1]) b += 2 * (m.entries[a] - m.entries[a + 1] - 1) + 1;
    return b;
}

std::int64_t move_C(const GTTableau& r, const Move& m) {
    const int i = m.j;
    std::int64_t c = 0;
    for (int a = 1; a <= i - 1; ++a) {
        const int ma = m.entries[a - 1], mb = m.entries[a];
        const int lo = std::min(ma, mb), hi = std::max(ma, mb);
        for (int b = lo; b < hi; ++b) c += hv_differences(r, a, b).first;
        for (int b = mb + 1; b < ma; ++b) c += 2 * hv_differences(r, a, b).second;
    }
    for (int b = m.entries[i - 1]; b < r.ell + 2 - i; ++b) c += hv_differences(r, i, b).first;
    return c;
}

double L_factor(const GTTableau& r, int a, int j, int k, const QContext& ctx) {
    const int ell = r.ell;
    std::vector<double> nums, dens;
    for (int i = 1; i <= ell + 2 - a; ++i) {
        if (i == j) continue;
        nums.push_back(q_factor(std::abs(r.entry(a, i) - r.entry(a + 1, k) - i + k), ctx));
        dens.push_back(q_factor(std::abs(r.entry(a, i) - r.entry(a, j) - i + j), ctx));
    }
    for (int i = 1; i <= ell + 1 - a; ++i) {
        if (i == k) continue;
        nums.push_back(q_factor(std::abs(r.entry(a + 1, i) - r.entry(a, j) - i + j - 1), ctx));
        dens.push_back(q_factor(std::abs(r.entry(a + 1, i) - r.entry(a + 1, k) - i + k - 1), ctx));
    }
    for (double d : dens)
        if (d == 0.0) throw singularity_error("L: zero Q-denominator", a, 0, j, k);
    return ratio_product(std::move(nums), std::move(dens));
}

double L_prime_factor(const GTTableau& r, int a, int j, const QContext& ctx) {
    const int ell = r.ell;
    std::vector<double> nums, dens;
    for (int i = 1; i <= ell + 1 - a; ++i)
        nums.push_back(q_factor(std::abs(r.entry(a + 1, i) - r.entry(a, j) - i + j - 1), ctx));
    for (int i = 1; i <= ell + 2 - a; ++i) {
        if (i == j) continue;
        dens.push_back(q_factor(std::abs(r.entry(a, i) - r.entry(a, j) - i + j), ctx));
    }
    for (double d : dens)
        if (d == 0.0) throw singularity_error("L': zero Q-denominator", a, 0, j, 0);
    return ratio_product(std::move(nums), std::move(dens));
}

std::int64_t P_exponent(const GTTableau& r, int a, int j, int k) {
    const int lo = std::min(j, k), hi = std::max(j, k);
    std::int64_t p = 0;
    for (int i = lo; i < hi; ++i) p += hv_differences(r, a, i).first;
    for (int i = k + 1; i < j; ++i) p += 2 * hv_differences(r, a, i).second;
    return p;
}

std::int64_t S_exponent(int j, int k) { return j > k ? 2 * (j - k - 1) + 1 : 0; }

std::int64_t P_prime_exponent(const GTTableau& r, int a, int j) {
    std::int64_t p = 0;
    for (int i = j; i < r.ell + 2 - a; ++i) p += hv_differences(r, a, i).first;
    return p;
}

CGFactorization cg_factorized(int i, const GTTableau& r, const Move& m, const QContext& ctx) {
    require_q(ctx);
    if (m.j != i) throw std::invalid_argument("cg_factorized: move must lie in M_i");
    CGFactorization out;
    if (!apply_move(r, m)) return out; // value 0, L 0 by convention

    out.sign = move_sign(m);
    out.q_exponent = Rational(move_B(m) + move_C(r, m));
    double L = 1.0;
    for (int a = 1; a <= i - 1; ++a) L *= L_factor(r, a, m.entries[a - 1], m.entries[a], ctx);
    L *= L_prime_factor(r, i, m.entries[i - 1], ctx);
    out.L_product = L;
    out.value = out.sign * std::pow(ctx.q, out.q_exponent.to_double()) * L;
    return out;
}

std::pair<std::int64_t, std::int64_t> a_k_decomposition(const Move& m, int ell) {
    const int i = m.j;
    std::int64_t a = 0;
    for (int t = 0; t + 1 < i; ++t) {
        a += std::abs(m.entries[t] - m.entries[t + 1]);
        if (m.entries[t] > m.entries[t + 1]) a -= 1;
    }
    const std::int64_t k = ell + 2 - i - m.entries[i - 1];
    return {a, k};
}

double kappa_exact(const GTTableau& r, const Move& m, const QContext& ctx) {
    require_q(ctx);
    if (ctx.ell != r.ell) throw std::invalid_argument("kappa_exact: rank mismatch");
    auto s = apply_move(r, m);
    if (!s) throw std::invalid_argument("kappa_exact: M(r) is not a valid pattern");

    auto dims = [&](const GTTableau& t) {
        const auto& lam = t.top_row();
        if (is_hook_top_row(lam)) {
            const int k = lam[1];
            return d_lambda_closed(lam[0] - k, k, ctx);
        }
        return d_lambda_bruteforce(lam, ctx);
    };
    const double dl = dims(r);
    const double dm = dims(*s);
    const std::int64_t diff2 = psi_twice(r) - psi_twice(*s);
    return std::sqrt(dl / dm) * std::pow(ctx.q, 0.5 * static_cast<double>(diff2));
}

} // namespace qsphere
