#include "qsphere/tableau.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "qsphere/errors.hpp"
#include "qsphere/qcore.hpp"

namespace qsphere {

std::string GTTableau::json() const {
    nlohmann::json j;
    j["ell"] = ell;
    j["rows"] = rows;
    return j.dump();
}

GTTableau GTTableau::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<std::vector<int>> rows = j.at("rows").get<std::vector<std::vector<int>>>();
    GTTableau t = validate_tableau(rows);
    if (j.contains("ell") && j.at("ell").get<int>() != t.ell)
        throw validation_error("tableau json: ell does not match row count");
    return t;
}

bool interlacing_ok(const GTTableau& t) {
    const int L = t.ell;
    for (int i = 1; i <= L + 1; ++i) {
        for (int j = 1; j <= t.row_size(i); ++j) {
            if (t.entry(i, j) < 0) return false;
            if (i <= L) {
                // r_{ij} >= r_{i+1,j} (when row i+1 has a j-th entry)
                if (j <= t.row_size(i + 1) && t.entry(i, j) < t.entry(i + 1, j)) return false;
                // r_{i+1,j} >= r_{i,j+1}
                if (j <= t.row_size(i + 1) && j + 1 <= t.row_size(i) &&
                    t.entry(i + 1, j) < t.entry(i, j + 1))
                    return false;
            }
        }
    }
    return true;
}

GTTableau validate_tableau(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw validation_error("empty pattern");
    const int L = static_cast<int>(rows.size()) - 1;
    GTTableau t;
    t.ell = L;
    t.rows = rows;
    for (int i = 1; i <= L + 1; ++i) {
        if (static_cast<int>(rows[i - 1].size()) != L + 2 - i)
            throw validation_error("row " + std::to_string(i) + " must have " +
                                       std::to_string(L + 2 - i) + " entries",
                                   i, 0);
    }
    if (t.entry(1, L + 1) != 0)
        throw validation_error("top-right entry must be zero", 1, L + 1);
    for (int i = 1; i <= L; ++i) {
        for (int j = 1; j <= t.row_size(i + 1); ++j) {
            if (t.entry(i, j) < t.entry(i + 1, j))
                throw validation_error("interlacing r_{i,j} >= r_{i+1,j} fails at (" +
                                           std::to_string(i) + "," + std::to_string(j) + ")",
                                       i, j);
            if (t.entry(i + 1, j) < t.entry(i, j + 1))
                throw validation_error("interlacing r_{i+1,j} >= r_{i,j+1} fails at (" +
                                           std::to_string(i) + "," + std::to_string(j) + ")",
                                       i, j);
        }
    }
    const int last = L + 1;
    if (t.entry(last, 1) < 0) throw validation_error("negative entry", last, 1);
    return t;
}

std::int64_t psi_twice(const GTTableau& r) {
    std::int64_t top = 0;
    for (int v : r.rows[0]) top += v;
    std::int64_t lower = 0;
    for (int i = 2; i <= r.ell + 1; ++i)
        for (int v : r.rows[i - 1]) lower += v;
    return -static_cast<std::int64_t>(r.ell) * top + 2 * lower;
}

Rational psi(const GTTableau& r) { return Rational(psi_twice(r), 2); }

std::pair<int, int> hv_differences(const GTTableau& r, int a, int b) {
    if (a < 1 || a > r.ell || b < 1 || b + 1 > r.row_size(a) || b > r.row_size(a + 1))
        throw std::out_of_range("hv_differences: (a,b) out of range");
    const int h = r.entry(a + 1, b) - r.entry(a, b + 1);
    const int v = r.entry(a, b) - r.entry(a + 1, b);
    return {h, v};
}

std::string Move::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(entries[i]);
    }
    return out + ")";
}

Move special_move(int i, int j, int ell) {
    if (i < 0 || j < 1 || i > j || j > ell + 1)
        throw std::out_of_range("special_move: need 0 <= i <= j <= ell+1");
    Move m;
    m.j = j;
    m.entries.assign(j, 1);
    for (int a = i + 1; a <= j; ++a) m.entries[a - 1] = ell + 2 - a;
    return m;
}

std::vector<Move> enumerate_moves(int j, int ell) {
    if (j < 1 || j > ell + 1) throw std::out_of_range("enumerate_moves: j out of range");
    std::vector<Move> out;
    Move cur;
    cur.j = j;
    cur.entries.assign(j, 1);
    while (true) {
        out.push_back(cur);
        int pos = j - 1;
        while (pos >= 0 && cur.entries[pos] == ell + 2 - (pos + 1)) {
            cur.entries[pos] = 1;
            --pos;
        }
        if (pos < 0) break;
        ++cur.entries[pos];
    }
    return out;
}

namespace {

std::vector<Move> boundary_moves(int j, int ell, int m1) {
    std::vector<Move> out;
    std::vector<int> choice(j, 0); // 0 -> 1, 1 -> ell+2-i
    while (true) {
        Move m;
        m.j = j;
        m.entries.resize(j);
        for (int i = 1; i <= j; ++i)
            m.entries[i - 1] = choice[i - 1] ? ell + 2 - i : 1;
        if (m.entries[0] == m1) {
            // avoid duplicates when both extremes of a row coincide
            if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
        }
        int pos = j - 1;
        while (pos >= 0 && choice[pos] == 1) { choice[pos] = 0; --pos; }
        if (pos < 0) break;
        choice[pos] = 1;
    }
    return out;
}

} // namespace

std::vector<Move> moves_plus(int j, int ell) { return boundary_moves(j, ell, 1); }
std::vector<Move> moves_minus(int j, int ell) { return boundary_moves(j, ell, ell + 1); }

bool move_in_plus(const Move& m, int ell) {
    if (m.entries.empty() || m.entries[0] != 1) return false;
    for (int i = 1; i <= m.j; ++i)
        if (m.entries[i - 1] != 1 && m.entries[i - 1] != ell + 2 - i) return false;
    return true;
}

bool move_in_minus(const Move& m, int ell) {
    if (m.entries.empty() || m.entries[0] != ell + 1) return false;
    for (int i = 1; i <= m.j; ++i)
        if (m.entries[i - 1] != 1 && m.entries[i - 1] != ell + 2 - i) return false;
    return true;
}

std::optional<GTTableau> apply_move(const GTTableau& r, const Move& m) {
    if (m.j < 1 || m.j > r.ell + 1) throw std::invalid_argument("apply_move: rank mismatch");
    for (int a = 1; a <= m.j; ++a)
        if (m.entries[a - 1] < 1 || m.entries[a - 1] > r.row_size(a))
            throw std::invalid_argument("apply_move: move entry out of row range");

    GTTableau s = r;
    for (int a = 1; a <= m.j; ++a) ++s.rows[a - 1][m.entries[a - 1] - 1];
    if (!interlacing_ok(s)) return std::nullopt;
    if (s.entry(1, r.ell + 1) == 1) {
        // Renormalize the SU weight: interlacing of the raw pattern forces
        // every entry >= 1, so the shift stays nonnegative.
        for (auto& row : s.rows)
            for (auto& v : row) --v;
    }
    return s;
}

GTTableau hook_tableau(int n, int k, int ell) {
    if (n < 0 || k < 0) throw std::domain_error("hook_tableau: n,k >= 0");
    GTTableau t;
    t.ell = ell;
    t.rows.resize(ell + 1);
    for (int i = 1; i <= ell + 1; ++i) t.rows[i - 1].assign(ell + 2 - i, k);
    t.rows[0][0] = n + k;
    t.rows[0][ell] = 0;
    return t;
}

bool is_hook_top_row(const std::vector<int>& lambda) {
    if (lambda.size() < 2 || lambda.back() != 0) return false;
    for (std::size_t i = 1; i + 1 < lambda.size(); ++i)
        if (lambda[i] != lambda[1]) return false;
    return lambda[0] >= lambda[1];
}

namespace {

void fill_patterns(std::vector<GTTableau>& out, GTTableau& work, int row, std::size_t cap) {
    const int L = work.ell;
    if (row > L + 1) {
        out.push_back(work);
        if (out.size() > cap) throw size_error("pattern enumeration exceeds cap");
        return;
    }
    const int len = L + 2 - row;
    std::vector<int>& cur = work.rows[row - 1];
    const std::vector<int>& above = work.rows[row - 2];
    // entry j ranges in [above[j+1], above[j]] (0-based: [above[j+1], above[j]])
    std::vector<int> lo(len), hi(len);
    for (int j = 0; j < len; ++j) { lo[j] = above[j + 1]; hi[j] = above[j]; }
    std::vector<int> v(len);
    for (int j = 0; j < len; ++j) v[j] = lo[j];
    while (true) {
        cur.assign(v.begin(), v.end());
        fill_patterns(out, work, row + 1, cap);
        int pos = len - 1;
        while (pos >= 0 && v[pos] == hi[pos]) { v[pos] = lo[pos]; --pos; }
        if (pos < 0) break;
        ++v[pos];
    }
}

} // namespace

std::vector<GTTableau> enumerate_patterns(const std::vector<int>& lambda, int ell,
                                          std::size_t cap) {
    if (static_cast<int>(lambda.size()) != ell + 1)
        throw std::invalid_argument("enumerate_patterns: top row must have ell+1 entries");
    for (std::size_t i = 0; i + 1 < lambda.size(); ++i)
        if (lambda[i] < lambda[i + 1])
            throw std::invalid_argument("enumerate_patterns: top row must be weakly decreasing");
    if (lambda.back() < 0) throw std::invalid_argument("enumerate_patterns: negative entry");

    GTTableau work;
    work.ell = ell;
    work.rows.resize(ell + 1);
    work.rows[0] = lambda;
    std::vector<GTTableau> out;
    if (ell == 0) {
        out.push_back(work);
        return out;
    }
    fill_patterns(out, work, 2, cap);
    return out;
}

double d_lambda_bruteforce(const std::vector<int>& lambda, const QContext& ctx) {
    if (!(ctx.q > 0.0 && ctx.q < 1.0)) throw std::domain_error("d_lambda needs q in (0,1)");
    const int ell = static_cast<int>(lambda.size()) - 1;
    auto patterns = enumerate_patterns(lambda, ell);
    double acc = 0.0;
    for (const auto& s : patterns)
        acc += std::pow(ctx.q, static_cast<double>(psi_twice(s)));
    return acc;
}

double d_lambda_closed(int n, int k, const QContext& ctx) {
    if (!(ctx.q > 0.0 && ctx.q < 1.0)) throw std::domain_error("d_lambda needs q in (0,1)");
    const int ell = ctx.ell;
    double half = std::pow(ctx.q, -0.5 * ell * (n + k));
    for (int i = 1; i <= ell - 1; ++i)
        half *= (q_factor(n + i, ctx) / q_factor(i, ctx)) *
                (q_factor(k + i, ctx) / q_factor(i, ctx));
    half *= q_factor(n + k + ell, ctx) / q_factor(ell, ctx);
    return half * half;
}

HookParams hook_params(const SphereBasisLabel& label) {
    const int ell = label.s.ell;
    HookParams p;
    p.n = label.n;
    p.k = label.k;
    p.c.assign(ell + 2, 0);
    p.d.assign(ell + 2, 0);
    for (int m = 1; m <= ell; ++m) {
        p.c[m] = label.s.entry(m, 1);
        p.d[m] = label.s.entry(m, ell + 2 - m);
    }
    p.c[ell + 1] = p.d[ell + 1] = label.s.entry(ell + 1, 1);
    return p;
}

SphereBasisLabel gamma_to_label(const Gamma& gamma, int ell) {
    if (ell < 2)
        throw unsupported_rank_error("gamma_to_label: the sphere basis bijection needs ell >= 2");
    if (static_cast<int>(gamma.size()) != 2 * ell + 1)
        throw std::invalid_argument("gamma_to_label: gamma must have 2*ell+1 entries");
    for (int i = 0; i < 2 * ell + 1; ++i)
        if (i != ell && gamma[i] < 0)
            throw std::invalid_argument("gamma_to_label: N-coordinates must be >= 0");

    const int t = gamma[ell]; // gamma_{ell+1} in 1-based speak
    int sumN = 0;             // gamma_1 + ... + gamma_ell
    for (int i = 0; i < ell; ++i) sumN += gamma[i];
    int sumTail = 0; // gamma_{ell+2} + ... + gamma_{2ell+1}
    for (int i = ell + 1; i < 2 * ell + 1; ++i) sumTail += gamma[i];

    SphereBasisLabel out;
    out.k = sumN + positive_part(t);
    out.n = negative_part(t) + sumTail;

    std::vector<int> c(ell + 2, 0), d(ell + 2, 0);
    for (int m = 1; m <= ell; ++m) {
        d[m] = 0;
        for (int i = 1; i <= m - 1; ++i) d[m] += gamma[i - 1];
        c[m] = sumN + std::abs(t);
        for (int i = ell + 2; i <= 2 * ell + 2 - m; ++i) c[m] += gamma[i - 1];
    }
    c[ell + 1] = d[ell + 1] = sumN + negative_part(t);

    GTTableau s;
    s.ell = ell;
    s.rows.resize(ell + 1);
    for (int i = 1; i <= ell; ++i) {
        s.rows[i - 1].assign(ell + 2 - i, out.k);
        s.rows[i - 1].front() = c[i];
        s.rows[i - 1].back() = d[i];
    }
    s.rows[ell] = {d[ell + 1]};
    out.s = s;
    return out;
}

Gamma label_to_gamma(const SphereBasisLabel& label) {
    const int ell = label.s.ell;
    if (ell < 2)
        throw unsupported_rank_error("label_to_gamma: the sphere basis bijection needs ell >= 2");
    validate_tableau(label.s.rows);
    HookParams p = hook_params(label);
    const int k = label.k;
    // Eq. (GTnotation) constraints
    if (p.c[1] != label.n + k || p.d[1] != 0)
        throw validation_error("label: row 1 must be (n+k, k, ..., k, 0)");
    for (int m = 1; m <= ell; ++m)
        for (int jj = 2; jj <= ell + 1 - m; ++jj)
            if (label.s.entry(m, jj) != k)
                throw validation_error("label: interior entries must equal k", m, jj);
    for (int m = 1; m + 1 <= ell; ++m) {
        if (p.c[m] < p.c[m + 1]) throw validation_error("label: c must be weakly decreasing");
        if (p.d[m] > p.d[m + 1]) throw validation_error("label: d must be weakly increasing");
    }
    if (p.c[ell] < k || p.d[ell] > k) throw validation_error("label: need c_ell >= k >= d_ell");
    if (p.d[ell + 1] < p.d[ell] || p.d[ell + 1] > p.c[ell])
        throw validation_error("label: need d_ell <= d_{ell+1} <= c_ell");

    Gamma g(2 * ell + 1, 0);
    for (int i = 1; i <= ell - 1; ++i) g[i - 1] = p.d[i + 1] - p.d[i];
    for (int i = ell + 3; i <= 2 * ell + 1; ++i)
        g[i - 1] = p.c[2 * ell + 2 - i] - p.c[2 * ell + 3 - i];
    if (k > p.d[ell + 1]) {
        g[ell - 1] = p.d[ell + 1] - p.d[ell];
        g[ell] = k - p.d[ell + 1];
        g[ell + 1] = p.c[ell] - k;
    } else {
        g[ell - 1] = k - p.d[ell];
        g[ell] = k - p.d[ell + 1];
        g[ell + 1] = p.c[ell] - p.d[ell + 1];
    }
    return g;
}

std::int64_t eta(const Gamma& gamma, int ell) {
    std::int64_t acc = 0;
    for (int i = 1; i <= ell; ++i) acc += static_cast<std::int64_t>(i - 1) * gamma[i - 1];
    acc += static_cast<std::int64_t>(ell) * positive_part(gamma[ell]);
    return acc;
}

} // namespace qsphere
