#include "qsphere/qcore.hpp"

#include <cmath>
#include <cstdlib>

#include "qsphere/errors.hpp"

namespace qsphere {

double q_number(int n, const QContext& ctx) {
    if (ctx.q == 0.0) throw std::domain_error("q-number undefined at q=0");
    if (n == 0) return 0.0;
    const double q = ctx.q;
    // (q^n - q^{-n})/(q - q^{-1}) = sign(n) * q^{1-|n|} (1-q^{2|n|})/(1-q^2)
    const int a = std::abs(n);
    const double v = std::pow(q, 1 - a) * (1.0 - std::pow(q, 2 * a)) / (1.0 - q * q);
    return n > 0 ? v : -v;
}

double q_factor(int n, const QContext& ctx) {
    if (n < 0) throw std::domain_error("q_factor needs n >= 0 (callers pass |.|)");
    if (n == 0) return 0.0;
    return std::sqrt(1.0 - std::pow(ctx.q, 2 * n));
}

Rational BinomialPolynomial::eval(std::int64_t n) const {
    Rational acc(0);
    Rational p(1);
    for (int k = 0; k <= r; ++k) {
        acc += coeffs[k] * p;
        p *= Rational(n);
    }
    return acc;
}

BinomialPolynomial binomial_polynomial(int r) {
    if (r < 0) throw std::domain_error("binomial_polynomial needs r >= 0");
    // binomial(N + r, r) = prod_{i=1}^{r} (N + i) / r!
    std::vector<Rational> c{Rational(1)};
    for (int i = 1; i <= r; ++i) {
        std::vector<Rational> next(c.size() + 1, Rational(0));
        for (std::size_t k = 0; k < c.size(); ++k) {
            next[k] += c[k] * Rational(i, 1);
            next[k + 1] += c[k];
        }
        c = std::move(next);
        for (auto& x : c) x /= Rational(i);
    }
    BinomialPolynomial out;
    out.r = r;
    out.coeffs = std::move(c);
    return out;
}

std::int64_t binomial_int(std::int64_t n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = static_cast<int>(n - k);
    __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > INT64_MAX) throw std::overflow_error("binomial_int overflow");
    }
    return static_cast<std::int64_t>(acc);
}

namespace {

using cld = std::complex<long double>;

cld pow_real(long double base, cld e) {
    return std::exp(e * std::log(base));
}

} // namespace

std::complex<double> riemann_zeta(std::complex<double> z) {
    if (z == std::complex<double>(1.0, 0.0)) throw pole_error("zeta has a simple pole at z=1");
    if (z.real() <= -10.0)
        throw accuracy_error("zeta: Euler-Maclaurin parameters cover Re z > -10 only");

    const cld s(static_cast<long double>(z.real()), static_cast<long double>(z.imag()));
    constexpr int N = 50;
    // B_{2k}/(2k)! for k = 1..6
    static const long double bfac[6] = {
        1.0L / 12.0L,
        -1.0L / 720.0L,
        1.0L / 30240.0L,
        -1.0L / 1209600.0L,
        1.0L / 47900160.0L,
        -691.0L / 1307674368000.0L,
    };

    cld acc(0.0L, 0.0L);
    for (int n = 1; n < N; ++n) acc += pow_real(static_cast<long double>(n), -s);

    const cld NzInv = pow_real(static_cast<long double>(N), -s);
    acc += NzInv * static_cast<long double>(N) / (s - cld(1.0L, 0.0L));
    acc += NzInv * 0.5L;

    // sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    cld rising = s;                        // s ... (s + 2k - 2), built incrementally
    cld npow = NzInv / static_cast<long double>(N); // N^{-s-2k+1}
    for (int k = 1; k <= 6; ++k) {
        acc += bfac[k - 1] * rising * npow;
        rising *= (s + cld(2.0L * k - 1.0L, 0.0L)) * (s + cld(2.0L * k, 0.0L));
        npow /= static_cast<long double>(N) * static_cast<long double>(N);
    }

    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

double fit_decay_exponent(const std::vector<std::pair<int, double>>& samples, double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("fit_decay_exponent needs q in (0,1)");
    std::vector<std::pair<double, double>> pts; // (size*log q, log magnitude)
    const double lq = std::log(q);
    for (const auto& [size, mag] : samples) {
        if (mag > 0.0) pts.emplace_back(size * lq, std::log(mag));
    }
    if (pts.size() < 4)
        throw insufficient_data_error("fit_decay_exponent: need >= 4 positive samples");

    double sx = 0, sy = 0;
    for (const auto& [x, y] : pts) { sx += x; sy += y; }
    const double mx = sx / pts.size(), my = sy / pts.size();
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0)
        throw insufficient_data_error("fit_decay_exponent: all sample sizes coincide");
    return sxy / sxx;
}

} // namespace qsphere
