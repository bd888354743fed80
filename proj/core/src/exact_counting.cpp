#include "dfmax/exact_counting.hpp"

#include "dfmax/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dfmax {

namespace {

using Poly = std::vector<BigInt>;

// a * b truncated after z^N. Zero coefficients of a are skipped, so a sparse
// left operand is cheap.
Poly mul_trunc(const Poly& a, const Poly& b, int N) {
    Poly out(static_cast<size_t>(N) + 1);
    for (size_t i = 0; i < a.size() && i <= static_cast<size_t>(N); ++i) {
        if (sgn(a[i]) == 0) continue;
        size_t lim = std::min(b.size(), static_cast<size_t>(N) + 1 - i);
        for (size_t j = 0; j < lim; ++j) {
            if (sgn(b[j]) != 0) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Poly pow_trunc(Poly base, long e, int N) {
    Poly result(static_cast<size_t>(N) + 1);
    result[0] = 1;
    base.resize(static_cast<size_t>(N) + 1);
    while (e > 0) {
        if (e & 1) result = mul_trunc(base, result, N);
        e >>= 1;
        if (e > 0) base = mul_trunc(base, base, N);
    }
    return result;
}

// 1 + 2 sum z^{k^2} over k in [kmin, kmax], k^2 <= N. The constant term is
// included only when kmin == 1.
Poly theta_poly(int N, int kmin, std::optional<int> kmax) {
    Poly p(static_cast<size_t>(N) + 1);
    if (kmin == 1) p[0] = 1;
    for (long k = kmin; k * k <= N; ++k) {
        if (kmax && k > *kmax) break;
        p[static_cast<size_t>(k * k)] = 2;
    }
    return p;
}

void require_shell(int d, int n) {
    if (d < 1) throw std::invalid_argument("dimension d must be >= 1");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
}

} // namespace

int MultiIndex::total() const { return std::accumulate(n.begin(), n.end(), 0); }

int MultiIndex::max() const { return n.empty() ? 0 : *std::max_element(n.begin(), n.end()); }

CoefficientSeries theta_coeffs(int d, int N, CoordinateCap cap) {
    require_shell(d, N);
    if (cap.limit && *cap.limit < 0) throw std::invalid_argument("coordinate cap must be >= 0");
    CoefficientSeries out;
    out.d = d;
    out.cap = cap;
    out.order = N;
    out.coeffs = pow_trunc(theta_poly(N, 1, cap.limit), d, N);
    return out;
}

std::vector<BigInt> sphere_counts(int d, int nmax, CoordinateCap cap) {
    return theta_coeffs(d, nmax, cap).coeffs;
}

BigInt sphere_count(int d, int n) {
    require_shell(d, n);
    return theta_coeffs(d, n).coeffs[static_cast<size_t>(n)];
}

BigInt ball_count(int d, int n) {
    require_shell(d, n);
    auto c = theta_coeffs(d, n).coeffs;
    return std::accumulate(c.begin(), c.end(), BigInt(0));
}

BigInt d_count(const MultiIndex& nbar, int d) {
    if (d < 0) throw std::invalid_argument("d_count: d must be >= 0");
    for (int v : nbar.n) {
        if (v < 0) throw std::invalid_argument("d_count: negative multi-index entry");
    }
    int s = nbar.total();
    if (s > d) {
        throw std::invalid_argument("d_count: |n| = " + std::to_string(s) + " exceeds d = " +
                                    std::to_string(d));
    }
    BigInt r = power_of_two(static_cast<unsigned long>(s)) * factorial(d);
    BigInt den = factorial(d - s);
    for (int v : nbar.n) den *= factorial(v);
    return r / den;
}

std::vector<LatticePoint> brute_force_shell(int d, int n) {
    require_shell(d, n);
    if (d > 8) throw GuardError("d <= 8", "brute_force_shell called with d = " + std::to_string(d));
    if (n > 30) throw GuardError("n <= 30", "brute_force_shell called with n = " + std::to_string(n));
    std::vector<LatticePoint> out;
    LatticePoint x(static_cast<size_t>(d));
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == d) {
            if (left == 0) out.push_back(x);
            return;
        }
        int b = 0;
        while ((b + 1) * (b + 1) <= left) ++b;
        for (int v = -b; v <= b; ++v) {
            x[static_cast<size_t>(i)] = v;
            self(self, i + 1, left - v * v);
        }
    };
    rec(rec, 0, n);
    return out;
}

ConcentrationReport concentration_report(int d, int n, int K, int a) {
    require_shell(d, n);
    if (K < 1) throw std::invalid_argument("concentration_report: K must be >= 1");
    if (a < 0) throw std::invalid_argument("concentration_report: a must be >= 0");

    ConcentrationReport rep;
    rep.d = d;
    rep.n = n;
    rep.K = K;
    rep.a = a;
    rep.shell_total = sphere_count(d, n);

    // Small mass: j coordinates exceed K and carry mass n - s, the other d - j
    // carry mass s <= n - a.
    const Poly hK = theta_poly(n, 1, K);
    const Poly g = theta_poly(n, K + 1, std::nullopt);
    const long big = static_cast<long>(K + 1) * (K + 1);
    const int jmax = static_cast<int>(std::min<long>(d, n / big));
    const int smax = n - a;
    if (smax >= 0) {
        std::vector<Poly> gpow{Poly(static_cast<size_t>(n) + 1)};
        gpow[0][0] = 1;
        for (int j = 1; j <= jmax; ++j) gpow.push_back(mul_trunc(g, gpow.back(), n));
        Poly small = pow_trunc(hK, d - jmax, n);
        for (int j = jmax; j >= 0; --j) {
            BigInt acc;
            for (int s = 0; s <= smax; ++s) acc += gpow[j][n - s] * small[s];
            rep.small_mass_violations += binomial(d, j) * acc;
            if (j > 0) small = mul_trunc(hK, small, n);
        }
    }

    // Few ones: m coordinates are +-1, the rest avoid +-1 and carry mass n - m.
    const Poly q = theta_poly(n, 2, std::nullopt);
    Poly q_with_one = q;
    q_with_one[0] = 1;
    const int mmax = std::min(d, n / 2);
    Poly rest = pow_trunc(q_with_one, d - mmax, n);
    for (int m = mmax; m >= 0; --m) {
        rep.few_ones_violations +=
            binomial(d, m) * power_of_two(static_cast<unsigned long>(m)) * rest[n - m];
        if (m > 0) rest = mul_trunc(q_with_one, rest, n);
    }

    rep.small_mass_fraction = to_double_rounded(Rational(rep.small_mass_violations, rep.shell_total));
    rep.few_ones_fraction = to_double_rounded(Rational(rep.few_ones_violations, rep.shell_total));
    return rep;
}

} // namespace dfmax
