#include "oracles.hpp"

#include "dfmax/krawtchouk.hpp"

#include <cmath>
#include <numbers>

namespace oracle {

std::vector<std::vector<int>> cube_shell(int d, int n) {
    int r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    std::vector<int> x(static_cast<size_t>(d), -r);
    std::vector<std::vector<int>> out;
    for (;;) {
        int s = 0;
        for (int v : x) s += v * v;
        if (s == n) out.push_back(x);
        int i = 0;
        while (i < d && x[static_cast<size_t>(i)] == r) x[static_cast<size_t>(i++)] = -r;
        if (i == d) break;
        ++x[static_cast<size_t>(i)];
    }
    return out;
}

std::vector<BigInt> cube_shell_counts(int d, int nmax) {
    int r = 0;
    while ((r + 1) * (r + 1) <= nmax) ++r;
    std::vector<long> hist(static_cast<size_t>(nmax) + 1, 0);
    std::vector<int> x(static_cast<size_t>(d), -r);
    for (;;) {
        int s = 0;
        for (int v : x) s += v * v;
        if (s <= nmax) ++hist[static_cast<size_t>(s)];
        int i = 0;
        while (i < d && x[static_cast<size_t>(i)] == r) x[static_cast<size_t>(i++)] = -r;
        if (i == d) break;
        ++x[static_cast<size_t>(i)];
    }
    return std::vector<BigInt>(hist.begin(), hist.end());
}

BigInt four_square_count(int n) {
    if (n == 0) return 1;
    BigInt s = 0;
    for (int m = 1; m <= n; ++m) {
        if (n % m == 0 && m % 4 != 0) s += m;
    }
    return 8 * s;
}

BigInt ternary_count(int d, int n) {
    if (n > d) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        num *= 2 * (d - i);
        den *= i + 1;
    }
    return num / den;
}

std::vector<BigInt> power_series_recurrence(const std::vector<BigInt>& P, long e, int N) {
    std::vector<BigInt> c(static_cast<size_t>(N) + 1);
    c[0] = 1;
    for (int n = 1; n <= N; ++n) {
        BigInt acc = 0;
        for (int k = 1; k <= n && k < static_cast<int>(P.size()); ++k) {
            if (P[static_cast<size_t>(k)] == 0) continue;
            acc += BigInt((e + 1) * k - n) * P[static_cast<size_t>(k)] * c[static_cast<size_t>(n - k)];
        }
        c[static_cast<size_t>(n)] = acc / n;
    }
    return c;
}

ConcentrationCounts concentration_by_enumeration(int d, int n, int K, int a) {
    ConcentrationCounts out;
    for (const auto& x : cube_shell(d, n)) {
        out.total += 1;
        int mass = 0, ones = 0;
        for (int v : x) {
            if (std::abs(v) <= K) mass += v * v;
            if (std::abs(v) == 1) ++ones;
        }
        if (mass <= n - a) out.small_mass += 1;
        if (2 * ones <= n) out.few_ones += 1;
    }
    return out;
}

Rational krawtchouk_generating(int k, int n, int x) {
    std::vector<BigInt> poly{1};
    auto times = [&](int sign) {
        std::vector<BigInt> next(poly.size() + 1);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += sign * poly[i];
        }
        poly = next;
    };
    for (int i = 0; i < x; ++i) times(-1);
    for (int i = 0; i < n - x; ++i) times(1);
    BigInt choose = 1;
    for (int i = 0; i < k; ++i) choose = choose * (n - i) / (i + 1);
    Rational q(poly[static_cast<size_t>(k)], choose);
    q.canonicalize();
    return q;
}

double beta_by_cube_scan(const std::vector<int>& nbar, const std::vector<double>& xi) {
    const int K = static_cast<int>(nbar.size());
    const int d = static_cast<int>(xi.size());
    std::vector<int> x(static_cast<size_t>(d), -K);
    double sum = 0.0;
    long count = 0;
    for (;;) {
        std::vector<int> hist(static_cast<size_t>(K) + 1, 0);
        for (int v : x) ++hist[static_cast<size_t>(std::abs(v))];
        bool match = true;
        for (int j = 1; j <= K; ++j) match = match && hist[static_cast<size_t>(j)] == nbar[static_cast<size_t>(j - 1)];
        if (match) {
            double phase = 0.0;
            for (int i = 0; i < d; ++i) phase += x[static_cast<size_t>(i)] * xi[static_cast<size_t>(i)];
            sum += std::cos(2.0 * std::numbers::pi * phase);
            ++count;
        }
        int i = 0;
        while (i < d && x[static_cast<size_t>(i)] == K) x[static_cast<size_t>(i++)] = -K;
        if (i == d) break;
        ++x[static_cast<size_t>(i)];
    }
    return sum / static_cast<double>(count);
}

double beta_k1_krawtchouk(int n, const std::vector<double>& xi) {
    const int J = static_cast<int>(xi.size());
    double total = 0.0;
    for (unsigned U = 0; U < (1u << J); ++U) {
        double w = 1.0;
        int size = 0;
        for (int i = 0; i < J; ++i) {
            double s = std::sin(std::numbers::pi * xi[static_cast<size_t>(i)]);
            double c = std::cos(std::numbers::pi * xi[static_cast<size_t>(i)]);
            if (U >> i & 1) {
                w *= s * s;
                ++size;
            } else {
                w *= c * c;
            }
        }
        total += dfmax::kr(n, J, size).get_d() * w;
    }
    return total;
}

namespace {

using Series = std::vector<Rational>;  // coefficients mod alpha^len

Series mul(const Series& a, const Series& b) {
    Series r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Evaluate sum_k p_k r^k for a polynomial p.
Series eval_poly(const std::vector<Rational>& p, const Series& r) {
    Series out(r.size()), power(r.size());
    power[0] = 1;
    for (const Rational& c : p) {
        for (size_t i = 0; i < out.size(); ++i) out[i] += c * power[i];
        power = mul(power, r);
    }
    return out;
}

Series inverse(const Series& a) {
    Series r(a.size());
    r[0] = 1 / a[0];
    for (size_t k = 1; k < a.size(); ++k) {
        Rational acc;
        for (size_t j = 1; j <= k; ++j) acc += a[j] * r[k - j];
        r[k] = -acc / a[0];
    }
    return r;
}

} // namespace

std::vector<Rational> inversion_by_iteration(int m) {
    const size_t len = static_cast<size_t>(m) + 1;
    std::vector<Rational> h(len + 1), dh(len + 1);
    for (int k = 0; k * k <= static_cast<int>(len); ++k) h[static_cast<size_t>(k * k)] = k == 0 ? 1 : 2;
    for (size_t i = 1; i < h.size(); ++i) dh[i - 1] = h[i] * static_cast<long>(i);
    Series r(len);
    for (int it = 0; it <= m + 1; ++it) {
        Series phi = mul(eval_poly(h, r), inverse(eval_poly(dh, r)));
        Series next(len);
        for (size_t i = 1; i < len; ++i) next[i] = phi[i - 1];
        r = next;
    }
    return std::vector<Rational>(r.begin() + 1, r.end());
}

double rm_rhs_telescoped(const std::vector<std::complex<double>>& a_even, int s, int m) {
    auto at = [&](long k) { return a_even[static_cast<size_t>(k / 2)]; };
    const long mm = m - m % 2;
    double rhs = std::abs(a_even[0]);
    for (int i = 1; i <= s; ++i) {
        double sq = 0.0;
        for (long j = 1; j <= (1L << (s - i)); ++j) {
            long lo = (j - 1) << i, hi = std::min(j << i, mm);
            if (hi <= lo) continue;
            sq += std::norm(at(hi) - at(lo));
        }
        rhs += std::sqrt(sq);
    }
    return rhs;
}

} // namespace oracle
