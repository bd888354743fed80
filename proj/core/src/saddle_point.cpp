#include "dfmax/saddle_point.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dfmax {

ThetaValue theta_eval(double r, CoordinateCap cap) {
    if (!(r >= 0.0 && r < 1.0)) throw std::domain_error("theta_eval: r must lie in [0, 1)");
    ThetaValue v;
    double tail_scale = 2.0 / (1.0 - r);
    for (long k = 1;; ++k) {
        if (!cap.admits(k)) break;
        double k2 = static_cast<double>(k * k);
        double t = std::pow(r, k2);
        if (k > 1 && t * tail_scale < 1e-30) break;
        v.h_minus_one += 2.0 * t;
        v.dh += 2.0 * k2 * std::pow(r, k2 - 1.0);
        if (k > 1) v.d2h += 2.0 * k2 * (k2 - 1.0) * std::pow(r, k2 - 2.0);
        v.terms = static_cast<int>(k);
    }
    v.h = 1.0 + v.h_minus_one;
    return v;
}

double theta_log_derivative(double r) {
    ThetaValue v = theta_eval(r);
    return r * v.dh / v.h;
}

namespace {

double newton_slope(double r, const ThetaValue& v) {
    double q = v.dh / v.h;
    return q + r * v.d2h / v.h - r * q * q;
}

} // namespace

SaddleSolution solve_saddle(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::domain_error("solve_saddle: alpha must lie in (0, 1), got " + std::to_string(alpha));
    }
    double lo = 0.0, hi = 0.5;
    while (theta_log_derivative(hi) < alpha) {
        lo = hi;
        hi = 1.0 - (1.0 - hi) / 2.0;
    }
    // Width is measured relative to hi so that tiny alpha still resolves r.
    while (hi - lo > 1e-15 * hi) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (theta_log_derivative(mid) < alpha) lo = mid;
        else hi = mid;
    }
    double r = 0.5 * (lo + hi);
    for (int step = 0; step < 2; ++step) {
        ThetaValue v = theta_eval(r);
        double f = r * v.dh / v.h - alpha;
        double next = r - f / newton_slope(r, v);
        if (next > 0.0 && next < 1.0) r = next;
    }
    ThetaValue v = theta_eval(r);
    SaddleSolution s;
    s.alpha = alpha;
    s.r = r;
    s.h_at_r = v.h;
    s.hprime_at_r = v.dh;
    double q = v.dh / v.h;
    s.beta = alpha / (r * r) + v.d2h / v.h - q * q;
    s.residual = std::abs(r * q - alpha) / alpha;
    return s;
}

namespace {

void require_regime(int n, int d) {
    if (n < 1 || d < 1 || n >= d) {
        throw std::domain_error("estimate requires 1 <= n < d, got n = " + std::to_string(n) +
                                ", d = " + std::to_string(d));
    }
}

} // namespace

double log_estimate(int n, int d) {
    require_regime(n, d);
    double alpha = static_cast<double>(n) / d;
    SaddleSolution s = solve_saddle(alpha);
    ThetaValue v = theta_eval(s.r);
    return d * std::log1p(v.h_minus_one) - n * std::log(s.r) - 0.5 * std::log(static_cast<double>(n));
}

double log_estimate_series(int n, int d, int terms) {
    require_regime(n, d);
    if (terms < 0) throw std::invalid_argument("log_estimate_series: terms must be >= 0");
    std::vector<Rational> b = b_coeffs(terms);
    double alpha = static_cast<double>(n) / d;
    double out = n * std::log(2.0) + n - n * std::log(alpha) - 0.5 * std::log(static_cast<double>(n));
    for (int k = 1; k <= terms; ++k) out += b[static_cast<size_t>(k)].get_d() * n * std::pow(alpha, k);
    return out;
}

double binom_estimate(int n, int d) {
    require_regime(n, d);
    double alpha = static_cast<double>(n) / d;
    return n * std::log(2.0) + log_big(binomial(d, n)) + n * alpha * alpha * alpha / 8.0;
}

FormalSeries theta_series(int order) {
    FormalSeries h(order);
    if (order > 0) h[0] = 1;
    for (int k = 1; k * k < order; ++k) h[k * k] = 2;
    return h;
}

FormalSeries theta_log_derivative_series(int order) {
    FormalSeries h = theta_series(order);
    FormalSeries zdh(order);
    for (int k = 1; k < order; ++k) zdh[k] = h[k] * k;
    return zdh / h;
}

std::vector<Rational> inversion_coeffs(int m) {
    if (m < 1) throw std::invalid_argument("inversion_coeffs: m must be >= 1");
    FormalSeries h = theta_series(m + 1);
    FormalSeries phi = h.truncated(m) / h.derivative();
    std::vector<Rational> a;
    FormalSeries power = FormalSeries::constant(1, m);
    for (int k = 1; k <= m; ++k) {
        power = power * phi;
        a.push_back(power[k - 1] / k);
    }
    return a;
}

std::vector<Rational> b_coeffs(int m) {
    if (m < 0) throw std::invalid_argument("b_coeffs: m must be >= 0");
    std::vector<Rational> a = inversion_coeffs(m + 1);
    FormalSeries r(m + 2);
    for (int k = 1; k <= m + 1; ++k) r[k] = a[static_cast<size_t>(k - 1)];
    FormalSeries first = theta_series(m + 2).compose(r).log().shift_down();
    FormalSeries ratio(m + 1);
    for (int j = 0; j <= m; ++j) ratio[j] = 2 * a[static_cast<size_t>(j)];
    FormalSeries diff = first - ratio.log();
    return std::vector<Rational>(diff.coeffs().begin(), diff.coeffs().begin() + m + 1);
}

} // namespace dfmax
