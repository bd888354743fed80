#pragma once

#include "dfmax/big_number.hpp"
#include "dfmax/exact_counting.hpp"
#include "dfmax/formal_series.hpp"

#include <vector>

namespace dfmax {

// h(r) = 1 + 2 sum_{k>=1} r^{k^2} and its first two derivatives, for 0 <= r < 1.
// Unbounded series stop at the first k with 2 r^{k^2} / (1 - r) < 1e-30.
struct ThetaValue {
    double h = 1.0;
    double h_minus_one = 0.0;  // kept separately so log1p stays accurate
    double dh = 0.0;
    double d2h = 0.0;
    int terms = 0;
};

ThetaValue theta_eval(double r, CoordinateCap cap = CoordinateCap::unbounded());

// H(r) = r h'(r) / h(r)
double theta_log_derivative(double r);

struct SaddleSolution {
    double alpha = 0.0;
    double r = 0.0;
    double h_at_r = 0.0;
    double hprime_at_r = 0.0;
    double beta = 0.0;      // alpha / r^2 + (h'/h)'(r)
    double residual = 0.0;  // |H(r) - alpha| / alpha
};

// Root of H(r) = alpha for 0 < alpha < 1.
SaddleSolution solve_saddle(double alpha);

// d ln h(r) - n ln r - (1/2) ln n with alpha = n/d.
double log_estimate(int n, int d);

// n ln 2 + n - n ln alpha - (1/2) ln n + sum_{k=1}^{terms} b_k n alpha^k
double log_estimate_series(int n, int d, int terms = 3);

// n ln 2 + ln C(d, n) + n alpha^3 / 8
double binom_estimate(int n, int d);

// Coefficients a_1..a_m of the inverse of H near 0: r(alpha) = sum a_k alpha^k.
std::vector<Rational> inversion_coeffs(int m);

// b_0..b_m in alpha^{-1} ln h(r(alpha)) - ln(2 r(alpha) / alpha).
std::vector<Rational> b_coeffs(int m);

// h and H = z h'/h as series in z, known modulo z^order.
FormalSeries theta_series(int order);
FormalSeries theta_log_derivative_series(int order);

} // namespace dfmax
