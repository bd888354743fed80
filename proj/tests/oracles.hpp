#pragma once

// Reference computations for the tests. Each one takes a different route from
// the library code it checks.

#include "dfmax/big_number.hpp"

#include <complex>
#include <vector>

namespace oracle {

using dfmax::BigInt;
using dfmax::Rational;

// Odometer over the cube [-r, r]^d, r = floor(sqrt(n)).
std::vector<std::vector<int>> cube_shell(int d, int n);

// #{x : |x|^2 = n} for n = 0..nmax, one odometer pass over the cube.
std::vector<BigInt> cube_shell_counts(int d, int nmax);

// 8 * sum of divisors m of n with 4 not dividing m.
BigInt four_square_count(int n);

// 2^n C(d, n) by a running product.
BigInt ternary_count(int d, int n);

// Coefficients of P(z)^e up to z^N through the recurrence
// n p_0 c_n = sum_{k>=1} ((e+1) k - n) p_k c_{n-k}, needs p_0 = 1.
std::vector<BigInt> power_series_recurrence(const std::vector<BigInt>& P, long e, int N);

// Integer sum_{x in shell} [condition] counts by enumeration.
struct ConcentrationCounts {
    BigInt total, small_mass, few_ones;
};
ConcentrationCounts concentration_by_enumeration(int d, int n, int K, int a);

// Coefficient of z^k in (1 - z)^x (1 + z)^{n - x}, divided by C(n, k).
Rational krawtchouk_generating(int k, int n, int x);

// Average of cos(2 pi x . xi) over the points with n_j coordinates equal to +-j,
// found by scanning the cube {-K..K}^d.
double beta_by_cube_scan(const std::vector<int>& nbar, const std::vector<double>& xi);

// sum_{U subset J} kr(n, |J|, |U|) prod_{J \ U} cos^2(pi xi) prod_U sin^2(pi xi), K = 1.
double beta_k1_krawtchouk(int n, const std::vector<double>& xi);

// a_1..a_m from the fixed point r = alpha h(r)/h'(r), iterated over Q[[alpha]].
std::vector<Rational> inversion_by_iteration(int m);

// K = 1 right side by telescoping: sum over levels of the l2 norm of block
// endpoint differences, plus |a_0|.
double rm_rhs_telescoped(const std::vector<std::complex<double>>& a_even, int s, int m);

} // namespace oracle
