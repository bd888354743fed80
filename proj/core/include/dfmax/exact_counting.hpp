#pragma once

#include "dfmax/big_number.hpp"

#include <optional>
#include <vector>

namespace dfmax {

// Bound on |x_i| used when building the theta polynomial. Unbounded by default.
struct CoordinateCap {
    std::optional<int> limit;

    static CoordinateCap unbounded() { return {}; }
    static CoordinateCap at_most(int k) { return {k}; }
    bool admits(long k) const { return !limit || k <= *limit; }
};

// Coefficients of (1 + 2 sum_{k>=1, k^2<=N} z^{k^2})^d truncated after z^N.
struct CoefficientSeries {
    int d = 0;
    CoordinateCap cap;
    int order = 0;
    std::vector<BigInt> coeffs;  // coeffs.size() == order + 1
};

using LatticePoint = std::vector<int>;

// Lattice points of Z^d with a norm condition, counted without enumeration.
struct ConcentrationReport {
    int d = 0;
    int n = 0;
    int K = 0;
    int a = 0;
    BigInt shell_total;
    BigInt small_mass_violations;  // sum over |x_i| <= K of x_i^2 is <= n - a
    BigInt few_ones_violations;    // #{i : |x_i| = 1} <= n/2
    double small_mass_fraction = 0.0;
    double few_ones_fraction = 0.0;
};

// Multi-index n = (n_1, ..., n_K); entry j counts coordinates equal to +-j.
struct MultiIndex {
    std::vector<int> n;

    int K() const { return static_cast<int>(n.size()); }
    int total() const;
    int max() const;
    bool is_zero() const { return total() == 0; }
};

CoefficientSeries theta_coeffs(int d, int N, CoordinateCap cap = CoordinateCap::unbounded());

// #{x in Z^d : |x|^2 = n}
BigInt sphere_count(int d, int n);
// #{x in Z^d : |x|^2 <= n}
BigInt ball_count(int d, int n);
// Shell sizes for n = 0..nmax in one pass.
std::vector<BigInt> sphere_counts(int d, int nmax, CoordinateCap cap = CoordinateCap::unbounded());

// #{x in Z^d : exactly n_j coordinates equal +-j}
BigInt d_count(const MultiIndex& nbar, int d);

// Explicit enumeration of the shell. Guarded to d <= 8, n <= 30.
std::vector<LatticePoint> brute_force_shell(int d, int n);

ConcentrationReport concentration_report(int d, int n, int K, int a);

} // namespace dfmax
