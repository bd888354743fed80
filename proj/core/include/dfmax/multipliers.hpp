#pragma once

#include "dfmax/exact_counting.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace dfmax {

// A point of the torus [0,1)^d (any real representative is accepted).
struct TorusPoint {
    std::vector<double> xi;

    int dim() const { return static_cast<int>(xi.size()); }
    double norm_sq() const;       // sum sin^2(pi xi_i)
    double norm_half_sq() const;  // |xi + 1/2|^2 = sum cos^2(pi xi_i)
    TorusPoint scaled(int k) const;
};

using CoordinateSet = std::vector<int>;  // 0-based coordinate indices, distinct

CoordinateSet all_coordinates(int d);

// Average of e(x . xi) over x supported in J with exactly n_j coordinates equal
// to +-j. Forward recursion over the coordinates of J; cost |J| prod (n_j + 1).
double beta_eval(const MultiIndex& nbar, const TorusPoint& xi, std::span<const int> J);
double beta_eval(const MultiIndex& nbar, const TorusPoint& xi);

// Explicit average over the point set. Guarded to d <= 10, |n| <= 4.
std::complex<double> beta_bruteforce(const MultiIndex& nbar, const TorusPoint& xi);

// p_t(k xi) for eps = 0 and p_t(k xi + 1/2) for eps = 1, with
// p_t(xi) = exp(-(t/d) |xi|^2).
double semigroup_symbol(int k, double t, int eps, const TorusPoint& xi);
// exp(-(t/d) min(|xi|^2, |xi + 1/2|^2))
double semigroup_symbol_tilde(double t, const TorusPoint& xi);

// Labels in U are frequencies 1..K (1-based), each at most once.
struct DifferenceSpec {
    MultiIndex nbar;
    std::vector<int> U;
};

// Delta^U beta = sum_{W subset U} (-1)^{|W|} beta_{n - 2 1_W}
double delta_beta(const DifferenceSpec& spec, const TorusPoint& xi, std::span<const int> J);

// Same quantity through the sin^2 / cos^2 pair expansion. Needs |J| >= 2|U|,
// guarded to |J| <= 12 once |U| >= 2.
double delta_beta_formula(const DifferenceSpec& spec, const TorusPoint& xi, std::span<const int> J);

struct SphericalSymbol {
    double s = 0.0;          // real part of the shell average
    double s_imag = 0.0;
    double s_tilde = 0.0;    // s - r
    double r = 0.0;
    std::size_t shell_size = 0;
};

// Shell average of e(x . xi) split by (K, a): r collects the points with fewer
// than n/2 coordinates equal to +-1, plus those whose coordinates bounded by K
// carry mass < n - a. Guarded like brute_force_shell.
SphericalSymbol spherical_symbol(int n, const TorusPoint& xi, int K, int a);

enum class BoundSuite { BetaDecay, SemigroupApprox, DyadicSum, SubsetAverage, DifferenceDecay };

std::string to_string(BoundSuite suite);
BoundSuite parse_bound_suite(const std::string& name);

struct BoundReport {
    BoundSuite suite{};
    int samples = 0;
    long violations = 0;
    double worst_ratio = 0.0;      // max lhs / stated bound (explicit suites)
    double fitted_constant = 0.0;  // max lhs / bound shape without its constant
    bool explicit_constant = true;
    std::map<int, double> fitted_by_K;
    std::uint64_t seed = 0;
    std::vector<std::string> notes;
};

BoundReport check_bounds(BoundSuite suite, int samples, std::uint64_t seed);

} // namespace dfmax
