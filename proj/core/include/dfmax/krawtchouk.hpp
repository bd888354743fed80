#pragma once

#include "dfmax/big_number.hpp"

#include <vector>

namespace dfmax {

// Normalized Krawtchouk polynomial
//   kr_k(x) = C(n,k)^{-1} sum_j (-1)^j C(x,j) C(n-x,k-j),  0 <= k, x <= n.
Rational kr(int k, int n, int x);

// kr_k(x) for x = 0..n.
std::vector<Rational> kr_row(int k, int n);

// c = -2 ln 0.93 in |kr_k(x)| <= exp(-c k x / n).
double krawtchouk_decay_constant();

struct KrawtchoukPropertyReport {
    int n_max = 0;
    long symmetry_checked = 0, symmetry_violations = 0;
    long reflection_checked = 0, reflection_violations = 0;
    long bound_checked = 0, bound_violations = 0;
    double bound_worst_ratio = 0.0;           // max |kr| / exp(-c k x / n)
    double bound_worst_ratio_interior = 0.0;  // same, restricted to k, x >= 1
    long difference_checked = 0, difference_violations = 0;

    bool all_hold() const {
        return symmetry_violations == 0 && reflection_violations == 0 && bound_violations == 0 &&
               difference_violations == 0;
    }
};

// Symmetry, reflection, exponential bound (for x, k <= n/2) and the two-step
// difference identity, checked exactly for every 1 <= n <= n_max.
KrawtchoukPropertyReport check_krawtchouk_properties(int n_max);

} // namespace dfmax
