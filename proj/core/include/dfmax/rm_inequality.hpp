#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace dfmax {

// Half-open integer interval (lo, hi].
struct DyadicPiece {
    long lo = 0;
    long hi = 0;

    long length() const { return hi - lo; }
    bool operator==(const DyadicPiece&) const = default;
};

// Splits (n, k] into aligned dyadic blocks ((j-1) 2^i, j 2^i] with 1 <= i <= s,
// each length used at most twice. Needs n, k even and 0 <= n < k <= 2^s.
std::vector<DyadicPiece> dyadic_decompose(long n, long k, int s);

// a(n) for an even multi-index n with 0 <= n_j <= m_j.
using SequenceOracle = std::function<std::complex<double>(std::span<const int>)>;

struct RMEvaluation {
    double lhs = 0.0;  // sup_n |a_n|
    double rhs = 0.0;  // square-function side plus |a_0|
};

// Both sides of the multi-parameter maximal inequality, the right side summed
// over every nonempty U subset [K] and level vector exactly as written, with
// block sums restricted to k_u <= m_u.
RMEvaluation rm_evaluate(std::span<const int> s, std::span<const int> m, const SequenceOracle& a);

struct RMReport {
    int K = 0;
    std::vector<int> s;
    std::vector<int> m;
    int trials = 0;
    std::uint64_t seed = 0;
    double worst_lhs = 0.0;
    double worst_rhs = 0.0;
    double fitted_constant = 0.0;  // max lhs / rhs over trials
};

// Random complex Gaussian sequences, one per trial.
RMReport rm_check(std::span<const int> s, std::span<const int> m, int trials, std::uint64_t seed);

} // namespace dfmax
