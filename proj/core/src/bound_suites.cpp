#include "dfmax/krawtchouk.hpp"
#include "dfmax/multipliers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

namespace dfmax {

std::string to_string(BoundSuite suite) {
    switch (suite) {
    case BoundSuite::BetaDecay: return "beta-decay";
    case BoundSuite::SemigroupApprox: return "semigroup-approx";
    case BoundSuite::DyadicSum: return "dyadic-sum";
    case BoundSuite::SubsetAverage: return "subset-average";
    case BoundSuite::DifferenceDecay: return "difference-decay";
    }
    return "unknown";
}

BoundSuite parse_bound_suite(const std::string& name) {
    for (BoundSuite s : {BoundSuite::BetaDecay, BoundSuite::SemigroupApprox, BoundSuite::DyadicSum,
                         BoundSuite::SubsetAverage, BoundSuite::DifferenceDecay}) {
        if (to_string(s) == name) return s;
    }
    throw std::invalid_argument("unknown bound suite '" + name + "'");
}

namespace {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

// Half the samples are uniform; the rest sit near 0 or near 1/2 where the
// bounds are tightest.
TorusPoint sample_point(Rng& rng, int d) {
    TorusPoint p;
    p.xi.resize(static_cast<size_t>(d));
    int mode = uniform_int(rng, 0, 3);
    double scale = std::pow(10.0, -3.0 * uniform01(rng));
    for (double& v : p.xi) {
        double u = uniform01(rng);
        if (mode <= 1) v = u;
        else if (mode == 2) v = scale * (u - 0.5);
        else v = 0.5 + scale * (u - 0.5);
    }
    return p;
}

double min_norm(const TorusPoint& xi, int j) {
    TorusPoint jx = xi.scaled(j);
    return std::min(jx.norm_sq(), jx.norm_half_sq());
}

void record(BoundReport& rep, double lhs, double shape, double constant) {
    if (shape <= 0.0) {
        if (lhs > 0.0) ++rep.violations;
        return;
    }
    double fitted = lhs / shape;
    rep.fitted_constant = std::max(rep.fitted_constant, fitted);
    if (rep.explicit_constant) {
        double ratio = fitted / constant;
        rep.worst_ratio = std::max(rep.worst_ratio, ratio);
        if (ratio > 1.0) ++rep.violations;
    }
}

void beta_decay(BoundReport& rep, Rng& rng) {
    const double c = krawtchouk_decay_constant();
    for (int s = 0; s < rep.samples; ++s) {
        int K = uniform_int(rng, 1, 3);
        int size = uniform_int(rng, 2, 30);
        MultiIndex nbar;
        do {
            nbar.n.assign(static_cast<size_t>(K), 0);
            for (int& v : nbar.n) v = uniform_int(rng, 0, size / 2);
        } while (nbar.total() + nbar.max() > size);
        TorusPoint xi = sample_point(rng, size);
        double lhs = std::abs(beta_eval(nbar, xi));
        double shape = 1.0;
        for (int j = 1; j <= K; ++j) {
            shape *= std::exp(-c * nbar.n[j - 1] / (80.0 * K * size) * min_norm(xi, j));
        }
        record(rep, lhs, shape, 6.0);
    }
}

void subset_average(BoundReport& rep, Rng& rng) {
    for (int s = 0; s < rep.samples; ++s) {
        int m = uniform_int(rng, 1, 14);
        int k = uniform_int(rng, 0, m);
        double delta0 = std::max(uniform01(rng), 1e-9);
        std::vector<double> u(static_cast<size_t>(m));
        double total = 0.0;
        for (double& v : u) {
            v = uniform01(rng) * (1.0 - delta0) / 2.0;
            total += v;
        }
        double acc = 0.0;
        long subsets = 0;
        for (unsigned mask = 0; mask < (1u << m); ++mask) {
            if (std::popcount(mask) != k) continue;
            double mass = 0.0;
            for (int j = 0; j < m; ++j) {
                if (mask >> j & 1) mass += u[static_cast<size_t>(j)];
            }
            acc += std::exp(-mass);
            ++subsets;
        }
        double lhs = acc / static_cast<double>(subsets);
        double shape = std::exp(-delta0 * k / (20.0 * m) * total);
        record(rep, lhs, shape, 3.0);
    }
}

double dyadic_sum(double x, int eps) {
    if (x == 0.0) return 0.0;
    double sum = 0.0;
    for (int m = 1;; ++m) {
        double n = std::ldexp(1.0, m) - eps;
        double t = n * x;
        double term = std::min(t, 1.0 / t);
        sum += term * term;
        if (t > 1e20) break;
    }
    return sum;
}

void dyadic_grid(BoundReport& rep) {
    const int N = rep.samples;
    for (int i = 0; i < N; ++i) {
        double x = N == 1 ? 1.0 : std::pow(10.0, -8.0 + 16.0 * i / (N - 1));
        for (int eps = 0; eps <= 1; ++eps) record(rep, dyadic_sum(x, eps), 1.0, 10.0);
    }
    for (int eps = 0; eps <= 1; ++eps) {
        if (dyadic_sum(0.0, eps) != 0.0) ++rep.violations;
    }
}

struct ApproxTerm {
    std::vector<int> V;     // frequencies 1..K
    MultiIndex nbar;
    std::vector<double> c;  // -eps_j ptilde_{n_j}(j xi), indexed by frequency - 1
    const TorusPoint* xi;
};

// sum_{U subset V} prod_{j in V \ U} c_j beta_{n(U)}, expanded one frequency at
// a time so that a frequency with n_j = 0 cancels exactly.
double approx_sum(const ApproxTerm& t, size_t idx, MultiIndex& current) {
    if (idx == t.V.size()) return beta_eval(current, *t.xi);
    const size_t j = static_cast<size_t>(t.V[idx] - 1);
    current.n[j] = t.nbar.n[j];
    double with = approx_sum(t, idx + 1, current);
    current.n[j] = 0;
    double without = approx_sum(t, idx + 1, current);
    return with + t.c[j] * without;
}

std::vector<int> random_nonempty_subset(Rng& rng, int K) {
    std::vector<int> V;
    while (V.empty()) {
        for (int j = 1; j <= K; ++j) {
            if (uniform_int(rng, 0, 1)) V.push_back(j);
        }
    }
    return V;
}

void semigroup_approx(BoundReport& rep, Rng& rng) {
    long zero_cases = 0, zero_failures = 0;
    for (int s = 0; s < rep.samples; ++s) {
        int K = uniform_int(rng, 1, 2);
        int d = uniform_int(rng, 2 * K, 24);
        int cap = d / (2 * K);
        MultiIndex nbar;
        nbar.n.assign(static_cast<size_t>(K), 0);
        for (int& v : nbar.n) v = uniform_int(rng, 0, cap);
        std::vector<int> V = random_nonempty_subset(rng, K);
        TorusPoint xi = sample_point(rng, d);

        ApproxTerm term{V, nbar, std::vector<double>(static_cast<size_t>(K)), &xi};
        double shape = 1.0;
        bool has_zero = false;
        for (int j : V) {
            TorusPoint jx = xi.scaled(j);
            double plain = jx.norm_sq(), half = jx.norm_half_sq();
            bool in_A = half <= plain;
            int nj = nbar.n[static_cast<size_t>(j - 1)];
            double eps = (in_A && nj % 2) ? -1.0 : 1.0;
            term.c[static_cast<size_t>(j - 1)] = -eps * semigroup_symbol_tilde(nj, jx);
            double sj = static_cast<double>(nj) / d * std::min(plain, half);
            shape *= std::min(sj, 1.0 / sj);
            if (nj == 0) has_zero = true;
        }
        MultiIndex current;
        current.n.assign(static_cast<size_t>(K), 0);
        double lhs = std::abs(approx_sum(term, 0, current));
        if (has_zero) {
            ++zero_cases;
            if (lhs != 0.0) ++zero_failures;
            continue;
        }
        record(rep, lhs, shape, 1.0);
        if (shape > 0.0) {
            double& f = rep.fitted_by_K[K];
            f = std::max(f, lhs / shape);
        }
    }
    rep.violations += zero_failures;
    rep.notes.push_back("samples with some n_j = 0: " + std::to_string(zero_cases) +
                        ", nonzero sums among them: " + std::to_string(zero_failures));
}

void difference_decay(BoundReport& rep, Rng& rng) {
    for (int s = 0; s < rep.samples; ++s) {
        int K = uniform_int(rng, 1, 2);
        int d = uniform_int(rng, 4 * K, 24);
        int cap = d / (2 * K);
        std::vector<int> U = random_nonempty_subset(rng, K);
        MultiIndex nbar;
        nbar.n.assign(static_cast<size_t>(K), 0);
        for (int& v : nbar.n) v = uniform_int(rng, 0, cap);
        for (int k : U) nbar.n[static_cast<size_t>(k - 1)] = uniform_int(rng, 2, cap);
        TorusPoint xi = sample_point(rng, d);
        double lhs = std::abs(delta_beta({nbar, U}, xi, all_coordinates(d)));
        double shape = 1.0;
        for (int k : U) {
            int nk = nbar.n[static_cast<size_t>(k - 1)];
            double sk = static_cast<double>(nk) / d * min_norm(xi, k);
            shape *= std::min(sk, 1.0 / sk) / nk;
        }
        record(rep, lhs, shape, 1.0);
        if (shape > 0.0) {
            double& f = rep.fitted_by_K[K];
            f = std::max(f, lhs / shape);
        }
    }
}

} // namespace

BoundReport check_bounds(BoundSuite suite, int samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("check_bounds: samples must be >= 1");
    BoundReport rep;
    rep.suite = suite;
    rep.samples = samples;
    rep.seed = seed;
    Rng rng(seed);
    switch (suite) {
    case BoundSuite::BetaDecay: beta_decay(rep, rng); break;
    case BoundSuite::SubsetAverage: subset_average(rep, rng); break;
    case BoundSuite::DyadicSum: dyadic_grid(rep); break;
    case BoundSuite::SemigroupApprox:
        rep.explicit_constant = false;
        semigroup_approx(rep, rng);
        break;
    case BoundSuite::DifferenceDecay:
        rep.explicit_constant = false;
        difference_decay(rep, rng);
        break;
    }
    if (!rep.explicit_constant) rep.worst_ratio = rep.fitted_constant;
    return rep;
}

} // namespace dfmax
