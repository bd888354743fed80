#include "dfmax/multipliers.hpp"

#include "dfmax/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace dfmax {

using std::numbers::pi;

double TorusPoint::norm_sq() const {
    double s = 0.0;
    for (double v : xi) s += std::sin(pi * v) * std::sin(pi * v);
    return s;
}

double TorusPoint::norm_half_sq() const {
    double s = 0.0;
    for (double v : xi) s += std::cos(pi * v) * std::cos(pi * v);
    return s;
}

TorusPoint TorusPoint::scaled(int k) const {
    TorusPoint out = *this;
    for (double& v : out.xi) v *= k;
    return out;
}

CoordinateSet all_coordinates(int d) {
    CoordinateSet J(static_cast<size_t>(d));
    std::iota(J.begin(), J.end(), 0);
    return J;
}

namespace {

void require_multi_index(const MultiIndex& nbar) {
    for (int v : nbar.n) {
        if (v < 0) throw std::invalid_argument("multi-index entries must be >= 0");
    }
}

void require_coordinates(std::span<const int> J, int d) {
    std::vector<char> seen(static_cast<size_t>(d), 0);
    for (int i : J) {
        if (i < 0 || i >= d) throw std::out_of_range("coordinate index outside the torus dimension");
        if (seen[static_cast<size_t>(i)]++) throw std::invalid_argument("coordinate set has repeats");
    }
}

} // namespace

double beta_eval(const MultiIndex& nbar, const TorusPoint& xi, std::span<const int> J) {
    require_multi_index(nbar);
    require_coordinates(J, xi.dim());
    const int K = nbar.K();
    const int total = nbar.total();
    const int size = static_cast<int>(J.size());
    if (total > size) {
        throw std::invalid_argument("beta_eval: |n| = " + std::to_string(total) +
                                    " exceeds |J| = " + std::to_string(size));
    }
    if (total == 0) return 1.0;

    // Mixed radix over the partial counts m_k in [0, n_k].
    std::vector<size_t> stride(static_cast<size_t>(K) + 1, 1);
    for (int k = 0; k < K; ++k) stride[k + 1] = stride[k] * static_cast<size_t>(nbar.n[k] + 1);
    const size_t states = stride[K];

    // Each coordinate receives label k with probability (n_k - m_k)/remaining,
    // which is the sequential form of a uniform draw from the point set.
    std::vector<double> cur(states, 0.0), next(states);
    cur[0] = 1.0;
    std::vector<int> m(static_cast<size_t>(K));
    std::vector<double> cosines(static_cast<size_t>(K));
    for (int p = 0; p < size; ++p) {
        const double remaining = size - p;
        const double x = xi.xi[static_cast<size_t>(J[static_cast<size_t>(p)])];
        for (int k = 0; k < K; ++k) cosines[k] = std::cos(2.0 * pi * (k + 1) * x);
        std::fill(next.begin(), next.end(), 0.0);
        for (size_t s = 0; s < states; ++s) {
            if (cur[s] == 0.0) continue;
            int still = 0;
            for (int k = 0; k < K; ++k) {
                m[k] = static_cast<int>((s / stride[k]) % (nbar.n[k] + 1));
                still += nbar.n[k] - m[k];
            }
            const double zeros = remaining - still;
            if (zeros > 0) next[s] += cur[s] * (zeros / remaining);
            for (int k = 0; k < K; ++k) {
                int left = nbar.n[k] - m[k];
                if (left > 0) next[s + stride[k]] += cur[s] * (left / remaining) * cosines[k];
            }
        }
        std::swap(cur, next);
    }
    return cur[states - 1];
}

double beta_eval(const MultiIndex& nbar, const TorusPoint& xi) {
    CoordinateSet J = all_coordinates(xi.dim());
    return beta_eval(nbar, xi, J);
}

std::complex<double> beta_bruteforce(const MultiIndex& nbar, const TorusPoint& xi) {
    require_multi_index(nbar);
    const int d = xi.dim();
    const int total = nbar.total();
    if (d > 10) throw GuardError("d <= 10", "beta_bruteforce called with d = " + std::to_string(d));
    if (total > 4) throw GuardError("|n| <= 4", "beta_bruteforce called with |n| = " + std::to_string(total));
    if (total > d) throw std::invalid_argument("beta_bruteforce: |n| exceeds d");

    std::vector<int> left = nbar.n;
    std::complex<double> sum = 0.0;
    long count = 0;
    auto rec = [&](auto&& self, int i, int still, double phase) -> void {
        if (i == d) {
            sum += std::polar(1.0, -2.0 * pi * phase);
            ++count;
            return;
        }
        const double x = xi.xi[static_cast<size_t>(i)];
        if (d - i > still) self(self, i + 1, still, phase);
        for (int k = 0; k < nbar.K(); ++k) {
            if (left[k] == 0) continue;
            --left[k];
            self(self, i + 1, still - 1, phase + (k + 1) * x);
            self(self, i + 1, still - 1, phase - (k + 1) * x);
            ++left[k];
        }
    };
    rec(rec, 0, total, 0.0);
    return sum / static_cast<double>(count);
}

double semigroup_symbol(int k, double t, int eps, const TorusPoint& xi) {
    if (eps != 0 && eps != 1) throw std::invalid_argument("semigroup_symbol: eps must be 0 or 1");
    if (xi.dim() == 0) throw std::invalid_argument("semigroup_symbol: empty point");
    TorusPoint kx = xi.scaled(k);
    double q = eps == 0 ? kx.norm_sq() : kx.norm_half_sq();
    return std::exp(-(t / xi.dim()) * q);
}

double semigroup_symbol_tilde(double t, const TorusPoint& xi) {
    if (xi.dim() == 0) throw std::invalid_argument("semigroup_symbol_tilde: empty point");
    return std::exp(-(t / xi.dim()) * std::min(xi.norm_sq(), xi.norm_half_sq()));
}

namespace {

void require_difference(const DifferenceSpec& spec) {
    require_multi_index(spec.nbar);
    std::vector<char> seen(static_cast<size_t>(spec.nbar.K()) + 1, 0);
    for (int k : spec.U) {
        if (k < 1 || k > spec.nbar.K()) throw std::out_of_range("difference label outside 1..K");
        if (seen[static_cast<size_t>(k)]++) throw std::invalid_argument("difference labels repeat");
        if (spec.nbar.n[static_cast<size_t>(k - 1)] < 2) {
            throw std::invalid_argument("difference in direction " + std::to_string(k) +
                                        " needs n_k >= 2");
        }
    }
}

} // namespace

double delta_beta(const DifferenceSpec& spec, const TorusPoint& xi, std::span<const int> J) {
    require_difference(spec);
    const size_t u = spec.U.size();
    double acc = 0.0;
    for (unsigned long W = 0; W < (1UL << u); ++W) {
        MultiIndex shifted = spec.nbar;
        int sign = 1;
        for (size_t b = 0; b < u; ++b) {
            if (W >> b & 1) {
                shifted.n[static_cast<size_t>(spec.U[b] - 1)] -= 2;
                sign = -sign;
            }
        }
        acc += sign * beta_eval(shifted, xi, J);
    }
    return acc;
}

double delta_beta_formula(const DifferenceSpec& spec, const TorusPoint& xi, std::span<const int> J) {
    require_difference(spec);
    require_coordinates(J, xi.dim());
    const int u = static_cast<int>(spec.U.size());
    const int size = static_cast<int>(J.size());
    if (size < 2 * u) throw std::invalid_argument("delta_beta_formula: needs |J| >= 2|U|");
    if (u >= 2 && size > 12) {
        throw GuardError("|J| <= 12", "delta_beta_formula with |U| = " + std::to_string(u) +
                                          " called with |J| = " + std::to_string(size));
    }
    if (spec.nbar.total() > size) throw std::invalid_argument("delta_beta_formula: |n| exceeds |J|");

    MultiIndex reduced = spec.nbar;
    for (int k : spec.U) reduced.n[static_cast<size_t>(k - 1)] -= 2;

    double prefactor = std::pow(-4.0, u);
    for (int i = 0; i < 2 * u; ++i) prefactor /= (size - i);

    std::vector<char> used(J.size(), 0);
    double sum = 0.0;
    auto rec = [&](auto&& self, int idx, double weight) -> void {
        if (idx == u) {
            CoordinateSet rest;
            for (size_t p = 0; p < J.size(); ++p) {
                if (!used[p]) rest.push_back(J[p]);
            }
            sum += weight * beta_eval(reduced, xi, rest);
            return;
        }
        const int k = spec.U[static_cast<size_t>(idx)];
        for (size_t px = 0; px < J.size(); ++px) {
            if (used[px]) continue;
            double s = std::sin(k * pi * xi.xi[static_cast<size_t>(J[px])]);
            if (s == 0.0) continue;
            used[px] = 1;
            for (size_t py = 0; py < J.size(); ++py) {
                if (used[py]) continue;
                double c = std::cos(k * pi * xi.xi[static_cast<size_t>(J[py])]);
                used[py] = 1;
                self(self, idx + 1, weight * s * s * c * c);
                used[py] = 0;
            }
            used[px] = 0;
        }
    };
    rec(rec, 0, 1.0);
    return prefactor * sum;
}

SphericalSymbol spherical_symbol(int n, const TorusPoint& xi, int K, int a) {
    if (K < 1) throw std::invalid_argument("spherical_symbol: K must be >= 1");
    const std::vector<LatticePoint> shell = brute_force_shell(xi.dim(), n);
    SphericalSymbol out;
    out.shell_size = shell.size();
    if (shell.empty()) throw std::invalid_argument("spherical_symbol: empty shell");
    std::complex<double> total = 0.0;
    double r = 0.0;
    for (const LatticePoint& x : shell) {
        double phase = 0.0;
        int small_mass = 0, ones = 0;
        for (size_t i = 0; i < x.size(); ++i) {
            phase += x[i] * xi.xi[i];
            if (std::abs(x[i]) <= K) small_mass += x[i] * x[i];
            if (std::abs(x[i]) == 1) ++ones;
        }
        std::complex<double> e = std::polar(1.0, -2.0 * pi * phase);
        total += e;
        bool few_ones = 2 * ones < n;
        bool light = small_mass < n - a;
        if (few_ones || light) r += e.real();
    }
    const double size = static_cast<double>(shell.size());
    out.s = total.real() / size;
    out.s_imag = total.imag() / size;
    out.r = r / size;
    out.s_tilde = out.s - out.r;
    return out;
}

} // namespace dfmax
