#include "dfmax/maximal_sim.hpp"

#include "dfmax/errors.hpp"
#include "dfmax/multipliers.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dfmax {

KernelSpec KernelSpec::sphere(int n) {
    KernelSpec s;
    s.kind = Kind::Sphere;
    s.n = n;
    return s;
}

KernelSpec KernelSpec::dbar(MultiIndex nbar) {
    KernelSpec s;
    s.kind = Kind::DBar;
    s.nbar = std::move(nbar);
    return s;
}

KernelSpec KernelSpec::semigroup(int k, double t, int eps) {
    KernelSpec s;
    s.kind = Kind::Semigroup;
    s.k = k;
    s.t = t;
    s.eps = eps;
    return s;
}

std::string KernelSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
    case Kind::Sphere: os << "sphere(n=" << n << ")"; break;
    case Kind::DBar: {
        os << "dbar(";
        for (size_t i = 0; i < nbar.n.size(); ++i) os << (i ? "," : "") << nbar.n[i];
        os << ")";
        break;
    }
    case Kind::Semigroup: os << "semigroup(k=" << k << ",t=" << t << ",eps=" << eps << ")"; break;
    }
    return os.str();
}

namespace {

std::vector<LatticePoint> dbar_points(const MultiIndex& nbar, int d) {
    for (int v : nbar.n) {
        if (v < 0) throw std::invalid_argument("dbar kernel: negative multi-index entry");
    }
    if (nbar.total() > d) throw std::invalid_argument("dbar kernel: |n| exceeds d");
    std::vector<LatticePoint> out;
    std::vector<int> left = nbar.n;
    LatticePoint x(static_cast<size_t>(d), 0);
    auto rec = [&](auto&& self, int i, int still) -> void {
        if (i == d) {
            out.push_back(x);
            return;
        }
        if (d - i > still) {
            x[static_cast<size_t>(i)] = 0;
            self(self, i + 1, still);
        }
        for (int k = 0; k < nbar.K(); ++k) {
            if (left[k] == 0) continue;
            --left[k];
            for (int sign : {1, -1}) {
                x[static_cast<size_t>(i)] = sign * (k + 1);
                self(self, i + 1, still - 1);
            }
            ++left[k];
        }
        x[static_cast<size_t>(i)] = 0;
    };
    rec(rec, 0, nbar.total());
    return out;
}

Kernel point_set_kernel(const KernelSpec& spec, int d, int M, const std::vector<LatticePoint>& pts) {
    if (pts.empty()) throw std::invalid_argument("kernel " + spec.describe() + " has an empty point set");
    int reach = 0;
    for (const LatticePoint& p : pts) {
        for (int v : p) reach = std::max(reach, std::abs(v));
    }
    if (M <= 2 * reach) {
        throw GuardError("M > 2 max|x_i|", spec.describe() + " reaches " + std::to_string(reach) +
                                               " but M = " + std::to_string(M));
    }
    Kernel k{spec, TorusFunction(d, M), {}};
    const double w = 1.0 / static_cast<double>(pts.size());
    for (const LatticePoint& p : pts) k.values[k.values.index_of(p)] += w;
    k.spectrum = dft(k.values);
    return k;
}

} // namespace

Kernel make_kernel(const KernelSpec& spec, int d, int M) {
    switch (spec.kind) {
    case KernelSpec::Kind::Sphere: return point_set_kernel(spec, d, M, brute_force_shell(d, spec.n));
    case KernelSpec::Kind::DBar: return point_set_kernel(spec, d, M, dbar_points(spec.nbar, d));
    case KernelSpec::Kind::Semigroup: {
        if (spec.t < 0.0) throw std::invalid_argument("semigroup kernel needs t >= 0");
        TorusFunction grid(d, M);
        std::vector<Complex> symbol(grid.size());
        TorusPoint xi;
        xi.xi.resize(static_cast<size_t>(d));
        for (size_t i = 0; i < grid.size(); ++i) {
            std::vector<int> m = grid.coords_of(i);
            for (int c = 0; c < d; ++c) xi.xi[static_cast<size_t>(c)] = static_cast<double>(m[c]) / M;
            symbol[i] = semigroup_symbol(spec.k, spec.t, spec.eps, xi);
        }
        return Kernel{spec, inverse_dft(d, M, symbol), symbol};
    }
    }
    throw std::logic_error("make_kernel: unknown kind");
}

TorusFunction apply(const Kernel& kernel, const TorusFunction& f) {
    if (f.d() != kernel.values.d() || f.M() != kernel.values.M()) {
        throw std::invalid_argument("apply: kernel and function live on different tori");
    }
    std::vector<Complex> spec = dft(f);
    for (size_t i = 0; i < spec.size(); ++i) spec[i] *= kernel.spectrum[i];
    return inverse_dft(f.d(), f.M(), spec);
}

TorusFunction maximal_function(const std::vector<Kernel>& family, const TorusFunction& f) {
    if (family.empty()) throw std::invalid_argument("maximal_function: empty family");
    TorusFunction out(f.d(), f.M());
    for (const Kernel& k : family) {
        TorusFunction g = apply(k, f);
        for (size_t i = 0; i < out.size(); ++i) {
            out[i] = std::max(out[i].real(), std::abs(g[i]));
        }
    }
    return out;
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::Spheres: return "spheres";
    case FamilyKind::DBar: return "dbar";
    case FamilyKind::Semigroup: return "semigroup";
    }
    return "unknown";
}

FamilyKind parse_family(const std::string& name) {
    for (FamilyKind k : {FamilyKind::Spheres, FamilyKind::DBar, FamilyKind::Semigroup}) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument("unknown family '" + name + "' (expected spheres, dbar or semigroup)");
}

Family build_family(FamilyKind kind, int d, int param) {
    if (param < 1) throw std::invalid_argument("build_family: parameter must be >= 1");
    Family fam;
    fam.kind = kind;
    std::ostringstream label;
    switch (kind) {
    case FamilyKind::Spheres: {
        label << "spheres(n<=" << param << ")";
        for (int n = 1; n <= param; ++n) {
            if (sphere_count(d, n) == 0) {
                fam.notes.push_back("n=" + std::to_string(n) + " skipped: empty shell");
                continue;
            }
            fam.members.push_back(KernelSpec::sphere(n));
        }
        break;
    }
    case FamilyKind::DBar: {
        const int cap = d / (2 * param);
        label << "dbar(K=" << param << ",n_j<=" << cap << ")";
        MultiIndex nbar;
        nbar.n.assign(static_cast<size_t>(param), 0);
        for (;;) {
            fam.members.push_back(KernelSpec::dbar(nbar));
            int j = 0;
            while (j < param && nbar.n[static_cast<size_t>(j)] == cap) nbar.n[static_cast<size_t>(j++)] = 0;
            if (j == param) break;
            ++nbar.n[static_cast<size_t>(j)];
        }
        break;
    }
    case FamilyKind::Semigroup: {
        label << "semigroup(k=" << param << ")";
        for (int eps : {0, 1}) {
            for (double t : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
                fam.members.push_back(KernelSpec::semigroup(param, t, eps));
            }
        }
        break;
    }
    }
    fam.label = label.str();
    return fam;
}

TorusFunction random_unit_function(int d, int M, std::uint64_t seed) {
    TorusFunction f(d, M);
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    for (Complex& v : f.values()) v = Complex(g(rng), g(rng));
    const double norm = f.l2_norm();
    for (Complex& v : f.values()) v /= norm;
    return f;
}

NormRatioReport empirical_norm_ratio(const Family& family, int d, int M, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("empirical_norm_ratio: trials must be >= 1");
    std::vector<Kernel> kernels;
    for (const KernelSpec& s : family.members) kernels.push_back(make_kernel(s, d, M));
    NormRatioReport rep;
    rep.family = family.label;
    rep.d = d;
    rep.M = M;
    rep.trials = trials;
    rep.seed = seed;
    rep.notes = family.notes;
    std::mt19937_64 seeds(seed);
    double sum = 0.0;
    for (int i = 0; i < trials; ++i) {
        TorusFunction f = random_unit_function(d, M, seeds());
        double r = maximal_function(kernels, f).l2_norm();
        rep.max_ratio = std::max(rep.max_ratio, r);
        sum += r;
    }
    rep.mean_ratio = sum / trials;
    return rep;
}

SemigroupCheck verify_semigroup_properties(int k, const std::vector<double>& t_grid, int d, int M,
                                           std::uint64_t seed, int trials) {
    if (t_grid.empty()) throw std::invalid_argument("verify_semigroup_properties: empty t grid");
    SemigroupCheck out;
    out.min_kernel_value = 1.0;
    std::mt19937_64 seeds(seed);
    std::vector<TorusFunction> inputs;
    for (int i = 0; i < trials; ++i) inputs.push_back(random_unit_function(d, M, seeds()));

    for (double t : t_grid) {
        Kernel p0 = make_kernel(KernelSpec::semigroup(k, t, 0), d, M);
        Kernel p1 = make_kernel(KernelSpec::semigroup(k, t, 1), d, M);
        for (const Complex& v : p0.values.values()) {
            out.min_kernel_value = std::min(out.min_kernel_value, v.real());
            out.max_kernel_imag = std::max(out.max_kernel_imag, std::abs(v.imag()));
        }
        for (const TorusFunction& f : inputs) {
            TorusFunction absf(d, M);
            for (size_t i = 0; i < f.size(); ++i) absf[i] = std::abs(f[i]);
            TorusFunction lhs = apply(p1, f);
            TorusFunction rhs = apply(p0, absf);
            for (size_t i = 0; i < f.size(); ++i) {
                out.max_domination_excess =
                    std::max(out.max_domination_excess, std::abs(lhs[i]) - rhs[i].real());
            }
        }
        for (double s : t_grid) {
            for (int eps : {0, 1}) {
                Kernel ps = make_kernel(KernelSpec::semigroup(k, s, eps), d, M);
                Kernel pt = make_kernel(KernelSpec::semigroup(k, t, eps), d, M);
                Kernel pst = make_kernel(KernelSpec::semigroup(k, s + t, eps), d, M);
                for (size_t i = 0; i < ps.spectrum.size(); ++i) {
                    double prod = ps.spectrum[i].real() * pt.spectrum[i].real();
                    double want = pst.spectrum[i].real();
                    double rel = std::abs(prod - want) / std::max(want, 1e-300);
                    out.max_symbol_error = std::max(out.max_symbol_error, rel);
                }
                for (const TorusFunction& f : inputs) {
                    TorusFunction two = apply(ps, apply(pt, f));
                    TorusFunction one = apply(pst, f);
                    for (size_t i = 0; i < f.size(); ++i) {
                        out.max_law_error = std::max(out.max_law_error, std::abs(two[i] - one[i]));
                    }
                }
            }
        }
    }
    out.positivity_ok = out.min_kernel_value >= -1e-12;
    out.domination_ok = out.max_domination_excess <= 1e-10;
    out.law_ok = out.max_law_error <= 1e-10;
    out.symbol_ok = out.max_symbol_error <= 1e-14;
    return out;
}

} // namespace dfmax
