#pragma once

#include "dfmax/exact_counting.hpp"
#include "dfmax/torus.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dfmax {

struct KernelSpec {
    enum class Kind { Sphere, DBar, Semigroup };

    Kind kind = Kind::Sphere;
    int n = 0;          // sphere radius squared
    MultiIndex nbar;    // dbar
    int k = 1;          // semigroup step
    double t = 0.0;
    int eps = 0;

    static KernelSpec sphere(int n);
    static KernelSpec dbar(MultiIndex nbar);
    static KernelSpec semigroup(int k, double t, int eps);

    std::string describe() const;
};

struct Kernel {
    KernelSpec spec;
    TorusFunction values;
    std::vector<Complex> spectrum;
};

// Point sets put mass 1/|set| on each point, folded mod M; M must exceed twice
// the largest coordinate so no two points alias. Semigroup kernels are the
// inverse DFT of the symbol sampled at xi = m/M.
Kernel make_kernel(const KernelSpec& spec, int d, int M);

TorusFunction apply(const Kernel& kernel, const TorusFunction& f);

// sup over the family of |K * f|, pointwise.
TorusFunction maximal_function(const std::vector<Kernel>& family, const TorusFunction& f);

enum class FamilyKind { Spheres, DBar, Semigroup };

std::string to_string(FamilyKind kind);
FamilyKind parse_family(const std::string& name);

struct Family {
    FamilyKind kind{};
    std::string label;
    std::vector<KernelSpec> members;
    std::vector<std::string> notes;  // members dropped, with the reason
};

// Spheres: 1 <= n <= param with nonempty shells. DBar: every nbar in N^param
// with n_j <= d/(2 param). Semigroup: step param, eps in {0,1}, t on a fixed grid.
Family build_family(FamilyKind kind, int d, int param);

struct NormRatioReport {
    std::string family;
    int d = 0;
    int M = 0;
    int trials = 0;
    double max_ratio = 0.0;
    double mean_ratio = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::string> notes;
};

// ||sup |K f| ||_2 over random unit f. Only a lower bound for the operator norm.
NormRatioReport empirical_norm_ratio(const Family& family, int d, int M, int trials, std::uint64_t seed);

struct SemigroupCheck {
    double min_kernel_value = 0.0;      // over eps = 0 kernels
    double max_kernel_imag = 0.0;
    double max_domination_excess = 0.0; // max of |P1 f| - P0 |f|
    double max_law_error = 0.0;         // |P_s P_t f - P_{s+t} f|
    double max_symbol_error = 0.0;      // relative |p_s p_t - p_{s+t}|
    bool positivity_ok = false;
    bool domination_ok = false;
    bool law_ok = false;
    bool symbol_ok = false;

    bool all_hold() const { return positivity_ok && domination_ok && law_ok && symbol_ok; }
};

SemigroupCheck verify_semigroup_properties(int k, const std::vector<double>& t_grid, int d, int M,
                                           std::uint64_t seed = 1, int trials = 4);

TorusFunction random_unit_function(int d, int M, std::uint64_t seed);

} // namespace dfmax
