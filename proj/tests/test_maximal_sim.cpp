#include "dfmax/errors.hpp"
#include "dfmax/maximal_sim.hpp"
#include "dfmax/multipliers.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace dfmax;

TEST(TorusFunction, GuardsAndIndexing) {
    EXPECT_THROW(TorusFunction(5, 4), GuardError);
    EXPECT_THROW(TorusFunction(2, 33), GuardError);
    TorusFunction f(3, 8);
    EXPECT_EQ(f.size(), 512u);
    EXPECT_EQ(f.index_of({-1, 0, 9}), f.index_of({7, 0, 1}));
    EXPECT_EQ(f.coords_of(f.index_of({3, 5, 6})), (std::vector<int>{3, 5, 6}));
}

TEST(Dft, RoundTripAndDelta) {
    TorusFunction f = random_unit_function(2, 8, 3);
    TorusFunction g = inverse_dft(2, 8, dft(f));
    for (size_t i = 0; i < f.size(); ++i) EXPECT_NEAR(std::abs(f[i] - g[i]), 0.0, 1e-14);
    TorusFunction delta(2, 8);
    delta[0] = 1.0;
    for (const Complex& v : dft(delta)) EXPECT_NEAR(std::abs(v - Complex(1.0)), 0.0, 1e-15);
}

TEST(Kernel, PointSetsAreProbabilities) {
    Kernel k = make_kernel(KernelSpec::sphere(5), 3, 8);
    double mass = 0.0;
    for (const Complex& v : k.values.values()) mass += v.real();
    EXPECT_NEAR(mass, 1.0, 1e-14);
    EXPECT_THROW(make_kernel(KernelSpec::sphere(9), 2, 6), GuardError);
    EXPECT_THROW(make_kernel(KernelSpec::sphere(3), 2, 8), std::invalid_argument);
}

TEST(Kernel, DBarSpectrumIsBeta) {
    for (int d = 1; d <= 3; ++d) {
        for (int M : {8, 16}) {
            for (const MultiIndex& nbar : {MultiIndex{{1}}, MultiIndex{{0, 1}}, MultiIndex{{1, 1}},
                                           MultiIndex{{2, 1}}, MultiIndex{{0, 0, 1}}}) {
                if (nbar.total() > d || 2 * nbar.K() >= M) continue;
                Kernel k = make_kernel(KernelSpec::dbar(nbar), d, M);
                for (size_t i = 0; i < k.spectrum.size(); ++i) {
                    TorusPoint xi;
                    for (int c : k.values.coords_of(i)) xi.xi.push_back(static_cast<double>(c) / M);
                    EXPECT_NEAR(k.spectrum[i].real(), beta_eval(nbar, xi), 1e-10);
                    EXPECT_NEAR(k.spectrum[i].imag(), 0.0, 1e-10);
                }
            }
        }
    }
}

TEST(Kernel, SphereSpectrumIsShellAverage) {
    Kernel k = make_kernel(KernelSpec::sphere(6), 3, 8);
    for (size_t i = 0; i < k.spectrum.size(); i += 7) {
        TorusPoint xi;
        for (int c : k.values.coords_of(i)) xi.xi.push_back(c / 8.0);
        EXPECT_NEAR(k.spectrum[i].real(), spherical_symbol(6, xi, 1, 0).s, 1e-12);
    }
}

TEST(Kernel, SemigroupMatchesBesselSeries) {
    // d = 1: exp(-t sin^2(pi xi)) has Fourier coefficients e^{-t/2} I_x(t/2),
    // periodized mod M.
    const int M = 16;
    for (double t : {0.5, 3.0, 12.0}) {
        Kernel k = make_kernel(KernelSpec::semigroup(1, t, 0), 1, M);
        for (int x = 0; x < M; ++x) {
            double want = 0.0;
            for (int j = x - 10 * M; j <= x + 10 * M; j += M) {
                want += std::exp(-t / 2) * std::cyl_bessel_i(std::abs(j), t / 2);
            }
            EXPECT_NEAR(k.values[static_cast<size_t>(x)].real(), want, 1e-13);
        }
    }
}

TEST(Semigroup, PositivityDominationAndLaw) {
    for (int d = 1; d <= 3; ++d) {
        for (int M : {8, 16}) {
            for (int k : {1, 2, 3}) {
                SemigroupCheck c = verify_semigroup_properties(k, {0.0, 0.5, 2.0, 7.0}, d, M, 17, 2);
                EXPECT_TRUE(c.positivity_ok) << d << " " << M << " " << k << " min " << c.min_kernel_value;
                EXPECT_TRUE(c.domination_ok) << c.max_domination_excess;
                EXPECT_TRUE(c.law_ok) << c.max_law_error;
                EXPECT_TRUE(c.symbol_ok) << c.max_symbol_error;
            }
        }
    }
}

TEST(Apply, UnitSphereIsNeighbourAverage) {
    TorusFunction f = random_unit_function(1, 8, 12);
    TorusFunction g = apply(make_kernel(KernelSpec::sphere(1), 1, 8), f);
    for (int x = 0; x < 8; ++x) {
        Complex want = 0.5 * (f[static_cast<size_t>((x + 1) % 8)] + f[static_cast<size_t>((x + 7) % 8)]);
        EXPECT_NEAR(std::abs(g[static_cast<size_t>(x)] - want), 0.0, 1e-15);
    }
}

TEST(MaximalFunction, DominatesEachMember) {
    std::vector<Kernel> fam;
    for (int n : {1, 2, 4, 5}) fam.push_back(make_kernel(KernelSpec::sphere(n), 2, 8));
    TorusFunction f = random_unit_function(2, 8, 4);
    TorusFunction m = maximal_function(fam, f);
    for (const Kernel& k : fam) {
        TorusFunction g = apply(k, f);
        for (size_t i = 0; i < f.size(); ++i) EXPECT_GE(m[i].real() + 1e-15, std::abs(g[i]));
    }
    EXPECT_THROW(maximal_function({}, f), std::invalid_argument);
}

TEST(MaximalFunction, IdentityFamilyGivesModulus) {
    std::vector<Kernel> fam{make_kernel(KernelSpec::dbar(MultiIndex{{0}}), 2, 8)};
    TorusFunction f = random_unit_function(2, 8, 2);
    TorusFunction m = maximal_function(fam, f);
    for (size_t i = 0; i < f.size(); ++i) EXPECT_NEAR(m[i].real(), std::abs(f[i]), 1e-15);
}

TEST(Family, Construction) {
    Family dbar = build_family(FamilyKind::DBar, 4, 1);
    EXPECT_EQ(dbar.members.size(), 3u);  // n in {0, 1, 2}
    Family dbar2 = build_family(FamilyKind::DBar, 4, 2);
    EXPECT_EQ(dbar2.members.size(), 4u);  // n_1, n_2 in {0, 1}
    Family sph = build_family(FamilyKind::Spheres, 2, 6);
    EXPECT_EQ(sph.members.size(), 4u);  // 1, 2, 4, 5
    EXPECT_EQ(sph.notes.size(), 2u);
    EXPECT_EQ(build_family(FamilyKind::Semigroup, 2, 1).members.size(), 16u);
    EXPECT_THROW(parse_family("balls"), std::invalid_argument);
}

TEST(NormRatio, SeededAndAtLeastIdentity) {
    Family fam = build_family(FamilyKind::DBar, 2, 1);
    NormRatioReport a = empirical_norm_ratio(fam, 2, 8, 5, 42);
    NormRatioReport b = empirical_norm_ratio(fam, 2, 8, 5, 42);
    EXPECT_EQ(a.max_ratio, b.max_ratio);
    EXPECT_EQ(a.mean_ratio, b.mean_ratio);
    EXPECT_GE(a.mean_ratio, 1.0 - 1e-12);  // the family contains the identity
    EXPECT_LE(a.mean_ratio, a.max_ratio);
}
