#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "thzkit/hypersurface.hpp"

using namespace thzkit;

namespace {

std::vector<double> mu_sweep(double lo_ev, double hi_ev, double step_ev) {
    std::vector<double> mus;
    for (int i = 0; lo_ev + i * step_ev <= hi_ev + 1e-9; ++i) mus.push_back((lo_ev + i * step_ev) * constants::e);
    return mus;
}

HsfCell random_cell(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    HsfCell c;
    c.slab_thickness = 1e-6 + u(rng) * 100e-6;
    c.slab_rel_permittivity = 1.0 + u(rng) * 11.0;
    c.fill_factor = 0.01 + u(rng) * 0.99;
    c.graphene = {u(rng) * constants::e, std::pow(10.0, -14.0 + 3.0 * u(rng)), 4.0 + 500.0 * u(rng)};
    return c;
}

}  // namespace

TEST(Hypersurface, Fig4Preset) {
    const auto cell = fig4_cell();
    EXPECT_NEAR(cell.slab_thickness * 1e6, 31.2128, 1e-4);
    const auto s = reflection(1e12, cell, 0.0, Polarization::TM);
    EXPECT_NEAR(s.efficiency, 0.7550, 5e-4);
    EXPECT_NEAR(phase_coverage(1e12, cell, mu_sweep(0.1, 1.0, 0.02), 0.0, Polarization::TM), 283.8, 0.1);
}

TEST(Hypersurface, ObliqueEfficiencyStaysClose) {
    const auto cell = fig4_cell();
    for (auto pol : {Polarization::TE, Polarization::TM}) {
        for (double deg = 0.0; deg <= 50.0; deg += 5.0) {
            const double eta = reflection(1e12, cell, deg * constants::pi / 180.0, pol).efficiency;
            EXPECT_GT(eta, 0.70);
            EXPECT_LT(eta, 0.76);
        }
    }
}

TEST(Hypersurface, MatchesAbcdOracleAndIsPassive) {
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 5000; ++i) {
        const auto cell = random_cell(rng);
        const double f = 0.1e12 + u(rng) * 9.9e12;
        const double theta = u(rng) * 1.4;
        const bool te = u(rng) < 0.5;
        const auto s = reflection(f, cell, theta, te ? Polarization::TE : Polarization::TM);
        const Complex y = cell.fill_factor *
                          oracle::graphene_sigma(f, cell.graphene.mu_c, cell.graphene.tau, cell.graphene.temp);
        const auto ref = oracle::abcd_reflection(f, y, cell.slab_rel_permittivity, cell.slab_thickness, theta, te);
        EXPECT_LT(std::abs(s.gamma - ref), 1e-9);
        EXPECT_LE(s.efficiency, 1.0 + 1e-12);
        EXPECT_NEAR(s.efficiency, std::norm(s.gamma), 1e-15);
        EXPECT_GT(s.phase_deg, -180.0);
        EXPECT_LE(s.phase_deg, 180.0);
    }
}

TEST(Hypersurface, LosslessLimitIsUnitary) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        auto cell = random_cell(rng);
        cell.graphene.tau = 1e300;
        const auto s = reflection(0.1e12 + u(rng) * 9.9e12, cell, u(rng) * 1.4,
                                  u(rng) < 0.5 ? Polarization::TE : Polarization::TM);
        EXPECT_NEAR(std::abs(s.gamma), 1.0, 1e-9);
    }
}

TEST(Hypersurface, BareSlabAndShortLimits) {
    HsfCell cell = fig4_cell();
    const double f = 1e12;
    const double kz = free_space_wavenumber(f) * std::sqrt(cell.slab_rel_permittivity);
    cell.slab_thickness = constants::pi / kz;  // half-wave slab: short circuit at the top
    EXPECT_NEAR(std::abs(reflection(f, cell, 0.0, Polarization::TM).gamma + 1.0), 0.0, 1e-6);
    const auto zs = slab_input_impedance(f, cell, 0.0, Polarization::TE);
    EXPECT_NEAR(std::abs(zs), 0.0, 1e-6);
}

TEST(Hypersurface, InputImpedanceIsParallelCombination) {
    const auto cell = fig4_cell();
    const Complex zs = slab_input_impedance(1e12, cell, 0.3, Polarization::TM);
    const Complex zg = 1.0 / (cell.fill_factor * graphene_sigma_intra(1e12, cell.graphene));
    const Complex expected = zs * zg / (zs + zg);
    EXPECT_LT(std::abs(cell_input_impedance(1e12, cell, 0.3, Polarization::TM) - expected), 1e-9 * std::abs(expected));
}

TEST(Hypersurface, Errors) {
    auto cell = fig4_cell();
    EXPECT_THROW(reflection(1e12, cell, constants::pi / 2.0, Polarization::TE), DomainError);
    const std::vector<double> one{0.2 * constants::e};
    EXPECT_THROW(phase_coverage(1e12, cell, one, 0.0, Polarization::TM), DomainError);
    cell.fill_factor = 0.0;
    EXPECT_THROW(reflection(1e12, cell, 0.0, Polarization::TE), DomainError);
    cell.fill_factor = 1.0;
    cell.slab_thickness = 0.0;
    EXPECT_THROW(reflection(1e12, cell, 0.0, Polarization::TE), DomainError);
}
