#pragma once

// Electrostatic gate chain: oxide stack -> C_ox -> carrier density ->
// chemical potential, mu_c = hbar vf sqrt(pi C_ox V_g / e).

#include <cmath>
#include <optional>

#include "thzkit/errors.hpp"
#include "thzkit/quantities.hpp"

namespace thzkit {

class GateStack {
public:
    static GateStack from_oxide(double thickness, double rel_permittivity, double vf = 1.0e6) {
        detail::require(thickness > 0.0, "oxide thickness must be positive");
        detail::require(rel_permittivity > 0.0, "oxide permittivity must be positive");
        return GateStack(constants::eps0 * rel_permittivity / thickness, vf, thickness, rel_permittivity);
    }

    /// Stack known only through its capacitance; oxide_field() is unavailable.
    static GateStack from_capacitance(double cox, double vf = 1.0e6) {
        return GateStack(cox, vf, std::nullopt, std::nullopt);
    }

    /// Capacitance and permittivity given, thickness derived as eps0 eps_r / cox.
    static GateStack from_capacitance(double cox, double rel_permittivity, double vf) {
        detail::require(rel_permittivity > 0.0, "oxide permittivity must be positive");
        return GateStack(cox, vf, constants::eps0 * rel_permittivity / cox, rel_permittivity);
    }

    double cox() const { return cox_; }
    double vf() const { return vf_; }
    std::optional<double> oxide_thickness() const { return thickness_; }
    std::optional<double> oxide_rel_permittivity() const { return eps_r_; }

private:
    GateStack(double cox, double vf, std::optional<double> t, std::optional<double> eps_r)
        : cox_(cox), vf_(vf), thickness_(t), eps_r_(eps_r) {
        detail::require(cox_ > 0.0, "gate capacitance must be positive");
        detail::require(vf_ > 0.0, "Fermi velocity must be positive");
    }

    double cox_;
    double vf_;
    std::optional<double> thickness_;
    std::optional<double> eps_r_;
};

/// C_ox = n e / V_g from the reference bias point
/// (7.6 V -> 6.7e12 cm^-2), SiO2 (eps_r 3.9), hence t ~ 24.4 nm.
inline constexpr double kTable2Cox = 1.414e-3;

inline GateStack table2_stack(double vf = 1.0e6) {
    return GateStack::from_capacitance(kTable2Cox, 3.9, vf);
}

struct GateOperatingPoint {
    double vg;       // V
    double n;        // m^-2
    double e_field;  // V/m, NaN when the stack has no thickness
    double mu_c;     // J
};

inline double carrier_density(double vg, const GateStack& stack) {
    if (vg < 0.0) throw DomainError("negative gate voltage (hole doping) is not modeled");
    return stack.cox() * vg / constants::e;
}

inline double chemical_potential_from_gate(double vg, const GateStack& stack) {
    const double n = carrier_density(vg, stack);
    return constants::hbar * stack.vf() * std::sqrt(constants::pi * n);
}

inline double gate_voltage_for_mu(double mu_c, const GateStack& stack) {
    detail::require(mu_c >= 0.0, "chemical potential must be nonnegative");
    const double hv = constants::hbar * stack.vf();
    return constants::e * mu_c * mu_c / (constants::pi * stack.cox() * hv * hv);
}

inline double oxide_field(double vg, const GateStack& stack) {
    const auto t = stack.oxide_thickness();
    if (!t) throw MissingGeometryError("gate stack has no oxide thickness");
    return vg / *t;
}

inline GateOperatingPoint operating_point(double vg, const GateStack& stack) {
    const double field = stack.oxide_thickness() ? oxide_field(vg, stack) : std::nan("");
    return {vg, carrier_density(vg, stack), field, chemical_potential_from_gate(vg, stack)};
}

}  // namespace thzkit
