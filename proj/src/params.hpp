#pragma once

#include <complex>
#include <functional>

#include "config.hpp"
#include "smallmat.hpp"

namespace nvmem {

inline constexpr double kTwoPi = 6.283185307179586;

struct PhysicalConstants {
    double vacuum_permittivity;
    double reduced_planck;
    double speed_of_light;
    double diamond_refractive_index;
    double zpl_wavelength;
    double radiative_decay_gamma;  // s^-1, full radiative rate
    double zpl_branching;

    // optical transition angular frequency, rad/s
    double omega0() const { return kTwoPi * speed_of_light / zpl_wavelength; }
};

struct CavityParams {
    double quality_factor;
    double mode_volume_rel;  // multiples of (lambda/n_d)^3
    double kappa;            // s^-1 amplitude decay (carries the rate convention)
    double ensemble_size;
};

struct ControlParams {
    double rabi_per_sqrt_mw;  // s^-1 per sqrt(mW) (carries the rate convention)
    double power_storage_mw;
    double power_retrieval_mw;
    // optional extra phase applied multiplicatively to the control as e^{i phi(t)}
    std::function<double(double)> phase_modulation;
};

PhysicalConstants make_physical_constants(const RunConfig& c);
CavityParams make_cavity_params(const RunConfig& c);
ControlParams make_control_params(const RunConfig& c);

// Zero-phonon-line transition dipole moment, C*m.
double derive_dipole_moment(const PhysicalConstants& pc);

// Single-emitter cavity coupling for one dipole projection g, s^-1. The
// permittivity entering the vacuum field amplitude is eps_r * eps0 with eps_r
// from the configuration.
c64 derive_cavity_coupling(const PhysicalConstants& pc, const CavityParams& cav, c64 g,
                           double permittivity_relative);

// Peak control Rabi amplitude for one dipole projection g at the given power.
c64 derive_control_rabi(const ControlParams& ctl, c64 g, double power_mw);

}  // namespace nvmem
