#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "config.hpp"
#include "params.hpp"
#include "pulse.hpp"
#include "selection_rules.hpp"
#include "spin_hamiltonian.hpp"

namespace nvmem {

struct InvalidFrameError : std::runtime_error {
    InvalidFrameError()
        : std::runtime_error("two-photon offset exceeds the cavity linewidth; "
                             "adiabatic elimination is not valid") {}
};

struct StepTooLargeError : std::runtime_error {
    explicit StepTooLargeError(double dt, double bound)
        : std::runtime_error("dt = " + std::to_string(dt) + " s exceeds the stability bound " +
                             std::to_string(bound) + " s") {}
};

struct NonFiniteStateError : std::runtime_error {
    NonFiniteStateError()
        : std::runtime_error("state amplitude exceeded 1e12; check sign conventions and units") {}
};

// Single-excitation amplitudes of the collective operators, sqrt(N)-normalized
// so that |sigma23|^2 is the stored excitation probability. Layout:
// sigma_1k k=4..9 -> [0..5], sigma_2k -> [6..11], sigma_3k -> [12..17],
// sigma_23 -> [18].
struct StateVector {
    std::array<c64, 19> a{};
    double t = 0.0;

    c64& sigma1(int k) { return a[static_cast<size_t>(k - 4)]; }
    c64& sigma2(int k) { return a[static_cast<size_t>(6 + k - 4)]; }
    c64& sigma3(int k) { return a[static_cast<size_t>(12 + k - 4)]; }
    c64& sigma23() { return a[18]; }
    const c64& sigma2(int k) const { return a[static_cast<size_t>(6 + k - 4)]; }
    const c64& sigma23() const { return a[18]; }
};

// Rotating-frame system built from the eigensystems and coupling table.
//
// Frames: the optical coherences toward |0> and |+> rotate with the cavity,
// those toward |-> with the control; delta_g = u (e2 - e3) is the two-photon
// frame offset, with u the angular unit of the rate convention. The cavity is
// placed below the k=9 transition by the configured detuning, so
// Delta_{2,9} = -u Delta and Delta_{2,k} = -u Delta + u (e9 - ek).
//
// Collective scaling: couplings are stored sqrt(N)-symmetrized. The cavity
// sources carry G sqrt(N), the control noise drive carries Omega sqrt(N), and
// the Raman exchange between sigma_2k and sigma_23 carries bare Omega. This
// one convention is applied everywhere (field equation, derivative, output).
struct DynamicalSystem {
    // detunings[j-1][k-4], s^-1
    std::array<std::array<double, 6>, 3> detunings{};
    // sqrt(N) G(j,k), s^-1; x-polarization couplings normalized by |g_x(+,9)|
    std::array<std::array<c64, 6>, 3> g_collective{};
    // Omega(j,k) per unit envelope at storage/retrieval power, s^-1;
    // y-polarization couplings normalized by |g_y(-,9)|
    std::array<std::array<c64, 6>, 3> omega_storage{};
    std::array<std::array<c64, 6>, 3> omega_retrieval{};

    double delta_g = 0.0;       // s^-1, two-photon frame offset u (e2 - e3)
    double delta_offset = 0.0;  // s^-1, artificial two-photon offset
    double gamma = 0.0;         // s^-1, radiative decay (optical damping gamma/2)
    double gamma_e = 0.0;       // s^-1
    double gamma_s = 0.0;       // s^-1
    double kappa = 0.0;         // s^-1
    double ensemble_size = 0.0;

    PulseShape input;            // signal pulse (storage center)
    PulseShape control_storage;  // same envelope, storage center
    PulseShape control_retrieval;
    std::function<double(double)> phase_modulation;  // optional, on the control

    bool include_lower_branch = true;
    bool include_noise_drive = false;
    bool include_spectators = true;

    double stability_scale = 0.0;  // max coupled rate, used for the dt bound

    // control amplitude matrix element at time t (storage + retrieval pulses)
    c64 omega_at(int j, int k, double t) const;
};

DynamicalSystem build_system(const RunConfig& config, const CouplingTable& couplings,
                             const GroundEigenSystem& ground, const ExcitedEigenSystem& excited);

// convenience: eigensystems + couplings + system straight from a config
DynamicalSystem build_system(const RunConfig& config);

// Instantaneous cavity amplitude from the adiabatically eliminated field
// equation.
c64 cavity_field(const StateVector& s, c64 e_in, const DynamicalSystem& sys, double t);

// Right-hand side of the linearized equations of motion.
StateVector derivative(const StateVector& s, double t, const DynamicalSystem& sys, c64 e_in_t);

struct SimulationResult {
    std::vector<double> t;
    std::vector<c64> e_in;
    std::vector<c64> e_cav;
    std::vector<c64> e_out;
    std::vector<c64> sigma23;

    double window_split = 0.0;   // storage|retrieval boundary, s
    double dt_used = 0.0;
    long steps = 0;
    double max_spectator1 = 0.0;  // max_t max_k |sigma_1k|
    double max_spectator3 = 0.0;
    double dt_convergence_delta = -1.0;  // filled by the halving check; <0 = not run
};

struct TimeGrid {
    double t_start = 0.0;
    double t_end = 0.0;
    double dt = 0.0;       // integration step; 0 -> 0.02 / stability_scale
    int samples = 4096;    // target persisted rows
};

// Fixed-step RK4 over the grid. E_in is the system's input pulse when
// `with_input`, zero otherwise. When the two control pulses are separated by
// more than the truncated envelopes, the idle interval is bridged
// analytically: sigma23 picks up exp((i delta_offset - gamma_s) dt_gap) and
// the decayed optical coherences are zeroed.
SimulationResult integrate(const DynamicalSystem& sys, bool with_input, const StateVector& initial,
                           const TimeGrid& grid);

TimeGrid default_grid(const RunConfig& config, const DynamicalSystem& sys);

struct ProtocolResult {
    SimulationResult signal;
    SimulationResult noise;
};

// Storage -> hold -> retrieval, then the same controls with no input and the
// control noise drive enabled.
ProtocolResult simulate_protocol(const RunConfig& config);

}  // namespace nvmem
