#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace nvmem {

struct ConfigParseError : std::runtime_error {
    ConfigParseError(const std::string& msg, int line, int column)
        : std::runtime_error("config parse error at " + std::to_string(line) + ":" +
                             std::to_string(column) + ": " + msg),
          line(line), column(column) {}
    int line;
    int column;
};

enum class RateConvention { two_pi, bare };

// Parse one SI-suffixed number, e.g. "40ns", "0.8GHz", "6.7mW", "120e9".
// Suffixes (case-sensitive): Hz kHz MHz GHz -> Hz; s ms us ns -> s;
// mW -> mW; G -> gauss; V/um -> V/um.
double parse_si_number(const std::string& text);

// Flat key = value run configuration. Values are stored in the canonical
// unit of each key (Hz, s, mW, ...). Instances are immutable after parse and
// safe to share across threads.
struct RunConfig {
    // physical constants
    double vacuum_permittivity = 8.8541878128e-12;  // F/m
    double reduced_planck = 1.054571817e-34;        // J*s
    double speed_of_light = 2.99792458e8;           // m/s
    double diamond_refractive_index = 2.4;
    double zpl_wavelength = 637e-9;                 // m
    double radiative_decay_gamma = 1.0 / 12e-9;     // s^-1, full radiative rate (12 ns lifetime)
    double zpl_branching = 0.035;

    // applied-field splittings, Hz
    double ex_es = 120e9;
    double ey_es = 0.0;
    double bz_es = 10e3;
    double ex_gs = 3.4e6;
    double ey_gs = 0.0;
    double bz_gs = 9.9e3;

    // cavity and ensemble
    double quality_factor = 1100.0;
    double mode_volume = 100.0;           // multiples of (lambda/n_d)^3
    double ensemble_size = 100.0;         // N
    double permittivity_relative = 1.0;   // epsilon = eps_r * eps0 in the cavity coupling

    // control field
    double rabi_per_sqrt_mw = 1e9;        // Hz per sqrt(mW)
    double power_storage_mw = 0.8;
    double power_retrieval_mw = 6.7;

    // run parameters
    double detuning = 0.8e9;              // Hz
    double gamma_e = 1e9;                 // Hz
    double gamma_s = 200e3;               // Hz
    double pulse_width = 40e-9;           // s, tau at 1/e of the field envelope
    double storage_delay = 200e-9;        // s, between control pulse centers
    double t_start = 0.0;                 // s
    double t_end = 0.0;                   // s; 0 -> auto (retrieval center + 6 tau)
    double dt = 0.0;                      // s; 0 -> auto from the step bound
    double two_photon_offset = 0.0;       // Hz, artificial offset for resonance scans
    double storage_time_limit = 0.6;      // s, for the time-bandwidth estimate
    int output_samples = 4096;            // target rows of the persisted time series

    RateConvention rate_convention = RateConvention::bare;
    bool include_lower_branch = true;
    bool include_control_noise_drive = false;
    bool include_spectator_coherences = true;

    // 2*pi for two_pi, 1 for bare; applied to every Hz-quoted rate used as
    // an angular frequency
    double angular_unit() const { return rate_convention == RateConvention::two_pi ? 6.283185307179586 : 1.0; }
};

// Parse `key = value` lines ('#' comments, blank lines allowed). Unknown keys
// are an error so typos cannot silently fall back to defaults.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

// Path resolution used by the CLI: explicit path if non-empty, else the
// NVMEM_CONFIG environment variable, else defaults only.
RunConfig resolve_config(const std::string& explicit_path);

// Canonical serialization (every key, canonical units, fixed order); parsing
// it back reproduces the same configuration.
std::string config_echo_text(const RunConfig& c);

// Numeric access by key name for parameter sweeps. Throws std::out_of_range
// for unknown keys.
void set_numeric_key(RunConfig& c, const std::string& key, double value);
double get_numeric_key(const RunConfig& c, const std::string& key);

}  // namespace nvmem
