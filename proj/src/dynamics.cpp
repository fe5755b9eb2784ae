#include "dynamics.hpp"

#include <cmath>

namespace nvmem {

namespace {

constexpr int kLow[3] = {4, 5, 6};  // lower-branch labels

bool lower_branch(int k) { return k <= 6; }

}  // namespace

c64 DynamicalSystem::omega_at(int j, int k, double t) const {
    const double es = control_storage.envelope(t);
    const double er = control_retrieval.envelope(t);
    c64 v = omega_storage[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 4)] * es +
            omega_retrieval[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 4)] * er;
    if (phase_modulation) v *= std::exp(c64(0.0, phase_modulation(t)));
    return v;
}

DynamicalSystem build_system(const RunConfig& config, const CouplingTable& couplings,
                             const GroundEigenSystem& ground, const ExcitedEigenSystem& excited) {
    const double u = config.angular_unit();
    const PhysicalConstants pc = make_physical_constants(config);
    const CavityParams cav = make_cavity_params(config);
    const ControlParams ctl = make_control_params(config);

    DynamicalSystem sys;
    sys.delta_g = u * (ground.energies[1] - ground.energies[2]);
    sys.delta_offset = u * config.two_photon_offset;
    sys.gamma = config.radiative_decay_gamma;
    sys.gamma_e = u * config.gamma_e;
    sys.gamma_s = u * config.gamma_s;
    sys.kappa = cav.kappa;
    sys.ensemble_size = cav.ensemble_size;
    sys.include_lower_branch = config.include_lower_branch;
    sys.include_noise_drive = config.include_control_noise_drive;
    sys.include_spectators = config.include_spectator_coherences;
    sys.phase_modulation = ctl.phase_modulation;

    if (std::abs(sys.delta_g) > sys.kappa) throw InvalidFrameError();

    const double e9 = excited.energies[5];
    for (int j = 1; j <= 3; ++j) {
        for (int k = 4; k <= 9; ++k) {
            // Delta_{2,k} = -u Delta + u (e9 - ek); the |0> frame is shifted by
            // the |0>..|+> energy difference and the |-> frame (omega_2 =
            // omega_c - delta_g) by twice the two-photon offset.
            double d = -u * config.detuning + u * (e9 - excited.energies[static_cast<size_t>(k - 4)]);
            if (j == 1) d -= u * (ground.energies[1] - ground.energies[0]);
            if (j == 3) d -= 2.0 * sys.delta_g;
            sys.detunings[static_cast<size_t>(j - 1)][static_cast<size_t>(k - 4)] = d;
        }
    }

    const double sqrt_n = std::sqrt(cav.ensemble_size);
    const double sp = std::sqrt(ctl.power_storage_mw);
    const double rp = std::sqrt(ctl.power_retrieval_mw);
    for (int j = 1; j <= 3; ++j) {
        for (int k = 4; k <= 9; ++k) {
            const bool active = config.include_lower_branch || !lower_branch(k);
            const size_t jj = static_cast<size_t>(j - 1);
            const size_t kk = static_cast<size_t>(k - 4);
            if (!active) {
                sys.g_collective[jj][kk] = 0.0;
                sys.omega_storage[jj][kk] = 0.0;
                sys.omega_retrieval[jj][kk] = 0.0;
                continue;
            }
            // couplings normalized by the signal and control working
            // transitions: g_x / |g_x(+,9)|, g_y / |g_y(-,9)|
            const c64 gxn = couplings.g_x[jj][kk] / couplings.norm_x;
            const c64 gyn = couplings.g_y[jj][kk] / couplings.norm_y;
            sys.g_collective[jj][kk] =
                sqrt_n * derive_cavity_coupling(pc, cav, gxn, config.permittivity_relative);
            sys.omega_storage[jj][kk] = derive_control_rabi(ctl, gyn, ctl.power_storage_mw);
            sys.omega_retrieval[jj][kk] = derive_control_rabi(ctl, gyn, ctl.power_retrieval_mw);
        }
    }

    const double tau = config.pulse_width;
    const double t_store = config.t_start + 6.0 * tau;
    const double t_retr = t_store + config.storage_delay;
    sys.input = gaussian_pulse(tau, t_store);
    sys.control_storage = gaussian_pulse(tau, t_store);
    sys.control_retrieval = gaussian_pulse(tau, t_retr);

    // stability bound over coupled components only
    double scale = sys.gamma / 2.0 + sys.gamma_e;
    double g2sum = 0.0;
    for (int k = 4; k <= 9; ++k) {
        const size_t kk = static_cast<size_t>(k - 4);
        bool coupled = false;
        for (int j = 1; j <= 3; ++j) {
            const size_t jj = static_cast<size_t>(j - 1);
            if (std::abs(sys.g_collective[jj][kk]) > 0.0 ||
                std::abs(sys.omega_storage[jj][kk]) > 0.0 ||
                std::abs(sys.omega_retrieval[jj][kk]) > 0.0)
                coupled = true;
        }
        if (!coupled) continue;
        for (int j = 1; j <= 3; ++j) {
            const size_t jj = static_cast<size_t>(j - 1);
            scale = std::max(scale, std::abs(sys.detunings[jj][kk]));
            scale = std::max(scale, std::abs(sys.omega_storage[jj][kk]));
            scale = std::max(scale, std::abs(sys.omega_retrieval[jj][kk]));
        }
        g2sum += std::norm(sys.g_collective[1][kk]);
        if (sys.include_noise_drive) {
            const double drive = std::max(std::abs(sys.omega_storage[1][kk]),
                                          std::abs(sys.omega_retrieval[1][kk])) *
                                 std::sqrt(cav.ensemble_size);
            scale = std::max(scale, drive);
        }
    }
    scale = std::max(scale, g2sum / sys.kappa);  // collective cavity damping
    scale = std::max(scale, std::abs(sys.delta_g));
    scale = std::max(scale, std::abs(sys.delta_offset));
    sys.stability_scale = scale;
    return sys;
}

DynamicalSystem build_system(const RunConfig& config) {
    const GroundEigenSystem ground = ground_states(config.ex_gs, config.ey_gs, config.bz_gs);
    const FieldSplittings f{config.ex_es, config.ey_es, config.bz_es,
                            config.ex_gs, config.ey_gs, config.bz_gs};
    const ExcitedEigenSystem excited = excited_eigensystem(SpinSpinConstants{}, f);
    const CouplingTable table = dipole_projections(ground, excited);
    return build_system(config, table, ground, excited);
}

c64 cavity_field(const StateVector& s, c64 e_in, const DynamicalSystem& sys, double t) {
    c64 pol{};
    for (int k = 4; k <= 9; ++k) {
        const size_t kk = static_cast<size_t>(k - 4);
        pol += std::conj(sys.g_collective[0][kk]) * s.a[kk];           // sigma_1k
        pol += std::conj(sys.g_collective[1][kk]) * s.a[6 + kk];       // sigma_2k
    }
    c64 pol3{};
    for (int k = 4; k <= 9; ++k) {
        const size_t kk = static_cast<size_t>(k - 4);
        pol3 += std::conj(sys.g_collective[2][kk]) * s.a[12 + kk];     // sigma_3k
    }
    const c64 i(0.0, 1.0);
    const c64 rot = std::exp(c64(0.0, -sys.delta_g * t));
    return (std::sqrt(2.0 * sys.kappa) * e_in + i * pol + i * pol3 * rot) / sys.kappa;
}

StateVector derivative(const StateVector& s, double t, const DynamicalSystem& sys, c64 e_in_t) {
    StateVector d;
    d.t = 1.0;
    const c64 i(0.0, 1.0);
    const double damp_opt = 0.5 * sys.gamma + sys.gamma_e;
    const c64 e = cavity_field(s, e_in_t, sys, t);
    const c64 noise_rot = std::exp(c64(0.0, -sys.delta_g * t));
    const double sqrt_n = std::sqrt(sys.ensemble_size);

    double env_s = sys.control_storage.envelope(t);
    double env_r = sys.control_retrieval.envelope(t);
    c64 mod(1.0, 0.0);
    if (sys.phase_modulation) mod = std::exp(c64(0.0, sys.phase_modulation(t)));

    c64 spin_pump{};
    for (int k = 4; k <= 9; ++k) {
        const size_t kk = static_cast<size_t>(k - 4);
        const c64 om3 = (sys.omega_storage[2][kk] * env_s + sys.omega_retrieval[2][kk] * env_r) * mod;

        // optical coherence from |+>, the driven manifold
        c64 ds2 = (i * sys.detunings[1][kk] - damp_opt) * s.a[6 + kk];
        ds2 += i * sys.g_collective[1][kk] * e;
        ds2 += i * om3 * s.a[18];
        if (sys.include_noise_drive) {
            const c64 om2 = (sys.omega_storage[1][kk] * env_s + sys.omega_retrieval[1][kk] * env_r) * mod;
            ds2 += i * om2 * sqrt_n * noise_rot;
        }
        d.a[6 + kk] = ds2;

        spin_pump += std::conj(om3) * s.a[6 + kk];

        if (sys.include_spectators) {
            d.a[kk] = (i * sys.detunings[0][kk] - damp_opt) * s.a[kk];
            d.a[12 + kk] = (i * sys.detunings[2][kk] - damp_opt) * s.a[12 + kk];
        }
    }
    d.a[18] = (i * sys.delta_offset - sys.gamma_s) * s.a[18] + i * spin_pump;
    return d;
}

namespace {

void rk4_step(StateVector& y, double t, double dt, const DynamicalSystem& sys, bool with_input) {
    auto ein = [&](double tt) -> c64 { return with_input ? c64(sys.input.amplitude(tt)) : c64(0.0); };
    const StateVector k1 = derivative(y, t, sys, ein(t));
    StateVector y2;
    for (int i = 0; i < 19; ++i) y2.a[static_cast<size_t>(i)] = y.a[static_cast<size_t>(i)] + 0.5 * dt * k1.a[static_cast<size_t>(i)];
    const StateVector k2 = derivative(y2, t + 0.5 * dt, sys, ein(t + 0.5 * dt));
    for (int i = 0; i < 19; ++i) y2.a[static_cast<size_t>(i)] = y.a[static_cast<size_t>(i)] + 0.5 * dt * k2.a[static_cast<size_t>(i)];
    const StateVector k3 = derivative(y2, t + 0.5 * dt, sys, ein(t + 0.5 * dt));
    for (int i = 0; i < 19; ++i) y2.a[static_cast<size_t>(i)] = y.a[static_cast<size_t>(i)] + dt * k3.a[static_cast<size_t>(i)];
    const StateVector k4 = derivative(y2, t + dt, sys, ein(t + dt));
    for (int i = 0; i < 19; ++i)
        y.a[static_cast<size_t>(i)] += dt / 6.0 *
            (k1.a[static_cast<size_t>(i)] + 2.0 * k2.a[static_cast<size_t>(i)] + 2.0 * k3.a[static_cast<size_t>(i)] + k4.a[static_cast<size_t>(i)]);
}

}  // namespace

TimeGrid default_grid(const RunConfig& config, const DynamicalSystem& sys) {
    TimeGrid g;
    g.t_start = config.t_start;
    const double tau = config.pulse_width;
    g.t_end = (config.t_end > config.t_start)
                  ? config.t_end
                  : sys.control_retrieval.center + 6.0 * tau;
    g.dt = (config.dt > 0.0) ? config.dt : 0.02 / sys.stability_scale;
    g.samples = config.output_samples;
    return g;
}

SimulationResult integrate(const DynamicalSystem& sys, bool with_input, const StateVector& initial,
                           const TimeGrid& grid) {
    const double bound = 0.02 / sys.stability_scale;
    if (grid.dt > bound * (1.0 + 1e-12)) throw StepTooLargeError(grid.dt, bound);
    if (!(grid.dt > 0.0) || !(grid.t_end > grid.t_start)) throw std::invalid_argument("bad time grid");

    SimulationResult res;
    res.dt_used = grid.dt;
    res.window_split = 0.5 * (sys.control_storage.center + sys.control_retrieval.center);

    // analytic bridge across an idle hold interval, if one exists
    const double tau = sys.control_storage.width;
    const double hold_from = sys.control_storage.center + 6.0 * tau;
    const double hold_to = sys.control_retrieval.center - 6.0 * tau;
    const bool has_gap = hold_to - hold_from > 0.0;

    const double span = grid.t_end - grid.t_start;
    const double sample_dt = span / std::max(1, grid.samples - 1);
    double next_sample = grid.t_start;

    StateVector y = initial;
    double t = grid.t_start;
    long guard = 0;

    auto emit = [&](double tt, c64 ein) {
        const c64 e = cavity_field(y, ein, sys, tt);
        res.t.push_back(tt);
        res.e_in.push_back(ein);
        res.e_cav.push_back(e);
        res.e_out.push_back(-ein + std::sqrt(2.0 * sys.kappa) * e);
        res.sigma23.push_back(y.a[18]);
    };

    while (t < grid.t_end - 0.5 * grid.dt) {
        const c64 ein = with_input ? c64(sys.input.amplitude(t)) : c64(0.0);
        if (t >= next_sample) {
            emit(t, ein);
            while (next_sample <= t) next_sample += sample_dt;
        }

        if (has_gap && t >= hold_from && t < hold_to) {
            // spin coherence decays analytically; optical coherences have
            // relaxed at gamma/2 + gamma_e and are dropped
            double step = hold_to - t;
            double sampled_until = t;
            while (next_sample < hold_to) {
                // keep emitting through the gap so the series stays uniform
                const double dtg = next_sample - sampled_until;
                y.a[18] *= std::exp(c64(-sys.gamma_s * dtg, sys.delta_offset * dtg));
                for (int i = 0; i < 18; ++i) y.a[static_cast<size_t>(i)] = 0.0;
                sampled_until = next_sample;
                emit(next_sample, c64(0.0));
                next_sample += sample_dt;
            }
            const double dtg = hold_to - sampled_until;
            y.a[18] *= std::exp(c64(-sys.gamma_s * dtg, sys.delta_offset * dtg));
            for (int i = 0; i < 18; ++i) y.a[static_cast<size_t>(i)] = 0.0;
            t = hold_to;
            res.steps += 1;
            (void)step;
            continue;
        }

        rk4_step(y, t, grid.dt, sys, with_input);
        t += grid.dt;
        res.steps += 1;

        for (int k = 0; k < 6; ++k) {
            res.max_spectator1 = std::max(res.max_spectator1, std::abs(y.a[static_cast<size_t>(k)]));
            res.max_spectator3 = std::max(res.max_spectator3, std::abs(y.a[static_cast<size_t>(12 + k)]));
        }
        if (++guard % 4096 == 0) {
            for (const c64& v : y.a)
                if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(v) > 1e12)
                    throw NonFiniteStateError();
        }
    }
    emit(grid.t_end, with_input ? c64(sys.input.amplitude(grid.t_end)) : c64(0.0));
    for (const c64& v : y.a)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(v) > 1e12)
            throw NonFiniteStateError();
    return res;
}

ProtocolResult simulate_protocol(const RunConfig& config) {
    ProtocolResult out;

    RunConfig sig_cfg = config;
    sig_cfg.include_control_noise_drive = false;
    const DynamicalSystem sig_sys = build_system(sig_cfg);
    out.signal = integrate(sig_sys, true, StateVector{}, default_grid(sig_cfg, sig_sys));

    RunConfig noi_cfg = config;
    noi_cfg.include_control_noise_drive = true;
    const DynamicalSystem noi_sys = build_system(noi_cfg);
    out.noise = integrate(noi_sys, false, StateVector{}, default_grid(noi_cfg, noi_sys));
    return out;
}

}  // namespace nvmem
