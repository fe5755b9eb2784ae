#include "pulse.hpp"

#include <complex>
#include <vector>

namespace nvmem {

double pulse_bandwidth_hz(const PulseShape& p) {
    // |F(w)|^2 of a Gaussian is Gaussian; scan outward from w = 0 for the
    // 1/e point of the spectral intensity and report the full width.
    const int nt = 4001;
    const double t0 = p.center - 6.0 * p.width;
    const double dt = 12.0 * p.width / (nt - 1);
    std::vector<double> env(nt);
    for (int i = 0; i < nt; ++i) env[static_cast<size_t>(i)] = p.amplitude(t0 + i * dt);

    auto spectral_intensity = [&](double w) {
        std::complex<double> f{};
        for (int i = 0; i < nt; ++i) {
            const double t = t0 + i * dt;
            const double weight = (i == 0 || i == nt - 1) ? 0.5 : 1.0;
            f += weight * env[static_cast<size_t>(i)] * std::exp(std::complex<double>(0.0, w * t));
        }
        return std::norm(f * dt);
    };

    const double peak = spectral_intensity(0.0);
    const double target = peak / 2.718281828459045;
    // bisect on w > 0
    double lo = 0.0;
    double hi = 2.0 / p.width;
    while (spectral_intensity(hi) > target) hi *= 2.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        (spectral_intensity(mid) > target ? lo : hi) = mid;
    }
    const double w_half = 0.5 * (lo + hi);
    constexpr double two_pi = 6.283185307179586;
    return 2.0 * w_half / two_pi;
}

}  // namespace nvmem
