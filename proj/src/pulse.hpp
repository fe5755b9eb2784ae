#pragma once

#include <cmath>

namespace nvmem {

// Unit-L2-norm Gaussian field envelope
//   E(t) = (2/(pi tau^2))^(1/4) exp(-(t-t0)^2 / tau^2),
// truncated to |t - t0| < 6 tau. tau is the 1/e half width of the field
// envelope (the intensity falls to 1/e^2 there).
struct PulseShape {
    double center;  // t0, s
    double width;   // tau, s

    double amplitude(double t) const {
        const double x = (t - center) / width;
        if (std::abs(x) >= 6.0) return 0.0;
        constexpr double pi = 3.141592653589793;
        return std::pow(2.0 / (pi * width * width), 0.25) * std::exp(-x * x);
    }

    // normalized envelope (peak 1), same truncation; used for control pulses
    double envelope(double t) const {
        const double x = (t - center) / width;
        if (std::abs(x) >= 6.0) return 0.0;
        return std::exp(-x * x);
    }
};

inline PulseShape gaussian_pulse(double tau, double t0) { return PulseShape{t0, tau}; }

// Spectral intensity 1/e full width of the envelope in Hz, from a numerical
// Fourier transform on [t0 - 6 tau, t0 + 6 tau].
double pulse_bandwidth_hz(const PulseShape& p);

}  // namespace nvmem
