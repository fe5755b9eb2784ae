#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "spin_hamiltonian.hpp"

namespace nvmem {

struct ZeroNormalizerError : std::runtime_error {
    ZeroNormalizerError()
        : std::runtime_error("normalizing coupling below 1e-12, ratio tables undefined") {}
};

// Dipole projections between the three ground eigenstates (rows j = 1..3 for
// |0>, |+>, |->) and the six excited eigenstates (columns k = 4..9).
//
// ratio_x is normalized by |g_x(+,9)| and ratio_y by |g_y(-,9)|, so
// ratio_x(2,9) = ratio_y(3,9) = 1 by construction.
struct CouplingTable {
    std::array<std::array<c64, 6>, 3> g_x{};
    std::array<std::array<c64, 6>, 3> g_y{};
    std::array<std::array<double, 6>, 3> ratio_x{};
    std::array<std::array<double, 6>, 3> ratio_y{};
    double norm_x = 0.0;  // |g_x(+,9)|
    double norm_y = 0.0;  // |g_y(-,9)|
};

// The ground orbital has A2 symmetry, so an x-polarized dipole connects it to
// the E,y orbital branch and a y-polarized dipole to the E,x branch; both
// preserve the spin projection. g_x(j,k) therefore sums the excited
// eigenvector's E,y-block components against the ground spin amplitudes, and
// g_y(j,k) the E,x block.
//
// Throws ZeroNormalizerError if either normalizer is below 1e-12; the raw g
// matrices in the returned table are still valid in that case (the error
// carries no table, so callers wanting the raw values should use
// dipole_projections_raw).
CouplingTable dipole_projections(const GroundEigenSystem& ground, const ExcitedEigenSystem& excited);

// Same as above but never throws: ratios are left zero when a normalizer
// vanishes and *normalizer_ok reports the condition.
CouplingTable dipole_projections_raw(const GroundEigenSystem& ground,
                                     const ExcitedEigenSystem& excited, bool* normalizer_ok);

// CSV rendering of one ratio table: header row k4..k9, rows labelled 0,+,-,
// 4 decimal places, entries below 1e-4 written as the sentinel "<1e-4".
std::string table_csv(const std::array<std::array<double, 6>, 3>& ratio);

}  // namespace nvmem
