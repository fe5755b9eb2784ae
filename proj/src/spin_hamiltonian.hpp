#pragma once

#include <array>

#include "eigensolver.hpp"
#include "smallmat.hpp"

namespace nvmem {

// Applied-field energy shifts, all in Hz. Negative values encode reversed
// field direction; zeros are allowed.
struct FieldSplittings {
    double ex_es = 0.0;
    double ey_es = 0.0;
    double bz_es = 0.0;
    double ex_gs = 0.0;
    double ey_gs = 0.0;
    double bz_gs = 0.0;
};

// Spin-spin and spin-orbit constants of the excited-state manifold, Hz.
struct SpinSpinConstants {
    double d_2a1 = 1.42e9 / 3.0;
    double d_2e2 = 0.2e9 / 1.4142135623730951;
    double d_2e1 = 1.55e9 / 2.0;
    double lambda_par = 5.3e9;
};

// Ground-manifold eigensystem in the ordered spin basis {|1,0>, |1,1>, |1,-1>}.
// Columns of `vectors` are |0>, |+>, |-> in that order; energies follow the
// same order with e2 >= e3 (|+> is assigned the upper level).
struct GroundEigenSystem {
    double theta = 0.0;   // rad
    double phi_e = 0.0;   // rad
    std::array<double, 3> energies{};          // Hz
    std::array<std::array<c64, 3>, 3> vectors{};  // vectors[j][m]
    bool degenerate = false;  // E_perp = B_z = 0, theta fixed to 0 by convention
};

GroundEigenSystem ground_states(double ex_gs, double ey_gs, double bz_gs);

// 6x6 excited-manifold Hamiltonians in the ordered configuration basis
// {E,x;1,0  E,x;1,1  E,x;1,-1  E,y;1,0  E,y;1,1  E,y;1,-1}, entries in Hz.
CMat h_so_ss(const SpinSpinConstants& c);
CMat h_fields(double ex_es, double ey_es, double bz_es);
CMat excited_total(const SpinSpinConstants& c, const FieldSplittings& f);

// Diagonalized excited manifold. Levels are relabelled k = 4..9 ascending;
// energies[k-4] and column k-4 of `vectors` belong to level k.
struct ExcitedEigenSystem {
    std::array<double, 6> energies{};  // Hz, ascending
    CMat vectors;                      // 6x6, columns are eigenstates
    double residual_norm = 0.0;
};

ExcitedEigenSystem excited_eigensystem(const SpinSpinConstants& c, const FieldSplittings& f);

}  // namespace nvmem
