#include "spin_hamiltonian.hpp"

#include <cmath>

namespace nvmem {

GroundEigenSystem ground_states(double ex_gs, double ey_gs, double bz_gs) {
    GroundEigenSystem g;
    const double e_perp = std::hypot(ex_gs, ey_gs);
    g.degenerate = (e_perp == 0.0 && bz_gs == 0.0);
    g.phi_e = (e_perp == 0.0) ? 0.0 : std::atan2(ey_gs, ex_gs);
    g.theta = g.degenerate ? 0.0 : std::atan2(e_perp, bz_gs);

    const double split = std::hypot(e_perp, bz_gs);
    g.energies = {0.0, split, -split};

    const c64 ep = std::exp(c64(0.0, g.phi_e / 2.0));
    const c64 em = std::exp(c64(0.0, -g.phi_e / 2.0));
    const double ch = std::cos(g.theta / 2.0);
    const double sh = std::sin(g.theta / 2.0);

    g.vectors[0] = {c64(1.0), c64(0.0), c64(0.0)};
    g.vectors[1] = {c64(0.0), ep * ch, -em * sh};
    g.vectors[2] = {c64(0.0), ep * sh, em * ch};
    return g;
}

CMat h_so_ss(const SpinSpinConstants& cst) {
    const double a = cst.d_2a1;
    const double b = cst.d_2e2 / std::sqrt(2.0);
    const double c = cst.d_2e1;
    const double l = cst.lambda_par;
    const c64 i(0.0, 1.0);

    CMat h(6);
    const c64 row[6][6] = {
        {-2 * a,  b,      -b,      0.0,    -i * b,  -i * b},
        {b,       a,       c,      i * b,   i * l,  -i * c},
        {-b,      c,       a,      i * b,   i * c,  -i * l},
        {0.0,    -i * b,  -i * b,  -2 * a, -b,       b},
        {i * b,  -i * l,  -i * c,  -b,      a,      -c},
        {i * b,   i * c,   i * l,   b,     -c,       a},
    };
    for (int r = 0; r < 6; ++r)
        for (int s = 0; s < 6; ++s) h(r, s) = row[r][s];
    return h;
}

CMat h_fields(double ex, double ey, double bz) {
    CMat h(6);
    h(0, 0) = -ex;
    h(1, 1) = -ex + bz;
    h(2, 2) = -ex - bz;
    h(3, 3) = ex;
    h(4, 4) = ex + bz;
    h(5, 5) = ex - bz;
    for (int m = 0; m < 3; ++m) {
        h(m, 3 + m) = ey;
        h(3 + m, m) = ey;
    }
    return h;
}

CMat excited_total(const SpinSpinConstants& c, const FieldSplittings& f) {
    return h_so_ss(c) + h_fields(f.ex_es, f.ey_es, f.bz_es);
}

ExcitedEigenSystem excited_eigensystem(const SpinSpinConstants& c, const FieldSplittings& f) {
    const EigenSystem es = eigh(excited_total(c, f));
    ExcitedEigenSystem out;
    for (int k = 0; k < 6; ++k) out.energies[static_cast<size_t>(k)] = es.eigenvalues[static_cast<size_t>(k)];
    out.vectors = es.eigenvectors;
    out.residual_norm = es.residual_norm;
    return out;
}

}  // namespace nvmem
