#include "selection_rules.hpp"

#include <cmath>
#include <cstdio>

namespace nvmem {

namespace {

CouplingTable project(const GroundEigenSystem& ground, const ExcitedEigenSystem& excited,
                      bool* normalizer_ok) {
    CouplingTable t;
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 6; ++k) {
            c64 px{};
            c64 py{};
            for (int m = 0; m < 3; ++m) {
                const c64 gm = std::conj(ground.vectors[static_cast<size_t>(j)][static_cast<size_t>(m)]);
                px += gm * excited.vectors(3 + m, k);  // E,y orbital block
                py += gm * excited.vectors(m, k);      // E,x orbital block
            }
            t.g_x[static_cast<size_t>(j)][static_cast<size_t>(k)] = px;
            t.g_y[static_cast<size_t>(j)][static_cast<size_t>(k)] = py;
        }
    }
    t.norm_x = std::abs(t.g_x[1][5]);
    t.norm_y = std::abs(t.g_y[2][5]);
    const bool ok = (t.norm_x >= 1e-12 && t.norm_y >= 1e-12);
    if (normalizer_ok) *normalizer_ok = ok;
    if (ok) {
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 6; ++k) {
                t.ratio_x[static_cast<size_t>(j)][static_cast<size_t>(k)] =
                    std::abs(t.g_x[static_cast<size_t>(j)][static_cast<size_t>(k)]) / t.norm_x;
                t.ratio_y[static_cast<size_t>(j)][static_cast<size_t>(k)] =
                    std::abs(t.g_y[static_cast<size_t>(j)][static_cast<size_t>(k)]) / t.norm_y;
            }
    }
    return t;
}

}  // namespace

CouplingTable dipole_projections(const GroundEigenSystem& ground, const ExcitedEigenSystem& excited) {
    bool ok = true;
    CouplingTable t = project(ground, excited, &ok);
    if (!ok) throw ZeroNormalizerError();
    return t;
}

CouplingTable dipole_projections_raw(const GroundEigenSystem& ground,
                                     const ExcitedEigenSystem& excited, bool* normalizer_ok) {
    return project(ground, excited, normalizer_ok);
}

std::string table_csv(const std::array<std::array<double, 6>, 3>& ratio) {
    static const char* row_label[3] = {"0", "+", "-"};
    std::string out = "j,k4,k5,k6,k7,k8,k9\n";
    char buf[64];
    for (int j = 0; j < 3; ++j) {
        out += row_label[j];
        for (int k = 0; k < 6; ++k) {
            const double v = ratio[static_cast<size_t>(j)][static_cast<size_t>(k)];
            if (v < 1e-4) {
                out += ",<1e-4";
            } else {
                std::snprintf(buf, sizeof buf, ",%.4f", v);
                out += buf;
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace nvmem
