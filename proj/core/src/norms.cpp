#include "dstorus/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace dst {

double hs_norm(const Spectrum& spec, double s) {
    const int nx = spec.grid.nx, ny = spec.grid.ny;
    const double L2 = spec.grid.L * spec.grid.L;
    double acc = 0.0;
    for (int i = 0; i < nx; ++i) {
        const double m = TorusGrid::freq_of_index(i, nx);
        for (int j = 0; j < ny; ++j) {
            const double n = TorusGrid::freq_of_index(j, ny);
            const double w = std::pow(1.0 + (m * m + n * n) / L2, s);
            acc += w * std::norm(spec.c[std::size_t(i) * ny + j]);
        }
    }
    return std::sqrt(acc);
}

double hs_seminorm(const Spectrum& spec, double s) {
    const int nx = spec.grid.nx, ny = spec.grid.ny;
    const double L2 = spec.grid.L * spec.grid.L;
    double acc = 0.0;
    for (int i = 0; i < nx; ++i) {
        const double m = TorusGrid::freq_of_index(i, nx);
        for (int j = 0; j < ny; ++j) {
            const double n = TorusGrid::freq_of_index(j, ny);
            if (m == 0.0 && n == 0.0) continue;
            acc += std::pow((m * m + n * n) / L2, s) * std::norm(spec.c[std::size_t(i) * ny + j]);
        }
    }
    return std::sqrt(acc);
}

double l2_norm(const Spectrum& spec) {
    double acc = 0.0;
    for (const cd& z : spec.c) acc += std::norm(z);
    return std::sqrt(acc);
}

double lp_norm(const Field& field, int p) {
    if (p != 2 && p != 4) throw std::invalid_argument("lp_norm: p must be 2 or 4");
    double acc = 0.0;
    for (const cd& z : field.v) {
        const double a2 = std::norm(z);
        acc += (p == 2) ? a2 : a2 * a2;
    }
    return std::pow(acc * field.grid.cell_weight(), 1.0 / p);
}

double linf_norm(const Field& field) {
    double m = 0.0;
    for (const cd& z : field.v) m = std::max(m, std::norm(z));
    return std::sqrt(m);
}

double tail_fraction(const Spectrum& spec, int kmax_x, int kmax_y) {
    const int nx = spec.grid.nx, ny = spec.grid.ny;
    if (kmax_x < 0) kmax_x = nx / 2 - 1;
    if (kmax_y < 0) kmax_y = ny / 2 - 1;
    const int lo_x = kmax_x / 2, lo_y = kmax_y / 2;
    double total = 0.0, tail = 0.0;
    for (int i = 0; i < nx; ++i) {
        const int m = std::abs(TorusGrid::freq_of_index(i, nx));
        for (int j = 0; j < ny; ++j) {
            const int n = std::abs(TorusGrid::freq_of_index(j, ny));
            const double a2 = std::norm(spec.c[std::size_t(i) * ny + j]);
            total += a2;
            const bool in_band = m <= kmax_x && n <= kmax_y;
            if (in_band && (m > lo_x || n > lo_y)) tail += a2;
        }
    }
    if (total == 0.0) return 0.0;
    return tail / total;
}

}  // namespace dst
