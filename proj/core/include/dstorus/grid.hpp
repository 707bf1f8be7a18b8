#ifndef DSTORUS_GRID_HPP
#define DSTORUS_GRID_HPP

#include <cmath>

namespace dst {

// Uniform collocation grid on the square torus of period 2*pi*L per axis.
// Frequencies are integer lattice points m in [-nx/2, nx/2), n in [-ny/2, ny/2),
// with the Nyquist row assigned to the negative side.
struct TorusGrid {
    double L = 1.0;  // scale parameter; physical period is 2*pi*L
    int nx = 0;
    int ny = 0;

    double period() const { return 2.0 * M_PI * L; }
    double dx() const { return period() / nx; }
    double dy() const { return period() / ny; }
    double x(int j) const { return period() * j / nx; }
    double y(int k) const { return period() * k / ny; }
    // Quadrature weight of one cell; makes the discrete L2 product Plancherel-consistent.
    double cell_weight() const { return period() * period() / (double(nx) * double(ny)); }
    long size() const { return long(nx) * long(ny); }

    // Storage index <-> signed frequency maps (FFTW ordering).
    static int freq_of_index(int i, int n) { return i < n - n / 2 ? i : i - n; }
    static int index_of_freq(int m, int n) { return m >= 0 ? m : m + n; }

    bool operator==(const TorusGrid&) const = default;
};

// Validates and builds a grid. Throws std::invalid_argument on bad parameters.
TorusGrid make_grid(double L, int nx, int ny);

}  // namespace dst

#endif
