#ifndef DSTORUS_FIELD_HPP
#define DSTORUS_FIELD_HPP

#include <complex>
#include <vector>

#include "dstorus/grid.hpp"

namespace dst {

using cd = std::complex<double>;

// Physical-space state: values u(x_j, y_k), row-major (x index slow).
struct Field {
    TorusGrid grid;
    std::vector<cd> v;

    Field() = default;
    explicit Field(const TorusGrid& g) : grid(g), v(g.size(), cd(0.0, 0.0)) {}

    cd& at(int j, int k) { return v[std::size_t(j) * grid.ny + k]; }
    const cd& at(int j, int k) const { return v[std::size_t(j) * grid.ny + k]; }
};

// Coefficient-space state against the orthonormal basis
//   e_{m,n}(x,y) = (2 pi L)^{-1} exp(i m x / L + i n y / L),
// so that sum |c(m,n)|^2 equals the squared L2 norm of the field.
// Storage follows FFTW ordering; use c_at(m,n) for signed frequencies.
struct Spectrum {
    TorusGrid grid;
    std::vector<cd> c;

    Spectrum() = default;
    explicit Spectrum(const TorusGrid& g) : grid(g), c(g.size(), cd(0.0, 0.0)) {}

    cd& c_at(int m, int n) {
        return c[std::size_t(TorusGrid::index_of_freq(m, grid.nx)) * grid.ny +
                 TorusGrid::index_of_freq(n, grid.ny)];
    }
    const cd& c_at(int m, int n) const {
        return c[std::size_t(TorusGrid::index_of_freq(m, grid.nx)) * grid.ny +
                 TorusGrid::index_of_freq(n, grid.ny)];
    }
};

// Samples a callable f(x, y) -> complex at the grid nodes.
template <typename F>
Field sample_field(const TorusGrid& g, F&& f) {
    Field out(g);
    for (int j = 0; j < g.nx; ++j) {
        for (int k = 0; k < g.ny; ++k) {
            out.at(j, k) = f(g.x(j), g.y(k));
        }
    }
    return out;
}

bool all_finite(const Field& f);
bool all_finite(const Spectrum& s);

// Discrete L2 inner product <u, w> = sum w_cell * u * conj(w).
cd inner(const Field& a, const Field& b);
double l2_distance(const Field& a, const Field& b);

}  // namespace dst

#endif
