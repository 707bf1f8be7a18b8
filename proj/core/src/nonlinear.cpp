#include "dstorus/nonlinear.hpp"

#include <cmath>
#include <stdexcept>

#include "dstorus/fft.hpp"
#include "dstorus/operators.hpp"

namespace dst {

std::vector<double> potential(const Field& u, int sigma, bool e_enabled, bool dealias_rho) {
    const std::size_t n = u.v.size();
    std::vector<double> V(n);
    if (!e_enabled && !dealias_rho) {
        for (std::size_t i = 0; i < n; ++i) V[i] = std::norm(u.v[i]);
        return V;
    }
    Field rho(u.grid);
    for (std::size_t i = 0; i < n; ++i) rho.v[i] = cd(std::norm(u.v[i]), 0.0);
    Spectrum rho_hat = transform(rho);
    if (dealias_rho) dealias_inplace(rho_hat);
    // V_hat = (1 + sigma * e_symbol) rho_hat; real because rho is real and the
    // multiplier is even.
    if (e_enabled) {
        const int nx = u.grid.nx, ny = u.grid.ny;
        for (int i = 0; i < nx; ++i) {
            const int m = TorusGrid::freq_of_index(i, nx);
            for (int j = 0; j < ny; ++j) {
                const int nn = TorusGrid::freq_of_index(j, ny);
                rho_hat.c[std::size_t(i) * ny + j] *= 1.0 + sigma * e_symbol(m, nn);
            }
        }
    }
    Field Vf = inverse_transform(rho_hat);
    for (std::size_t i = 0; i < n; ++i) V[i] = Vf.v[i].real();
    return V;
}

Field nonlinear_term(const Field& u, int sigma) {
    if (sigma != 1 && sigma != -1) throw std::invalid_argument("nonlinear_term: sigma must be +-1");
    Spectrum uh = transform(u);
    dealias_inplace(uh);
    Field ud = inverse_transform(uh);

    Field rho(u.grid);
    for (std::size_t i = 0; i < ud.v.size(); ++i) rho.v[i] = cd(std::norm(ud.v[i]), 0.0);
    Spectrum rho_hat = transform(rho);
    dealias_inplace(rho_hat);

    Spectrum V_hat = rho_hat;
    const int nx = u.grid.nx, ny = u.grid.ny;
    for (int i = 0; i < nx; ++i) {
        const int m = TorusGrid::freq_of_index(i, nx);
        for (int j = 0; j < ny; ++j) {
            const int nn = TorusGrid::freq_of_index(j, ny);
            V_hat.c[std::size_t(i) * ny + j] *= 1.0 + sigma * e_symbol(m, nn);
        }
    }
    Field V = inverse_transform(V_hat);

    Field out(u.grid);
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] = -V.v[i].real() * ud.v[i];
    Spectrum oh = transform(out);
    dealias_inplace(oh);
    return inverse_transform(oh);
}

Field nonlinear_substep(const Field& u, double dt, int sigma, bool e_enabled) {
    std::vector<double> V = potential(u, sigma, e_enabled);
    Field out(u.grid);
    for (std::size_t i = 0; i < u.v.size(); ++i) {
        const double phase = dt * V[i];
        out.v[i] = u.v[i] * cd(std::cos(phase), std::sin(phase));
    }
    return out;
}

}  // namespace dst
