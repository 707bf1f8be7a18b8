#ifndef DSTORUS_SPACETIME_HPP
#define DSTORUS_SPACETIME_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "dstorus/field.hpp"
#include "dstorus/freqbox.hpp"

namespace dst {

// Windowed space-time coefficients c_hat_{m,n}(tau_k) over [0, T_w] x T^2_L.
// The object represents the tapered function psi(t) u(t, x): norms below are of
// that compactly supported surrogate. Conventions:
//   t_j = j T_w / nt,  tau_k = 2 pi k / T_w (angular),  dtau = 2 pi / T_w,
//   c_hat(tau_k) = (2 pi)^{-1/2} dt sum_j psi_j c(t_j) e^{-i tau_k t_j},
// so the discrete time-Plancherel sum_k |c_hat|^2 dtau = sum_j |psi c|^2 dt holds
// exactly. The periodic Hann taper localizes each mode to three tau bins; choosing
// T_w = 2 pi L^2 puts every symbol (m^2 - n^2)/L^2 on the tau grid.
struct SpaceTimeSpectrum {
    TorusGrid grid;
    double T_w = 2.0 * M_PI;
    int nt = 0;
    std::vector<cd> chat;  // [(i * ny + j) * nt + kt], FFTW ordering in all axes

    double dt() const { return T_w / nt; }
    double dtau() const { return 2.0 * M_PI / T_w; }
    double tau(int kt) const { return dtau() * TorusGrid::freq_of_index(kt, nt); }

    cd& at(int i, int j, int kt) { return chat[(std::size_t(i) * grid.ny + j) * nt + kt]; }
    const cd& at(int i, int j, int kt) const {
        return chat[(std::size_t(i) * grid.ny + j) * nt + kt];
    }
};

// Periodic Hann taper psi_j = 0.5 (1 - cos(2 pi j / nt)).
std::vector<double> hann_taper(int nt);

// Discrete H^b norm of the taper under the same conventions (closed-form side of
// the separable identity for free solutions).
double taper_hb_norm(int nt, double T_w, double b);

// Tapered free solution psi(t) e^{itP} u0.
SpaceTimeSpectrum free_solution_spacetime(const Spectrum& u0, double T_w, int nt);

// Assembles the object from per-time spectra (taper applied here).
SpaceTimeSpectrum spacetime_from_series(const TorusGrid& grid, double T_w,
                                        const std::vector<Spectrum>& series);

// Mode series psi_j c_{m,n}(t_j) recovered by the inverse time transform.
std::vector<cd> mode_series(const SpaceTimeSpectrum& u, int i, int j);

// Physical field of the tapered function at time node jt, optionally zero-padded
// to pad times the spatial resolution (for sup and quartic quadrature).
Field spacetime_field_at(const SpaceTimeSpectrum& u, int jt, int pad = 1);

// Dyadic modulation band R <= <tau - (m^2-n^2)/L^2> < 2R, R a power of two.
struct ModBand {
    std::int64_t R = 1;

    static ModBand of(std::int64_t R);
    bool contains(double tau, double symbol) const;
};

struct StProjection {
    SpaceTimeSpectrum spectrum;
    bool empty = false;
};

// Projection onto box x band; orthogonal, and bands partition the tau axis.
StProjection delta_qr(const SpaceTimeSpectrum& u, const FreqBox& box, const ModBand& band);
StProjection delta_q(const SpaceTimeSpectrum& u, const FreqBox& box);

// Space-time norms of the tapered object.
double st_l2l2(const SpaceTimeSpectrum& u);
double st_linf(const SpaceTimeSpectrum& u, int pad = 2);
double st_l4l4(const SpaceTimeSpectrum& u, int pad = 2);

// Discrete Bourgain norm:
// (sum (1+(m^2+n^2)/L^2)^s sum_k <tau_k - (m^2-n^2)/L^2>^{2b} |c_hat|^2 dtau)^{1/2}.
double xsb_norm(const SpaceTimeSpectrum& u, double s, double b);

}  // namespace dst

#endif
