#ifndef DSTORUS_SAMPLING_HPP
#define DSTORUS_SAMPLING_HPP

#include "dstorus/field.hpp"
#include "dstorus/hypnls.hpp"
#include "dstorus/ozawa.hpp"

namespace dst {

// Smooth radial cutoff for planting plane solutions on the torus: 1 on radius <= r0,
// 0 beyond r1, C-infinity in between. The diagonal family needs no cutoff.
struct Cutoff {
    bool enabled = false;
    double r0 = 0.0;
    double r1 = 0.0;

    static Cutoff none() { return {}; }
    static Cutoff bump(double r0, double r1);
    double operator()(double r) const;
};

// PDE residual of a field w at time t against
//   i dw/dt + P w + kc |w|^2 w + kn E(|w|^2) w = 0,
// with dw/dt supplied analytically. The solver's system is (kc, kn) = (1, sigma);
// the plane family of ozawa.hpp solves (8, -8) at unit amplitude (equivalently the
// profile scaled by 2 sqrt 2 solves (1, -1)).
struct ResidualReport {
    double max = 0.0;       // sup over the grid
    double core_max = 0.0;  // inside radius r0 (or everywhere when no cutoff)
    double ring_max = 0.0;  // inside the cutoff transition annulus
};

ResidualReport pde_residual(const Field& w, const Field& dw_dt, double kappa_cubic,
                            double kappa_nonlocal, const Cutoff& cut = Cutoff::none());

struct SampleResult {
    Field field;
    ResidualReport residual;
};

// Samples the plane family at grid nodes (torus coordinates centered at the origin),
// multiplied by the mandatory cutoff; amplitude scales the whole field. The reported
// residual is against the system the un-cut family solves, so it isolates what the
// truncation destroys. amplitude = 2 sqrt 2 gives data that solves the unit-coupling
// system with the +E sign (sigma = -1).
SampleResult sample_ozawa_on_torus(const OzawaParams& p, double t, const TorusGrid& grid,
                                   const Cutoff& cut, double amplitude = 1.0);

// Samples the diagonal solution exactly (periodic; requires integer grid scale L).
SampleResult sample_hypnls_on_torus(const ProfileSpec& profile, double t, const TorusGrid& grid);

}  // namespace dst

#endif
