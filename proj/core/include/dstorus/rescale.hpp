#ifndef DSTORUS_RESCALE_HPP
#define DSTORUS_RESCALE_HPP

#include "dstorus/field.hpp"

namespace dst {

// v(x) = lambda u(lambda x) carried to the torus of scale L / lambda. For
// trigonometric polynomials the map is exact in coefficient space: under the
// orthonormal-basis convention the coefficients are unchanged and only the
// grid scale moves.
struct ScaledState {
    double tau = 0.0;
    double lambda = 1.0;
    double s = 0.0;
    Spectrum state;            // on the grid with scale L / lambda
    double mass = 0.0;         // equals the source mass exactly
    double hs_seminorm = 0.0;  // homogeneous seminorm of the rescaled field, <= 1
};

// lambda(tau) = |u(tau)|_{H^s}^{-1/s}. Rejects lambda outside [1e-6, 1e6].
ScaledState rescale_solution(const Field& u, double tau, double s);
ScaledState rescale_spectrum(const Spectrum& u, double tau, double s);

// Rescaling by an explicit lambda (used by the covariance checks).
Spectrum rescale_by(const Spectrum& u, double lambda);

}  // namespace dst

#endif
