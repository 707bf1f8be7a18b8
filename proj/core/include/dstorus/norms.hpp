#ifndef DSTORUS_NORMS_HPP
#define DSTORUS_NORMS_HPP

#include "dstorus/field.hpp"

namespace dst {

// Sobolev weight (1 + m^2/L^2 + n^2/L^2)^s applied to squared coefficients.
double hs_norm(const Spectrum& spec, double s);

// Homogeneous variant with weight ((m^2+n^2)/L^2)^s, skipping the zero mode.
double hs_seminorm(const Spectrum& spec, double s);

// l2 norm of the coefficients (== L2 norm of the field by Plancherel).
double l2_norm(const Spectrum& spec);

// Riemann-quadrature Lp norms on the grid; p in {2, 4} or infinity via linf_norm.
double lp_norm(const Field& field, int p);
double linf_norm(const Field& field);

// Share of squared-l2 mass carried by modes with max(|m|,|n|) in the top octave
// (kmax/2, kmax]. kmax defaults to the representable band; pass the dealias
// cutoff to measure against the effective band of a filtered run.
double tail_fraction(const Spectrum& spec, int kmax_x = -1, int kmax_y = -1);

}  // namespace dst

#endif
