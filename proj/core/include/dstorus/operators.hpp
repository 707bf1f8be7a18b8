#ifndef DSTORUS_OPERATORS_HPP
#define DSTORUS_OPERATORS_HPP

#include "dstorus/field.hpp"

namespace dst {

// Hyperbolic symbol of P = -dxx + dyy: p(m,n) = (m^2 - n^2) / L^2.
// The sign is fixed so the free flow matches the modulation weight
// <tau - m^2/L^2 + n^2/L^2> used by the space-time module.
inline double p_symbol(int m, int n, double L) {
    return (double(m) * m - double(n) * n) / (L * L);
}

// Nonlocal multiplier: 2 m^2 / (m^2 + n^2), zero at the origin, independent of L.
inline double e_symbol(int m, int n) {
    if (m == 0 && n == 0) return 0.0;
    return 2.0 * double(m) * m / (double(m) * m + double(n) * n);
}

// c(m,n) -> p(m,n) c(m,n).
Spectrum apply_p(const Spectrum& spec);

// c(m,n) -> e(m,n) c(m,n).
Spectrum apply_e(const Spectrum& spec);

// Free propagator exp(i t P): c(m,n) -> exp(i t p(m,n)) c(m,n). Exactly unitary.
Spectrum propagate_linear(const Spectrum& spec, double t);
void propagate_linear_inplace(Spectrum& spec, double t);

// Solves (dxx + dyy) phi = dx rho for the spectrum of a real field rho,
// mean-zero gauge: phi_hat(m,n) = -i m L / (m^2+n^2) rho_hat(m,n), phi_hat(0,0) = 0.
// Rejects inputs that are not Hermitian-symmetric to tolerance (not a real field).
Spectrum solve_phi(const Spectrum& rho, double hermitian_tol = 1e-10);

// Max deviation |c(-m,-n) - conj(c(m,n))| relative to the l2 norm.
double hermitian_defect(const Spectrum& spec);

// 2/3-rule mask: keeps |m| <= nx/3 and |n| <= ny/3. Returns the kept-mode cutoffs.
int dealias_cutoff(int n);
void dealias_inplace(Spectrum& spec);

}  // namespace dst

#endif
