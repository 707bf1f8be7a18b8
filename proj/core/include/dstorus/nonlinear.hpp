#ifndef DSTORUS_NONLINEAR_HPP
#define DSTORUS_NONLINEAR_HPP

#include "dstorus/field.hpp"

namespace dst {

// Real potential V = |u|^2 + sigma * E(|u|^2). With e_enabled = false, V = |u|^2
// and no transforms are needed. Returns V as a real-valued field.
std::vector<double> potential(const Field& u, int sigma, bool e_enabled, bool dealias_rho = false);

// Dealiased cubic right-hand side -|u|^2 u - sigma * E(|u|^2) u.
// All cubic products go through the 2/3 mask.
Field nonlinear_term(const Field& u, int sigma);

// Exact flow of i u_t = -(|u|^2 + sigma E(|u|^2)) u over dt: u -> u exp(i dt V).
// |u| is pointwise conserved, so V is frozen along the substep.
Field nonlinear_substep(const Field& u, double dt, int sigma, bool e_enabled);

}  // namespace dst

#endif
