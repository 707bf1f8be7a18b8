#ifndef DSTORUS_HYPNLS_HPP
#define DSTORUS_HYPNLS_HPP

#include <vector>

#include "dstorus/field.hpp"

namespace dst {

// Real 2 pi - periodic profile u0(theta) given as a finite trigonometric series:
//   u0(theta) = c0 + sum_k (a_k cos(k theta) + b_k sin(k theta)).
struct ProfileSpec {
    double c0 = 0.0;
    std::vector<double> cos_coeffs;  // a_1, a_2, ...
    std::vector<double> sin_coeffs;  // b_1, b_2, ...

    double eval(double theta) const;
    double deriv(double theta) const;
    bool is_constant() const;
    int max_mode() const;
};

// Diagonal traveling solution of the cubic hyperbolic equation (nonlocal term off):
//   u(t,x,y) = exp(i t u0(x+y)^2) u0(x+y).
// The hyperbolic operator annihilates functions of x+y, so this is exact on the torus.
cd hyperbolic_explicit(double t, double x, double y, const ProfileSpec& profile);

// H^s(T^2) norms of the diagonal solution at the given times, via a 1-d transform
// of the diagonal section. Resolution grows with t to follow the phase; doubled
// until the value is stable to 1e-12. Rejects constant profiles (no growth).
std::vector<double> growth_curve(const ProfileSpec& profile, double s,
                                 const std::vector<double>& t_list);

// Single-time variant.
double hypnls_hs(const ProfileSpec& profile, double s, double t);

}  // namespace dst

#endif
