#ifndef DSTORUS_OZAWA_HPP
#define DSTORUS_OZAWA_HPP

#include <vector>

#include "dstorus/field.hpp"

namespace dst {

// Pseudo-conformal family on the plane:
//   v(t,x,y) = (a+bt)^{-1} exp(i b (-x^2+y^2) / (4(a+bt))) / (1 + (x/(a+bt))^2 + (y/(a+bt))^2),
// focusing at T = -a/b. The bare rational profile normalizes the family so that
// |v(t)|_{L2} = sqrt(pi); the profile scaled by 2*sqrt(2) is the stationary state
// of the unit-coupling system (see stationary_profile notes in sampling.hpp).
struct OzawaParams {
    double a = 1.0;
    double b = -1.0;
    double R = 100.0;  // quadrature window radius on the plane

    double T() const { return -a / b; }
    double width(double t) const { return a + b * t; }  // focusing scale mu(t)
    void validate() const;
};

cd ozawa_v(double t, double x, double y, const OzawaParams& p);
cd ozawa_dt(double t, double x, double y, const OzawaParams& p);  // analytic time derivative

// The rational profile 1/(1 + x^2 + y^2), base of the family.
double stationary_profile(double x, double y);

struct NormValue {
    double value = 0.0;
    double error = 0.0;  // truncation / method error estimate
};

struct OzawaNorms {
    NormValue l2;
    NormValue hs;
    NormValue l4;
};

// Norms of v(t) on the plane. l2, l4 by radial quadrature over the disk of radius R
// (the chirp is unimodular, so their integrands are exactly radial). hs is the
// dilation seminorm of the profile, computed by radial Fourier quadrature: the
// quantity that carries the (T-t)^{-s} rate law cleanly. The chirp-complete
// inhomogeneous norm is available separately below; it agrees with hs near T but
// carries an O(1) mass floor and heavy chirp tails away from T. Requires s < 1
// (the family leaves H^1) and t < T.
OzawaNorms ozawa_norms(double t, double s, const OzawaParams& p);

// Radial Fourier quadrature of the profile transform 2 pi K0(|xi|), dilated to
// time t. homogeneous = true gives the pure power law mu^{-s} |Q|_{Hdot^s}.
double ozawa_hs_profile(double t, double s, const OzawaParams& p, bool homogeneous = true);

// Full inhomogeneous H^s of the chirped field: rescaled-grid transform of the
// core plus the local-frequency density of the chirp tail, with method-error
// estimates. One core transform is shared across the s values.
std::vector<NormValue> ozawa_hs_chirped_batch(double t, const std::vector<double>& s_list,
                                              const OzawaParams& p);

// H^s norm of the smooth cutoff of v(t) to the annulus eps <= |(x,y)| <= A.
NormValue ozawa_annulus_hs(double t, double s, double eps, double A, const OzawaParams& p);

}  // namespace dst

#endif
