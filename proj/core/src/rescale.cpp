#include "dstorus/rescale.hpp"

#include <cmath>
#include <stdexcept>

#include "dstorus/fft.hpp"
#include "dstorus/norms.hpp"

namespace dst {

Spectrum rescale_by(const Spectrum& u, double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("rescale_by: lambda must be positive");
    Spectrum v = u;
    v.grid.L = u.grid.L / lambda;
    return v;
}

ScaledState rescale_spectrum(const Spectrum& u, double tau, double s) {
    const double hs = hs_norm(u, s);
    if (!(hs > 0.0)) throw std::invalid_argument("rescale_solution: zero state");
    const double lambda = std::pow(hs, -1.0 / s);
    if (lambda < 1e-6 || lambda > 1e6) {
        throw std::invalid_argument("rescale_solution: lambda = " + std::to_string(lambda) +
                                    " outside [1e-6, 1e6]");
    }
    ScaledState out;
    out.tau = tau;
    out.lambda = lambda;
    out.s = s;
    out.state = rescale_by(u, lambda);
    out.mass = l2_norm(out.state);
    out.hs_seminorm = hs_seminorm(out.state, s);
    return out;
}

ScaledState rescale_solution(const Field& u, double tau, double s) {
    return rescale_spectrum(transform(u), tau, s);
}

}  // namespace dst
