#include "dstorus/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "dstorus/fft.hpp"
#include "dstorus/operators.hpp"
#include "dstorus/quadrature.hpp"

namespace dst {

Cutoff Cutoff::bump(double r0, double r1) {
    if (!(r0 > 0.0) || !(r1 > r0)) {
        throw std::invalid_argument("Cutoff::bump: need 0 < r0 < r1 (degenerate bump rejected)");
    }
    Cutoff c;
    c.enabled = true;
    c.r0 = r0;
    c.r1 = r1;
    return c;
}

double Cutoff::operator()(double r) const {
    if (!enabled) return 1.0;
    if (r <= r0) return 1.0;
    if (r >= r1) return 0.0;
    return smoothstep_cinf((r1 - r) / (r1 - r0));
}

ResidualReport pde_residual(const Field& w, const Field& dw_dt, double kappa_cubic,
                            double kappa_nonlocal, const Cutoff& cut) {
    const TorusGrid& g = w.grid;
    Spectrum wh = transform(w);
    Field Pw = inverse_transform(apply_p(wh));

    Field rho(g);
    for (std::size_t i = 0; i < w.v.size(); ++i) rho.v[i] = cd(std::norm(w.v[i]), 0.0);
    Field Erho = inverse_transform(apply_e(transform(rho)));

    const double P = g.period();
    ResidualReport rep;
    for (int j = 0; j < g.nx; ++j) {
        double x = g.x(j);
        if (x > P / 2.0) x -= P;
        for (int k = 0; k < g.ny; ++k) {
            double y = g.y(k);
            if (y > P / 2.0) y -= P;
            const std::size_t idx = std::size_t(j) * g.ny + k;
            const cd r = cd(0.0, 1.0) * dw_dt.v[idx] + Pw.v[idx] +
                         kappa_cubic * rho.v[idx].real() * w.v[idx] +
                         kappa_nonlocal * Erho.v[idx].real() * w.v[idx];
            const double a = std::abs(r);
            rep.max = std::max(rep.max, a);
            if (cut.enabled) {
                const double rad = std::hypot(x, y);
                if (rad <= cut.r0) rep.core_max = std::max(rep.core_max, a);
                if (rad > cut.r0 && rad < cut.r1) rep.ring_max = std::max(rep.ring_max, a);
            } else {
                rep.core_max = std::max(rep.core_max, a);
            }
        }
    }
    return rep;
}

SampleResult sample_ozawa_on_torus(const OzawaParams& p, double t, const TorusGrid& grid,
                                   const Cutoff& cut, double amplitude) {
    if (!cut.enabled) {
        throw std::invalid_argument(
            "sample_ozawa_on_torus: the plane family is not periodic; a cutoff is mandatory");
    }
    const double inscribed = M_PI * grid.L;
    if (cut.r1 > inscribed) {
        throw std::invalid_argument("sample_ozawa_on_torus: cutoff radius r1 = " +
                                    std::to_string(cut.r1) + " exceeds the inscribed radius " +
                                    std::to_string(inscribed));
    }
    const double P = grid.period();
    Field w(grid), dw(grid);
    for (int j = 0; j < grid.nx; ++j) {
        double x = grid.x(j);
        if (x > P / 2.0) x -= P;
        for (int k = 0; k < grid.ny; ++k) {
            double y = grid.y(k);
            if (y > P / 2.0) y -= P;
            const double chi = cut(std::hypot(x, y)) * amplitude;
            const std::size_t idx = std::size_t(j) * grid.ny + k;
            if (chi != 0.0) {
                w.v[idx] = chi * ozawa_v(t, x, y, p);
                dw.v[idx] = chi * ozawa_dt(t, x, y, p);
            }
        }
    }
    // Couplings the un-cut family satisfies at this amplitude: (8, -8) / amplitude^2.
    const double kc = 8.0 / (amplitude * amplitude);
    SampleResult out{std::move(w), {}};
    out.residual = pde_residual(out.field, dw, kc, -kc, cut);
    return out;
}

SampleResult sample_hypnls_on_torus(const ProfileSpec& profile, double t, const TorusGrid& grid) {
    if (std::abs(grid.L - std::round(grid.L)) > 1e-12) {
        throw std::invalid_argument(
            "sample_hypnls_on_torus: the 2 pi - periodic diagonal family needs integer L");
    }
    Field w(grid), dw(grid);
    for (int j = 0; j < grid.nx; ++j) {
        for (int k = 0; k < grid.ny; ++k) {
            const double theta = grid.x(j) + grid.y(k);
            const double u0 = profile.eval(theta);
            const double phase = t * u0 * u0;
            const cd val = u0 * cd(std::cos(phase), std::sin(phase));
            const std::size_t idx = std::size_t(j) * grid.ny + k;
            w.v[idx] = val;
            dw.v[idx] = cd(0.0, u0 * u0) * val;  // d/dt adds i |u0|^2
        }
    }
    SampleResult out{std::move(w), {}};
    out.residual = pde_residual(out.field, dw, 1.0, 0.0);
    return out;
}

}  // namespace dst
