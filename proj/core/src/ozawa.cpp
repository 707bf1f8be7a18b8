#include "dstorus/ozawa.hpp"

#include <cmath>
#include <stdexcept>

#include "dstorus/fft.hpp"
#include "dstorus/quadrature.hpp"

namespace dst {

void OzawaParams::validate() const {
    if (!(a > 0.0) || !(b < 0.0)) {
        throw std::invalid_argument("OzawaParams: need a > 0 and b < 0 so that T = -a/b > 0");
    }
    if (!(R > 1.0)) throw std::invalid_argument("OzawaParams: quadrature radius R must exceed 1");
}

cd ozawa_v(double t, double x, double y, const OzawaParams& p) {
    p.validate();
    const double mu = p.width(t);
    if (!(mu > 0.0)) {
        throw std::invalid_argument("ozawa_v: t >= blow-up time T = " + std::to_string(p.T()));
    }
    const double phase = p.b * (-x * x + y * y) / (4.0 * mu);
    const double X = x / mu, Y = y / mu;
    const double env = 1.0 / (mu * (1.0 + X * X + Y * Y));
    return env * cd(std::cos(phase), std::sin(phase));
}

cd ozawa_dt(double t, double x, double y, const OzawaParams& p) {
    const double mu = p.width(t);
    if (!(mu > 0.0)) throw std::invalid_argument("ozawa_dt: t >= blow-up time");
    const double b = p.b;
    const double r2 = x * x + y * y;
    const double S = mu * mu / (mu * mu + r2);          // profile Q(x/mu, y/mu)
    const double phase = b * (-x * x + y * y) / (4.0 * mu);
    const cd ei(std::cos(phase), std::sin(phase));
    // v = mu^{-1} e^{i phase} S; mu' = b.
    const double dphase_dt = -b * b * (-x * x + y * y) / (4.0 * mu * mu);
    const double dS_dt = 2.0 * b * mu * r2 / ((mu * mu + r2) * (mu * mu + r2));
    return ei * (cd(-b / (mu * mu) * S, 0.0) + cd(0.0, dphase_dt) * (S / mu) + cd(dS_dt / mu, 0.0));
}

double stationary_profile(double x, double y) { return 1.0 / (1.0 + x * x + y * y); }

namespace {

// Radial envelope A(r) = mu / (mu^2 + r^2) = |v(t, r)|.
double envelope(double mu, double r) { return mu / (mu * mu + r * r); }

NormValue l2_disk(double mu, double R) {
    auto f = [mu](double r) {
        const double A = envelope(mu, r);
        return 2.0 * M_PI * r * A * A;
    };
    NormValue out;
    out.value = std::sqrt(integrate_geometric(f, 0.0, R));
    out.error = M_PI * mu * mu / (mu * mu + R * R);  // exact tail of the squared norm
    return out;
}

NormValue l4_disk(double mu, double R) {
    auto f = [mu](double r) {
        const double A = envelope(mu, r);
        return 2.0 * M_PI * r * A * A * A * A;
    };
    NormValue out;
    out.value = std::pow(integrate_geometric(f, 0.0, R), 0.25);
    out.error = 2.0 * M_PI * std::pow(mu, 4) / (6.0 * std::pow(mu * mu + R * R, 3));
    return out;
}

// Core of the H^s computation: transform of the rescaled, smoothly truncated
// chirped profile V(X,Y) = chi(rho) exp(i gam (Y^2 - X^2)) / (1 + rho^2),
// evaluated on an N^2 grid over [-Xb, Xb)^2. Returns weighted sums shared
// across several s values plus a resolution-tail share.
struct CoreTransform {
    std::vector<double> weighted;   // per s: sum (1 + |K/mu|^2)^s |V_hat|^2 dK^2 / (2 pi)^2
    std::vector<double> top_share;  // per s: fraction carried by the top K octave
    double crossover = 0.0;         // 0.6 * Xc in rescaled units
    double phase_margin = 0.0;      // chirp phase at the crossover (validity margin)
};

CoreTransform core_transform(double mu, double babs, double gam_signed,
                             const std::vector<double>& s_list) {
    const double Xc = std::min(89.0, 20.0 / std::sqrt(mu * babs));
    const double Xb = 1.05 * Xc;
    const double fmax = 26.0 + 2.0 * std::abs(gam_signed) * Xc;
    int N = next_pow2(int(2.0 * Xb * (fmax * 1.15 + 8.0) / M_PI) + 1);
    N = std::min(std::max(N, 256), 2048);

    const double dx = 2.0 * Xb / N;
    std::vector<cd> V(std::size_t(N) * N), Vh(std::size_t(N) * N);
    for (int j = 0; j < N; ++j) {
        const double X = -Xb + j * dx;
        for (int k = 0; k < N; ++k) {
            const double Y = -Xb + k * dx;
            const double rho = std::hypot(X, Y);
            double chi = 1.0;
            if (rho >= Xc) {
                chi = 0.0;
            } else if (rho > 0.6 * Xc) {
                chi = smoothstep_cinf((Xc - rho) / (0.4 * Xc));
            }
            if (chi == 0.0) {
                V[std::size_t(j) * N + k] = cd(0.0, 0.0);
                continue;
            }
            const double phase = gam_signed * (Y * Y - X * X);
            const double env = chi / (1.0 + rho * rho);
            V[std::size_t(j) * N + k] = env * cd(std::cos(phase), std::sin(phase));
        }
    }
    dft_2d(N, N, V.data(), Vh.data(), -1);

    const double dK = M_PI / Xb;
    const double scale = dx * dx * dx * dx * dK * dK / (4.0 * M_PI * M_PI);
    const double Knyq = dK * (N / 2);
    CoreTransform out;
    out.weighted.assign(s_list.size(), 0.0);
    out.top_share.assign(s_list.size(), 0.0);
    for (int j = 0; j < N; ++j) {
        const double Kx = dK * TorusGrid::freq_of_index(j, N);
        for (int k = 0; k < N; ++k) {
            const double Ky = dK * TorusGrid::freq_of_index(k, N);
            const double K2 = Kx * Kx + Ky * Ky;
            const double a2 = std::norm(Vh[std::size_t(j) * N + k]);
            const bool top = std::max(std::abs(Kx), std::abs(Ky)) > Knyq / 2.0;
            for (std::size_t si = 0; si < s_list.size(); ++si) {
                const double w = std::pow(1.0 + K2 / (mu * mu), s_list[si]) * a2;
                out.weighted[si] += w;
                if (top) out.top_share[si] += w;
            }
        }
    }
    for (std::size_t si = 0; si < s_list.size(); ++si) {
        out.weighted[si] *= scale;
        if (out.weighted[si] > 0.0) out.top_share[si] *= scale / out.weighted[si];
    }
    out.crossover = 0.6 * Xc;
    out.phase_margin = std::abs(gam_signed) * out.crossover * out.crossover;
    return out;
}

// Oscillator-tail density beyond the crossover, in rescaled radius rho:
//   (1 - chi^2) (1 + (b rho / 2)^2)^s (1 + rho^2)^{-2} 2 pi rho,
// the local-frequency description of the chirp, valid once the chirp phase
// dominates (measured by phase_margin above). Independent of mu.
double chirp_tail_sq(double babs, double Xc_eff, double s) {
    const double Xc = Xc_eff / 0.6;
    auto dens = [babs, Xc, s](double rho) {
        double chi = 1.0;
        if (rho >= Xc) {
            chi = 0.0;
        } else if (rho > 0.6 * Xc) {
            chi = smoothstep_cinf((Xc - rho) / (0.4 * Xc));
        }
        const double om = 0.5 * babs * rho;
        const double env = 1.0 / (1.0 + rho * rho);
        return (1.0 - chi * chi) * std::pow(1.0 + om * om, s) * env * env * 2.0 * M_PI * rho;
    };
    return integrate_tail(dens, 0.6 * Xc, 1e-14);
}

}  // namespace

std::vector<NormValue> ozawa_hs_chirped_batch(double t, const std::vector<double>& s_list,
                                              const OzawaParams& p) {
    p.validate();
    const double mu = p.width(t);
    if (!(mu > 0.0)) throw std::invalid_argument("ozawa_hs_chirped_batch: t >= blow-up time");
    for (double s : s_list) {
        if (s >= 1.0) {
            throw std::invalid_argument(
                "ozawa_hs_chirped_batch: s must be < 1; the family is not in H^1 of the plane");
        }
    }
    const double babs = std::abs(p.b);
    const double gam = p.b * mu / 4.0;
    const CoreTransform core = core_transform(mu, babs, gam, s_list);

    std::vector<NormValue> out(s_list.size());
    for (std::size_t si = 0; si < s_list.size(); ++si) {
        const double tail2 = chirp_tail_sq(babs, core.crossover, s_list[si]);
        const double total2 = core.weighted[si] + tail2;
        out[si].value = std::sqrt(total2);
        const double method2 =
            tail2 / std::max(core.phase_margin, 1.0) + core.weighted[si] * core.top_share[si];
        out[si].error = method2 / (2.0 * out[si].value);
    }
    return out;
}

OzawaNorms ozawa_norms(double t, double s, const OzawaParams& p) {
    p.validate();
    const double mu = p.width(t);
    if (!(mu > 0.0)) throw std::invalid_argument("ozawa_norms: t >= blow-up time");
    OzawaNorms out;
    out.l2 = l2_disk(mu, p.R);
    out.l4 = l4_disk(mu, p.R);
    out.hs.value = ozawa_hs_profile(t, s, p, true);
    out.hs.error = 1e-12 * out.hs.value;  // radial quadrature resolves the integrand fully
    return out;
}

NormValue ozawa_annulus_hs(double t, double s, double eps, double A, const OzawaParams& p) {
    p.validate();
    if (!(eps > 0.0) || !(A > 2.0 * eps)) {
        throw std::invalid_argument("ozawa_annulus_hs: need 0 < eps and A > 2 eps");
    }
    const double mu = p.width(t);
    if (!(mu > 0.0)) throw std::invalid_argument("ozawa_annulus_hs: t >= blow-up time");
    const double babs = std::abs(p.b);

    const double Xb = 1.02 * A;
    const double fmax = 1.1 * (babs * A / (2.0 * mu)) + 40.0 / eps;
    int N = next_pow2(int(2.0 * Xb * (fmax + 10.0) * 1.1 / M_PI) + 1);
    N = std::max(N, 512);
    if (N > 4096) {
        throw std::invalid_argument(
            "ozawa_annulus_hs: under-resolved this close to T; the chirp frequency b A / (2 mu) "
            "needs more than a 4096^2 grid");
    }
    const double dx = 2.0 * Xb / N;
    std::vector<cd> w(std::size_t(N) * N), wh(std::size_t(N) * N);
    const double rin0 = eps, rin1 = 1.35 * eps;
    const double rout0 = 0.75 * A, rout1 = A;
    for (int j = 0; j < N; ++j) {
        const double x = -Xb + j * dx;
        for (int k = 0; k < N; ++k) {
            const double y = -Xb + k * dx;
            const double r = std::hypot(x, y);
            double chi = 0.0;
            if (r > rin0 && r < rout1) {
                chi = 1.0;
                if (r < rin1) chi = smoothstep_cinf((r - rin0) / (rin1 - rin0));
                if (r > rout0) chi *= smoothstep_cinf((rout1 - r) / (rout1 - rout0));
            }
            if (chi == 0.0) {
                w[std::size_t(j) * N + k] = cd(0.0, 0.0);
                continue;
            }
            w[std::size_t(j) * N + k] = chi * ozawa_v(t, x, y, p);
        }
    }
    dft_2d(N, N, w.data(), wh.data(), -1);

    const double dK = M_PI / Xb;
    const double scale = dx * dx * dx * dx * dK * dK / (4.0 * M_PI * M_PI);
    const double Knyq = dK * (N / 2);
    double acc = 0.0, top = 0.0;
    for (int j = 0; j < N; ++j) {
        const double Kx = dK * TorusGrid::freq_of_index(j, N);
        for (int k = 0; k < N; ++k) {
            const double Ky = dK * TorusGrid::freq_of_index(k, N);
            const double a2 = std::norm(wh[std::size_t(j) * N + k]);
            const double v = std::pow(1.0 + Kx * Kx + Ky * Ky, s) * a2;
            acc += v;
            if (std::max(std::abs(Kx), std::abs(Ky)) > Knyq / 2.0) top += v;
        }
    }
    NormValue out;
    out.value = std::sqrt(acc * scale);
    out.error = (acc > 0.0 ? (top / acc) : 0.0) * out.value / 2.0;
    return out;
}

double ozawa_hs_profile(double t, double s, const OzawaParams& p, bool homogeneous) {
    p.validate();
    const double mu = p.width(t);
    if (!(mu > 0.0)) throw std::invalid_argument("ozawa_hs_profile: t >= blow-up time");
    if (s >= 1.0) throw std::invalid_argument("ozawa_hs_profile: s must be < 1");
    // The chirp-stripped field mu^{-1} Q(./mu) has transform mu * 2 pi K0(mu |xi|);
    // integrate radially in w = mu rho. The homogeneous weight turns the dilation
    // into an exact power law mu^{-s} |Q|_{Hdot^s}.
    auto dens = [mu, s, homogeneous](double w) {
        const double k0 = std::cyl_bessel_k(0.0, w);
        const double rho = w / mu;
        const double weight =
            homogeneous ? std::pow(rho * rho, s) : std::pow(1.0 + rho * rho, s);
        return weight * k0 * k0 * 2.0 * M_PI * w;
    };
    return std::sqrt(integrate_geometric(dens, 1e-14, 64.0));
}

}  // namespace dst
