#include "dstorus/spacetime.hpp"

#include <cmath>
#include <stdexcept>

#include "dstorus/fft.hpp"
#include "dstorus/norms.hpp"
#include "dstorus/operators.hpp"

namespace dst {

std::vector<double> hann_taper(int nt) {
    std::vector<double> psi(nt);
    for (int j = 0; j < nt; ++j) psi[j] = 0.5 * (1.0 - std::cos(2.0 * M_PI * j / nt));
    return psi;
}

double taper_hb_norm(int nt, double T_w, double b) {
    const std::vector<double> psi = hann_taper(nt);
    std::vector<cd> in(nt), out(nt);
    for (int j = 0; j < nt; ++j) in[j] = cd(psi[j], 0.0);
    dft_1d_batch(nt, 1, in.data(), out.data(), -1);
    const double dt = T_w / nt;
    const double dtau = 2.0 * M_PI / T_w;
    const double scale = dt / std::sqrt(2.0 * M_PI);
    double acc = 0.0;
    for (int k = 0; k < nt; ++k) {
        const double tau = dtau * TorusGrid::freq_of_index(k, nt);
        acc += std::pow(1.0 + tau * tau, b) * std::norm(out[k] * scale) * dtau;
    }
    return std::sqrt(acc);
}

namespace {

void time_transform_inplace(SpaceTimeSpectrum& st, const std::vector<cd>& series_all) {
    // series_all holds psi_j c_{m,n}(t_j) in the same layout as chat.
    dft_1d_batch(st.nt, st.grid.nx * st.grid.ny, series_all.data(), st.chat.data(), -1);
    const double scale = st.dt() / std::sqrt(2.0 * M_PI);
    for (cd& z : st.chat) z *= scale;
}

}  // namespace

SpaceTimeSpectrum free_solution_spacetime(const Spectrum& u0, double T_w, int nt) {
    if (nt < 4 || nt % 2) throw std::invalid_argument("free_solution_spacetime: nt must be even, >= 4");
    SpaceTimeSpectrum st;
    st.grid = u0.grid;
    st.T_w = T_w;
    st.nt = nt;
    st.chat.assign(std::size_t(u0.grid.nx) * u0.grid.ny * nt, cd(0.0, 0.0));

    const std::vector<double> psi = hann_taper(nt);
    const int nx = u0.grid.nx, ny = u0.grid.ny;
    std::vector<cd> series(st.chat.size());
    for (int i = 0; i < nx; ++i) {
        const int m = TorusGrid::freq_of_index(i, nx);
        for (int j = 0; j < ny; ++j) {
            const int n = TorusGrid::freq_of_index(j, ny);
            const double p = p_symbol(m, n, u0.grid.L);
            const cd c0 = u0.c[std::size_t(i) * ny + j];
            cd* dst_row = series.data() + (std::size_t(i) * ny + j) * nt;
            for (int k = 0; k < nt; ++k) {
                const double t = k * T_w / nt;
                dst_row[k] = psi[k] * c0 * cd(std::cos(p * t), std::sin(p * t));
            }
        }
    }
    time_transform_inplace(st, series);
    return st;
}

SpaceTimeSpectrum spacetime_from_series(const TorusGrid& grid, double T_w,
                                        const std::vector<Spectrum>& series) {
    const int nt = int(series.size());
    if (nt < 4 || nt % 2) throw std::invalid_argument("spacetime_from_series: need even nt >= 4");
    SpaceTimeSpectrum st;
    st.grid = grid;
    st.T_w = T_w;
    st.nt = nt;
    st.chat.assign(std::size_t(grid.nx) * grid.ny * nt, cd(0.0, 0.0));
    const std::vector<double> psi = hann_taper(nt);
    std::vector<cd> tmp(st.chat.size());
    for (int k = 0; k < nt; ++k) {
        if (series[k].grid.nx != grid.nx || series[k].grid.ny != grid.ny) {
            throw std::invalid_argument("spacetime_from_series: inconsistent grids");
        }
        for (long ij = 0; ij < grid.size(); ++ij) {
            tmp[std::size_t(ij) * nt + k] = psi[k] * series[k].c[ij];
        }
    }
    time_transform_inplace(st, tmp);
    return st;
}

std::vector<cd> mode_series(const SpaceTimeSpectrum& u, int i, int j) {
    std::vector<cd> out(u.nt);
    dft_1d_batch(u.nt, 1, &u.at(i, j, 0), out.data(), +1);
    const double scale = u.dtau() / std::sqrt(2.0 * M_PI);
    for (cd& z : out) z *= scale;
    return out;
}

Field spacetime_field_at(const SpaceTimeSpectrum& u, int jt, int pad) {
    const int nx = u.grid.nx, ny = u.grid.ny;
    TorusGrid fine = u.grid;
    fine.nx *= pad;
    fine.ny *= pad;
    Spectrum s(fine);
    const double dtau = u.dtau();
    const double t = jt * u.dt();
    const double scale = dtau / std::sqrt(2.0 * M_PI);
    for (int i = 0; i < nx; ++i) {
        const int m = TorusGrid::freq_of_index(i, nx);
        for (int j = 0; j < ny; ++j) {
            const int n = TorusGrid::freq_of_index(j, ny);
            cd acc(0.0, 0.0);
            const cd* row = &u.at(i, j, 0);
            for (int k = 0; k < u.nt; ++k) {
                const double tau = u.tau(k);
                acc += row[k] * cd(std::cos(tau * t), std::sin(tau * t));
            }
            s.c_at(m, n) = acc * scale;
        }
    }
    return inverse_transform(s);
}

ModBand ModBand::of(std::int64_t R) {
    if (R < 1 || (R & (R - 1))) throw std::invalid_argument("ModBand: R must be a dyadic >= 1");
    return ModBand{R};
}

bool ModBand::contains(double tau, double symbol) const {
    const double d = tau - symbol;
    const double jb = std::sqrt(1.0 + d * d);
    return double(R) <= jb && jb < 2.0 * double(R);
}

StProjection delta_qr(const SpaceTimeSpectrum& u, const FreqBox& box, const ModBand& band) {
    const Rational L = Rational::from_double(u.grid.L);
    StProjection out;
    out.spectrum = u;
    bool any = false;
    const int nx = u.grid.nx, ny = u.grid.ny;
    for (int i = 0; i < nx; ++i) {
        const int m = TorusGrid::freq_of_index(i, nx);
        for (int j = 0; j < ny; ++j) {
            const int n = TorusGrid::freq_of_index(j, ny);
            const bool inbox = box.contains(m, n, L);
            const double p = p_symbol(m, n, u.grid.L);
            cd* row = &out.spectrum.at(i, j, 0);
            for (int k = 0; k < u.nt; ++k) {
                if (inbox && band.contains(u.tau(k), p)) {
                    any = true;
                } else {
                    row[k] = cd(0.0, 0.0);
                }
            }
        }
    }
    out.empty = !any;
    return out;
}

StProjection delta_q(const SpaceTimeSpectrum& u, const FreqBox& box) {
    const Rational L = Rational::from_double(u.grid.L);
    StProjection out;
    out.spectrum = u;
    bool any = false;
    const int nx = u.grid.nx, ny = u.grid.ny;
    for (int i = 0; i < nx; ++i) {
        const int m = TorusGrid::freq_of_index(i, nx);
        for (int j = 0; j < ny; ++j) {
            const int n = TorusGrid::freq_of_index(j, ny);
            if (box.contains(m, n, L)) {
                any = true;
                continue;
            }
            cd* row = &out.spectrum.at(i, j, 0);
            for (int k = 0; k < u.nt; ++k) row[k] = cd(0.0, 0.0);
        }
    }
    out.empty = !any;
    return out;
}

double st_l2l2(const SpaceTimeSpectrum& u) {
    double acc = 0.0;
    for (const cd& z : u.chat) acc += std::norm(z);
    return std::sqrt(acc * u.dtau());
}

namespace {

// One batched inverse time transform, then a spatial synthesis per node.
template <typename Accum>
void for_each_time_slice(const SpaceTimeSpectrum& u, int pad, Accum&& accum) {
    const int nx = u.grid.nx, ny = u.grid.ny;
    std::vector<cd> series(u.chat.size());
    dft_1d_batch(u.nt, nx * ny, u.chat.data(), series.data(), +1);
    const double scale = u.dtau() / std::sqrt(2.0 * M_PI);

    TorusGrid fine = u.grid;
    fine.nx *= pad;
    fine.ny *= pad;
    Spectrum slice(fine);
    for (int jt = 0; jt < u.nt; ++jt) {
        std::fill(slice.c.begin(), slice.c.end(), cd(0.0, 0.0));
        for (int i = 0; i < nx; ++i) {
            const int m = TorusGrid::freq_of_index(i, nx);
            for (int j = 0; j < ny; ++j) {
                const int n = TorusGrid::freq_of_index(j, ny);
                slice.c_at(m, n) = scale * series[(std::size_t(i) * ny + j) * u.nt + jt];
            }
        }
        accum(inverse_transform(slice));
    }
}

}  // namespace

double st_linf(const SpaceTimeSpectrum& u, int pad) {
    double m = 0.0;
    for_each_time_slice(u, pad, [&m](const Field& f) { m = std::max(m, linf_norm(f)); });
    return m;
}

double st_l4l4(const SpaceTimeSpectrum& u, int pad) {
    double acc = 0.0;
    const double dt = u.dt();
    for_each_time_slice(u, pad, [&acc, dt](const Field& f) {
        double s = 0.0;
        for (const cd& z : f.v) {
            const double a2 = std::norm(z);
            s += a2 * a2;
        }
        acc += s * f.grid.cell_weight() * dt;
    });
    return std::pow(acc, 0.25);
}

double xsb_norm(const SpaceTimeSpectrum& u, double s, double b) {
    const int nx = u.grid.nx, ny = u.grid.ny;
    const double L2 = u.grid.L * u.grid.L;
    double acc = 0.0;
    for (int i = 0; i < nx; ++i) {
        const double m = TorusGrid::freq_of_index(i, nx);
        for (int j = 0; j < ny; ++j) {
            const double n = TorusGrid::freq_of_index(j, ny);
            const double ws = std::pow(1.0 + (m * m + n * n) / L2, s);
            const double p = (m * m - n * n) / L2;
            const cd* row = &u.at(i, j, 0);
            double inner = 0.0;
            for (int k = 0; k < u.nt; ++k) {
                const double d = u.tau(k) - p;
                inner += std::pow(1.0 + d * d, b) * std::norm(row[k]);
            }
            acc += ws * inner;
        }
    }
    return std::sqrt(acc * u.dtau());
}

}  // namespace dst
