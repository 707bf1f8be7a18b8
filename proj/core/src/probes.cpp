#include "dstorus/probes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dstorus/fft.hpp"
#include "dstorus/norms.hpp"
#include "dstorus/operators.hpp"
#include "dstorus/parallel.hpp"
#include "dstorus/quadrature.hpp"
#include "dstorus/rng.hpp"

namespace dst {

namespace {

double band_width_factor(const ModBand& band) {
    // Paper normalization uses R^{1/2}; the measured ratios stay well below 1
    // because the actual tau measure of the band and the basis prefactors are
    // absorbed with room to spare.
    return std::sqrt(double(band.R));
}

}  // namespace

double linf_band_bound(const SpaceTimeSpectrum& u, const FreqBox& box, const ModBand& band) {
    const StProjection proj = delta_qr(u, box, band);
    if (proj.empty) throw std::invalid_argument("linf_band_bound: empty box x band intersection");
    const double l2 = st_l2l2(proj.spectrum);
    if (l2 == 0.0) throw std::invalid_argument("linf_band_bound: zero projected data");
    const double linf = st_linf(proj.spectrum, 2);
    const double Q = double(box.lattice_count(Rational::from_double(u.grid.L)));
    const double bound = std::sqrt(Q) / u.grid.L * band_width_factor(band) * l2;
    return linf / bound;
}

double l4_band_bound(const SpaceTimeSpectrum& u, const FreqBox& box, const ModBand& band) {
    const StProjection proj = delta_qr(u, box, band);
    if (proj.empty) throw std::invalid_argument("l4_band_bound: empty box x band intersection");
    const double l2 = st_l2l2(proj.spectrum);
    if (l2 == 0.0) throw std::invalid_argument("l4_band_bound: zero projected data");
    const double l4 = st_l4l4(proj.spectrum, 2);
    const double Q = double(box.lattice_count(Rational::from_double(u.grid.L)));
    const double bound = std::pow(Q / (u.grid.L * u.grid.L), 0.25) *
                         std::sqrt(band_width_factor(band)) * l2;
    return l4 / bound;
}

SpaceTimeSpectrum random_spacetime(const TorusGrid& grid, double T_w, int nt, const FreqBox& box,
                                   const ModBand& band, std::uint64_t seed) {
    SpaceTimeSpectrum st;
    st.grid = grid;
    st.T_w = T_w;
    st.nt = nt;
    st.chat.assign(std::size_t(grid.nx) * grid.ny * nt, cd(0.0, 0.0));
    const Rational L = Rational::from_double(grid.L);
    GaussianRng rng(seed);
    bool any = false;
    for (int i = 0; i < grid.nx; ++i) {
        const int m = TorusGrid::freq_of_index(i, grid.nx);
        for (int j = 0; j < grid.ny; ++j) {
            const int n = TorusGrid::freq_of_index(j, grid.ny);
            if (!box.contains(m, n, L)) continue;
            const double p = p_symbol(m, n, grid.L);
            for (int k = 0; k < nt; ++k) {
                if (band.contains(st.tau(k), p)) {
                    st.at(i, j, k) = rng.complex_gaussian();
                    any = true;
                }
            }
        }
    }
    if (!any) throw std::invalid_argument("random_spacetime: box x band misses the grid");
    return st;
}

// ---------------------------------------------------------------------------
// Bilinear Strichartz ratios.

namespace {

struct AnnulusModes {
    std::vector<int> p, q;       // lattice offsets relative to the center
    std::vector<double> symbol;  // ((aL+p)^2 - (bL+q)^2) / L^2
};

AnnulusModes annulus_modes(std::int64_t N, std::int64_t L, long a, long b) {
    const FreqBox shell =
        FreqBox::annulus(Rational(), Rational(), Rational::of(N), Rational::of(2 * N));
    AnnulusModes out;
    const Rational Lr = Rational::of(L);
    const long ext = long(2 * N * L);
    for (long p = -ext; p <= ext; ++p) {
        for (long q = -ext; q <= ext; ++q) {
            if (!shell.contains(int(p), int(q), Lr)) continue;
            out.p.push_back(int(p));
            out.q.push_back(int(q));
            const double m = double(a) * L + p, n = double(b) * L + q;
            out.symbol.push_back((m * m - n * n) / (double(L) * double(L)));
        }
    }
    if (out.p.empty()) throw std::invalid_argument("bilinear_ratio: annulus misses the lattice");
    return out;
}

// Scratch buffers plus synthesis/inner loops shared by the trial pass and the
// extremal refinement.
struct BilinearEngine {
    double L;
    int n_g;
    std::vector<cd> buf, u1, u2, w;

    BilinearEngine(double L_, int n_g_)
        : L(L_), n_g(n_g_), buf(std::size_t(n_g_) * n_g_), u1(buf.size()), u2(buf.size()),
          w(buf.size()) {}

    void synth(const AnnulusModes& m, const std::vector<cd>& c, double t, std::vector<cd>& out) {
        std::fill(buf.begin(), buf.end(), cd(0.0, 0.0));
        for (std::size_t i = 0; i < m.p.size(); ++i) {
            const int pi = (m.p[i] % n_g + n_g) % n_g;
            const int qi = (m.q[i] % n_g + n_g) % n_g;
            const double ph = t * m.symbol[i];
            buf[std::size_t(pi) * n_g + qi] = c[i] * cd(std::cos(ph), std::sin(ph));
        }
        dft_2d(n_g, n_g, buf.data(), out.data(), +1);
    }

    // Trapezoid pass of int_0^1 |U1(t) U2(t)|_{L2}^2 dt.
    double product_l2l2_sq(const AnnulusModes& m1, const AnnulusModes& m2,
                           const std::vector<cd>& c1, const std::vector<cd>& c2, int nt) {
        const double w_cell = (2.0 * M_PI * L) * (2.0 * M_PI * L) / double(buf.size());
        const double basis = 1.0 / (2.0 * M_PI * L);
        double integral = 0.0;
        for (int jt = 0; jt <= nt; ++jt) {
            const double t = double(jt) / nt;
            synth(m1, c1, t, u1);
            synth(m2, c2, t, u2);
            double s = 0.0;
            for (std::size_t i = 0; i < buf.size(); ++i) s += std::norm(u1[i] * u2[i]);
            s *= w_cell * basis * basis * basis * basis;
            integral += (jt == 0 || jt == nt) ? 0.5 * s : s;
        }
        return integral / nt;
    }

    // Gradient of the squared product norm in conj(ca):
    //   ga(k) = int_0^1 e^{-i t sym_k} < u_a |u_b|^2 , e_k > dt.
    void apply(const AnnulusModes& ma, const AnnulusModes& mb, const std::vector<cd>& ca,
               const std::vector<cd>& cb, int nt, std::vector<cd>& ga) {
        ga.assign(ca.size(), cd(0.0, 0.0));
        const double basis = 1.0 / (2.0 * M_PI * L);
        for (int jt = 0; jt <= nt; ++jt) {
            const double t = double(jt) / nt;
            const double tw = (jt == 0 || jt == nt) ? 0.5 : 1.0;
            synth(ma, ca, t, u1);
            synth(mb, cb, t, u2);
            for (std::size_t i = 0; i < w.size(); ++i) {
                w[i] = u1[i] * std::norm(u2[i]) * basis * basis;
            }
            dft_2d(n_g, n_g, w.data(), buf.data(), -1);
            const double scale = tw / double(nt) / double(buf.size());
            for (std::size_t i = 0; i < ma.p.size(); ++i) {
                const int pi = (ma.p[i] % n_g + n_g) % n_g;
                const int qi = (ma.q[i] % n_g + n_g) % n_g;
                const double ph = -t * ma.symbol[i];
                ga[i] += buf[std::size_t(pi) * n_g + qi] * cd(std::cos(ph), std::sin(ph)) * scale;
            }
        }
    }
};

}  // namespace

BilinearStats bilinear_ratio(const BilinearCell& cell, int trials, std::uint64_t seed,
                             const TimeQuadSpec& tq, int threads, int refine_iters) {
    if (cell.N1 < 1 || cell.N2 < 1 || (cell.N1 & (cell.N1 - 1)) || (cell.N2 & (cell.N2 - 1))) {
        throw std::invalid_argument("bilinear_ratio: N1, N2 must be dyadic >= 1");
    }
    if (cell.L < 1) throw std::invalid_argument("bilinear_ratio: L must be a positive integer");

    const AnnulusModes m1 = annulus_modes(cell.N1, cell.L, cell.a1, cell.b1);
    const AnnulusModes m2 = annulus_modes(cell.N2, cell.L, cell.a2, cell.b2);

    // Fields are exact on any grid holding max|offset| = 2 N L; the quartic
    // quadrature is alias-free when n_g > 4 (N1 + N2) L, capped for runtime.
    const long field_min = 4 * std::max(cell.N1, cell.N2) * cell.L + 2;
    const long desired = 4 * (cell.N1 + cell.N2) * cell.L + 1;
    const long cap = std::max<long>(640, field_min);
    const int n_g = next_fast_size(int(std::min(desired, cap)));
    const bool quad_exact = n_g > 4 * (cell.N1 + cell.N2) * cell.L;

    const double denom_scale = std::sqrt(double(std::min(cell.N1, cell.N2)));
    const std::uint64_t cell_tag =
        derive_seed(0x62696c696eULL, std::uint64_t(cell.N1 * 131 + cell.N2),
                    std::uint64_t(cell.L), std::uint64_t((cell.a1 + 100) * 401 + (cell.b1 + 100)) ^
                                               std::uint64_t((cell.a2 + 100) * 40009 + (cell.b2 + 100)));

    auto draw = [&](int trial, std::vector<cd>& c1, std::vector<cd>& c2) {
        GaussianRng rng(derive_seed(seed, cell_tag, std::uint64_t(trial)));
        c1.resize(m1.p.size());
        c2.resize(m2.p.size());
        for (cd& z : c1) z = rng.complex_gaussian();
        for (cd& z : c2) z = rng.complex_gaussian();
    };

    BilinearStats stats;
    stats.q1_points = long(m1.p.size());
    stats.q2_points = long(m2.p.size());
    stats.grid_n = n_g;
    stats.quad_exact = quad_exact;

    // Calibrate nt on the first draw: double until the integral is stable.
    std::vector<cd> c1, c2;
    draw(0, c1, c2);
    int nt = tq.nt0;
    {
        BilinearEngine eng(double(cell.L), n_g);
        double prev = eng.product_l2l2_sq(m1, m2, c1, c2, nt);
        double delta = 1.0;
        while (2 * nt <= tq.nt_max) {
            const double cur = eng.product_l2l2_sq(m1, m2, c1, c2, 2 * nt);
            delta = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
            nt *= 2;
            prev = cur;
            if (delta < tq.rel_tol) break;
        }
        stats.nt_used = nt;
        stats.quad_delta = delta;
    }

    stats.ratios.assign(trials, 0.0);
    parallel_for(trials, threads, [&](long trial) {
        BilinearEngine eng(double(cell.L), n_g);
        std::vector<cd> d1, d2;
        draw(int(trial), d1, d2);
        double n1 = 0.0, n2 = 0.0;
        for (const cd& z : d1) n1 += std::norm(z);
        for (const cd& z : d2) n2 += std::norm(z);
        const double I = eng.product_l2l2_sq(m1, m2, d1, d2, nt);
        stats.ratios[trial] = std::sqrt(I) / (denom_scale * std::sqrt(n1) * std::sqrt(n2));
    });

    double sum = 0.0, sum2 = 0.0;
    for (double r : stats.ratios) {
        stats.max = std::max(stats.max, r);
        sum += r;
        sum2 += r * r;
    }
    stats.mean = sum / trials;
    stats.stddev = std::sqrt(std::max(sum2 / trials - stats.mean * stats.mean, 0.0));

    if (refine_iters > 0) {
        // Alternating power iteration from the two best seeds; the refined data
        // is then measured through the standard pipeline.
        std::vector<int> order(trials);
        for (int i = 0; i < trials; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return stats.ratios[a] > stats.ratios[b]; });
        const int nseeds = std::min(2, trials);
        const int nt_ref = std::max(64, nt / 2);
        std::vector<double> refined(nseeds, 0.0);
        parallel_for(nseeds, threads, [&](long si) {
            BilinearEngine eng(double(cell.L), n_g);
            std::vector<cd> d1, d2, g;
            draw(order[si], d1, d2);
            for (int it = 0; it < refine_iters; ++it) {
                eng.apply(m1, m2, d1, d2, nt_ref, g);
                double n = 0.0;
                for (const cd& z : g) n += std::norm(z);
                n = std::sqrt(n);
                if (n > 0.0) {
                    for (std::size_t i = 0; i < g.size(); ++i) d1[i] = g[i] / n;
                }
                eng.apply(m2, m1, d2, d1, nt_ref, g);
                n = 0.0;
                for (const cd& z : g) n += std::norm(z);
                n = std::sqrt(n);
                if (n > 0.0) {
                    for (std::size_t i = 0; i < g.size(); ++i) d2[i] = g[i] / n;
                }
            }
            double n1 = 0.0, n2 = 0.0;
            for (const cd& z : d1) n1 += std::norm(z);
            for (const cd& z : d2) n2 += std::norm(z);
            const double I = eng.product_l2l2_sq(m1, m2, d1, d2, nt);
            refined[si] = std::sqrt(I) / (denom_scale * std::sqrt(n1) * std::sqrt(n2));
        });
        for (double r : refined) stats.refined_max = std::max(stats.refined_max, r);
        stats.refined_max = std::max(stats.refined_max, stats.max);
    }
    return stats;
}

// ---------------------------------------------------------------------------
// Semiclassical L4 estimate on the unit torus.

SemiclassicalStats semiclassicalImpl(std::int64_t h_inv, int trials, std::uint64_t seed,
                                     bool cube_variant, const TimeQuadSpec& tq, int threads) {
    FreqBox box = cube_variant
                      ? FreqBox::cube(Rational(), Rational(), Rational::of(2 * h_inv))
                      : FreqBox::annulus(Rational(), Rational(), Rational::of(h_inv),
                                         Rational::of(2 * h_inv));
    const auto pts = box.lattice_points(Rational::of(1));
    if (pts.empty()) throw std::invalid_argument("semiclassical_l4: empty band");
    std::vector<double> symbol(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        symbol[i] = p_symbol(pts[i].first, pts[i].second, 1.0);
    }
    const double h = 1.0 / double(h_inv);
    const int n_g = next_fast_size(int(8 * h_inv + 2));
    const std::size_t ng2 = std::size_t(n_g) * n_g;
    const double w_cell = 4.0 * M_PI * M_PI / double(ng2);
    const double basis = 1.0 / (2.0 * M_PI);

    auto l4_integral = [&](const std::vector<cd>& c, int nt) {
        std::vector<cd> buf(ng2), u(ng2);
        double acc = 0.0;
        for (int jt = 0; jt <= nt; ++jt) {
            const double t = h * jt / nt;
            std::fill(buf.begin(), buf.end(), cd(0.0, 0.0));
            for (std::size_t i = 0; i < pts.size(); ++i) {
                const int pi = (pts[i].first % n_g + n_g) % n_g;
                const int qi = (pts[i].second % n_g + n_g) % n_g;
                const double ph = t * symbol[i];
                buf[std::size_t(pi) * n_g + qi] = c[i] * cd(std::cos(ph), std::sin(ph));
            }
            dft_2d(n_g, n_g, buf.data(), u.data(), +1);
            double s = 0.0;
            for (const cd& z : u) {
                const double a2 = std::norm(z);
                s += a2 * a2;
            }
            s *= w_cell * basis * basis * basis * basis;
            acc += (jt == 0 || jt == nt) ? 0.5 * s : s;
        }
        return acc * h / nt;
    };

    auto draw = [&](int trial, std::vector<cd>& c) {
        GaussianRng rng(derive_seed(seed, 0x73656d69ULL + std::uint64_t(h_inv),
                                    std::uint64_t(cube_variant), std::uint64_t(trial)));
        c.resize(pts.size());
        for (cd& z : c) z = rng.complex_gaussian();
    };

    SemiclassicalStats stats;
    std::vector<cd> c0;
    draw(0, c0);
    int nt = tq.nt0;
    double prev = l4_integral(c0, nt);
    while (2 * nt <= tq.nt_max) {
        const double cur = l4_integral(c0, 2 * nt);
        const double delta = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
        nt *= 2;
        prev = cur;
        if (delta < tq.rel_tol) break;
    }
    stats.nt_used = nt;

    stats.ratios.assign(trials, 0.0);
    parallel_for(trials, threads, [&](long trial) {
        std::vector<cd> c;
        draw(int(trial), c);
        double n2 = 0.0;
        for (const cd& z : c) n2 += std::norm(z);
        stats.ratios[trial] = std::pow(l4_integral(c, nt), 0.25) / std::sqrt(n2);
    });
    double sum = 0.0, sum2 = 0.0;
    for (double r : stats.ratios) {
        stats.max = std::max(stats.max, r);
        sum += r;
        sum2 += r * r;
    }
    stats.mean = sum / trials;
    stats.stddev = std::sqrt(std::max(sum2 / trials - stats.mean * stats.mean, 0.0));
    return stats;
}

SemiclassicalStats semiclassical_l4(std::int64_t h_inv, int trials, std::uint64_t seed,
                                    bool cube_variant, const TimeQuadSpec& tq, int threads) {
    if (h_inv < 2 || (h_inv & (h_inv - 1))) {
        throw std::invalid_argument("semiclassical_l4: h^{-1} must be a dyadic >= 2");
    }
    return semiclassicalImpl(h_inv, trials, seed, cube_variant, tq, threads);
}

// ---------------------------------------------------------------------------
// Trilinear probe.

namespace {

// Trig-exact resampling of the tapered mode series onto a finer time grid.
std::vector<cd> resample_series(const SpaceTimeSpectrum& u, int nt_fine) {
    const long nmodes = u.grid.size();
    std::vector<cd> padded(std::size_t(nmodes) * nt_fine, cd(0.0, 0.0));
    for (long ij = 0; ij < nmodes; ++ij) {
        const cd* src = u.chat.data() + std::size_t(ij) * u.nt;
        cd* dst_row = padded.data() + std::size_t(ij) * nt_fine;
        for (int k = 0; k < u.nt; ++k) {
            const int f = TorusGrid::freq_of_index(k, u.nt);
            dst_row[TorusGrid::index_of_freq(f, nt_fine)] = src[k];
        }
    }
    std::vector<cd> series(padded.size());
    dft_1d_batch(nt_fine, int(nmodes), padded.data(), series.data(), +1);
    const double scale = u.dtau() / std::sqrt(2.0 * M_PI);
    for (cd& z : series) z *= scale;
    return series;
}

Spectrum scatter_to_grid(const SpaceTimeSpectrum& u, const std::vector<cd>& series, int nt_fine,
                         int jt, const TorusGrid& big) {
    Spectrum s(big);
    const int nx = u.grid.nx, ny = u.grid.ny;
    for (int i = 0; i < nx; ++i) {
        const int m = TorusGrid::freq_of_index(i, nx);
        for (int j = 0; j < ny; ++j) {
            const int n = TorusGrid::freq_of_index(j, ny);
            s.c_at(m, n) = series[(std::size_t(i) * ny + j) * nt_fine + jt];
        }
    }
    return s;
}

SpaceTimeSpectrum assemble_untapered(const TorusGrid& grid, double T_w,
                                     const std::vector<Spectrum>& series) {
    const int nt = int(series.size());
    SpaceTimeSpectrum st;
    st.grid = grid;
    st.T_w = T_w;
    st.nt = nt;
    st.chat.assign(std::size_t(grid.nx) * grid.ny * nt, cd(0.0, 0.0));
    std::vector<cd> tmp(st.chat.size());
    for (int k = 0; k < nt; ++k) {
        for (long ij = 0; ij < grid.size(); ++ij) {
            tmp[std::size_t(ij) * nt + k] = series[k].c[ij];
        }
    }
    dft_1d_batch(nt, grid.nx * grid.ny, tmp.data(), st.chat.data(), -1);
    const double scale = (T_w / nt) / std::sqrt(2.0 * M_PI);
    for (cd& z : st.chat) z *= scale;
    return st;
}

}  // namespace

TrilinearResult trilinear_probe(const SpaceTimeSpectrum& u1, const SpaceTimeSpectrum& u2,
                                const SpaceTimeSpectrum& u3, double s, double b, double bprime) {
    if (!(u1.grid == u2.grid) || !(u1.grid == u3.grid) || u1.nt != u2.nt || u1.nt != u3.nt) {
        throw std::invalid_argument("trilinear_probe: inputs must share grid and window");
    }
    const int nt_fine = 4 * u1.nt;
    const int n_prod = next_fast_size(3 * u1.grid.nx + 2);
    TorusGrid big{u1.grid.L, n_prod, n_prod};

    const std::vector<cd> s1 = resample_series(u1, nt_fine);
    const std::vector<cd> s2 = resample_series(u2, nt_fine);
    const std::vector<cd> s3 = resample_series(u3, nt_fine);

    std::vector<Spectrum> prod_nonlocal(nt_fine, Spectrum(big)), prod_plain(nt_fine, Spectrum(big));
    for (int jt = 0; jt < nt_fine; ++jt) {
        const Field f1 = inverse_transform(scatter_to_grid(u1, s1, nt_fine, jt, big));
        const Field f2 = inverse_transform(scatter_to_grid(u2, s2, nt_fine, jt, big));
        const Field f3 = inverse_transform(scatter_to_grid(u3, s3, nt_fine, jt, big));
        Field g12(big);
        for (std::size_t i = 0; i < g12.v.size(); ++i) g12.v[i] = f1.v[i] * f2.v[i];
        const Field Eg12 = inverse_transform(apply_e(transform(g12)));
        Field a(big), c(big);
        for (std::size_t i = 0; i < a.v.size(); ++i) {
            a.v[i] = Eg12.v[i] * f3.v[i];
            c.v[i] = g12.v[i] * f3.v[i];
        }
        prod_nonlocal[jt] = transform(a);
        prod_plain[jt] = transform(c);
    }
    const SpaceTimeSpectrum Pn = assemble_untapered(big, u1.T_w, prod_nonlocal);
    const SpaceTimeSpectrum Pp = assemble_untapered(big, u1.T_w, prod_plain);

    const double denom = xsb_norm(u1, s, b) * xsb_norm(u2, s, b) * xsb_norm(u3, s, b);
    if (denom == 0.0) throw std::invalid_argument("trilinear_probe: zero input norm");
    TrilinearResult out;
    out.ratio_nonlocal = xsb_norm(Pn, s, -bprime) / denom;
    out.ratio_plain = xsb_norm(Pp, s, -bprime) / denom;
    return out;
}

std::vector<TrilinearResult> trilinear_ensemble(const TrilinearConfig& cfg, int trials,
                                                std::uint64_t seed, bool worst_case, int threads) {
    if (cfg.extent < 1 || cfg.extent > 10) {
        throw std::invalid_argument(
            "trilinear_ensemble: extent must lie in [1, 10] (tau coverage of the product grows "
            "like extent^2)");
    }
    const int n_s = next_fast_size(2 * cfg.extent + 10);
    // tau grid must cover the symbols of the box plus the band.
    const double pmax = double(cfg.extent) * cfg.extent;
    int nt = next_pow2(int(2.2 * (pmax + 4.0 * cfg.band_R) + 8));
    nt = std::max(nt, cfg.nt);
    TorusGrid grid{1.0, n_s, n_s};

    const FreqBox low = FreqBox::cube(Rational(), Rational(), Rational::of(1));
    const FreqBox high = FreqBox::annulus(Rational(), Rational(), Rational::of(cfg.extent / 2),
                                          Rational::of(cfg.extent));
    const ModBand band = ModBand::of(cfg.band_R);

    // Random ensemble: independent dyadic shells per factor, mirroring the
    // frequency decomposition the estimate is summed over. The worst-case
    // variant pins the two factors inside the nonlocal term to the lowest
    // shell and the third to the top one.
    auto random_shell = [&](std::uint64_t sd) {
        std::mt19937_64 gen(sd);
        const int levels = std::max(1, int(std::log2(double(cfg.extent))) + 1);
        std::int64_t N = std::int64_t(1) << (gen() % levels);
        if (N > cfg.extent) N = cfg.extent;
        if (N == 1) return FreqBox::cube(Rational(), Rational(), Rational::of(1));
        return FreqBox::annulus(Rational(), Rational(), Rational::of(N / 2), Rational::of(N));
    };

    std::vector<TrilinearResult> out(trials);
    parallel_for(trials, threads, [&](long trial) {
        const std::uint64_t s1 = derive_seed(seed, 0x747269ULL, std::uint64_t(trial), 1);
        const std::uint64_t s2 = derive_seed(seed, 0x747269ULL, std::uint64_t(trial), 2);
        const std::uint64_t s3 = derive_seed(seed, 0x747269ULL, std::uint64_t(trial), 3);
        const SpaceTimeSpectrum v1 = random_spacetime(
            grid, 2.0 * M_PI, nt, worst_case ? low : random_shell(splitmix64(s1)), band, s1);
        const SpaceTimeSpectrum v2 = random_spacetime(
            grid, 2.0 * M_PI, nt, worst_case ? low : random_shell(splitmix64(s2)), band, s2);
        const SpaceTimeSpectrum v3 = random_spacetime(
            grid, 2.0 * M_PI, nt, worst_case ? high : random_shell(splitmix64(s3)), band, s3);
        out[trial] = trilinear_probe(v1, v2, v3, cfg.s, cfg.b, cfg.bprime);
    });
    return out;
}

}  // namespace dst
