#include "dstorus/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dstorus/fft.hpp"
#include "dstorus/nonlinear.hpp"
#include "dstorus/norms.hpp"
#include "dstorus/operators.hpp"

namespace dst {

void SolverConfig::validate() const {
    std::string errs;
    auto add = [&errs](const std::string& e) {
        if (!errs.empty()) errs += "; ";
        errs += e;
    };
    if (!(L > 0.0)) add("L must be positive");
    if (nx < 4 || ny < 4) add("nx, ny must be >= 4");
    if (nx % 2 || ny % 2) add("nx, ny must be even");
    if (!(dt0 > 0.0)) add("dt0 must be positive");
    if (!(t_end > 0.0)) add("t_end must be positive");
    if (!(tail_max > 0.0 && tail_max < 1.0)) add("tail_max must lie in (0,1)");
    if (sigma != 1 && sigma != -1) add("sigma must be +1 or -1");
    if (s_list.empty()) add("s_list must not be empty");
    if (sample_every < 1) add("sample_every must be >= 1");
    if (!errs.empty()) throw std::invalid_argument("SolverConfig: " + errs);
}

std::vector<double> SolverConfig::theorem_range_s() const {
    std::vector<double> out;
    for (double s : s_list) {
        if (s > 0.5 && s < 1.0) out.push_back(s);
    }
    return out;
}

std::string to_string(RunStatus s) {
    switch (s) {
        case RunStatus::completed: return "completed";
        case RunStatus::resolution_limited_blowup: return "resolution_limited_blowup";
        case RunStatus::norm_threshold: return "norm_threshold";
    }
    return "unknown";
}

void strang_step_inplace(Spectrum& state, double dt, const SolverConfig& config,
                         double* linf_out) {
    propagate_linear_inplace(state, dt / 2.0);
    Field u = inverse_transform(state);

    // The phase substep is exact for any real V; the 2/3 mask enters through the
    // E input and the state filter below. Without E the raw |u|^2 needs no
    // transforms at all.
    std::vector<double> V =
        potential(u, config.sigma, config.e_enabled, config.dealias && config.e_enabled);
    double linf2 = 0.0;
    for (std::size_t i = 0; i < u.v.size(); ++i) {
        linf2 = std::max(linf2, std::norm(u.v[i]));
        const double phase = dt * V[i];
        u.v[i] *= cd(std::cos(phase), std::sin(phase));
    }
    if (linf_out) *linf_out = std::sqrt(linf2);

    state = transform(u);
    if (config.dealias) dealias_inplace(state);
    propagate_linear_inplace(state, dt / 2.0);
}

Field strang_step(const Field& u, double dt, const SolverConfig& config) {
    Spectrum s = transform(u);
    strang_step_inplace(s, dt, config);
    Field out = inverse_transform(s);
    if (!all_finite(out)) {
        throw std::runtime_error("strang_step: non-finite state (blow-up handling should engage)");
    }
    return out;
}

namespace {

std::vector<double> concentration_fractions(const Field& u, const std::vector<double>& radii) {
    // Mass fraction within torus distance r of the density peak.
    const TorusGrid& g = u.grid;
    double peak = -1.0;
    int pj = 0, pk = 0;
    for (int j = 0; j < g.nx; ++j) {
        for (int k = 0; k < g.ny; ++k) {
            const double a = std::norm(u.at(j, k));
            if (a > peak) {
                peak = a;
                pj = j;
                pk = k;
            }
        }
    }
    const double P = g.period();
    double total = 0.0;
    std::vector<double> in(radii.size(), 0.0);
    for (int j = 0; j < g.nx; ++j) {
        double ddx = std::abs(g.x(j) - g.x(pj));
        ddx = std::min(ddx, P - ddx);
        for (int k = 0; k < g.ny; ++k) {
            double ddy = std::abs(g.y(k) - g.y(pk));
            ddy = std::min(ddy, P - ddy);
            const double r = std::hypot(ddx, ddy);
            const double a = std::norm(u.at(j, k));
            total += a;
            for (std::size_t ri = 0; ri < radii.size(); ++ri) {
                if (r <= radii[ri]) in[ri] += a;
            }
        }
    }
    if (total > 0.0) {
        for (double& f : in) f /= total;
    }
    return in;
}

struct SampleDiag {
    double mass, linf, l4, tailf;
};

SampleDiag sample_diagnostics(const Spectrum& state, const Field& u, int kx, int ky) {
    SampleDiag d;
    d.mass = l2_norm(state);
    d.linf = linf_norm(u);
    d.l4 = lp_norm(u, 4);
    d.tailf = tail_fraction(state, kx, ky);
    return d;
}

}  // namespace

RunStatus detect_blowup(const Trajectory& traj, const SolverConfig& config) {
    if (traj.rows() == 0) throw std::invalid_argument("detect_blowup: empty trajectory");
    for (std::size_t i = 0; i < traj.rows(); ++i) {
        if (traj.linf[i] > config.linf_max) return RunStatus::norm_threshold;
        if (traj.tail[i] > config.tail_max) return RunStatus::resolution_limited_blowup;
    }
    return RunStatus::completed;
}

std::pair<std::size_t, std::size_t> fit_window(const Trajectory& traj, std::size_t s_index,
                                               double tail_max) {
    const auto& v = traj.hs_dot[s_index];
    std::size_t end = traj.rows();
    // Drop trailing rows that are past the resolution limit.
    while (end > 0 && traj.tail[end - 1] > tail_max) --end;
    if (end == 0) return {0, 0};
    double vmax = 0.0;
    for (std::size_t i = 0; i < end; ++i) vmax = std::max(vmax, v[i]);
    // Trailing nondecreasing stretch within the top two decades of growth.
    std::size_t begin = end - 1;
    while (begin > 0) {
        const std::size_t i = begin - 1;
        if (v[i] < vmax / 100.0) break;
        if (v[i] > v[begin] * (1.0 + 1e-9)) break;  // growth broken
        begin = i;
    }
    return {begin, end};
}

RunResult run_simulation(const Field& u0, const SolverConfig& config, const StepObserver& observer) {
    config.validate();
    if (u0.grid.nx != config.nx || u0.grid.ny != config.ny) {
        throw std::invalid_argument("run_simulation: u0 grid does not match config");
    }
    if (!all_finite(u0)) throw std::invalid_argument("run_simulation: non-finite initial data");

    const int kx = config.dealias ? dealias_cutoff(config.nx) : config.nx / 2 - 1;
    const int ky = config.dealias ? dealias_cutoff(config.ny) : config.ny / 2 - 1;

    RunResult res;
    Trajectory& traj = res.trajectory;
    traj.s_list = config.s_list;
    traj.hs.resize(config.s_list.size());
    traj.hs_dot.resize(config.s_list.size());

    BlowupReport& rep = res.report;
    const double Ls = config.L;
    rep.concentration_radii = {Ls / 2.0, Ls / 4.0, Ls / 8.0, Ls / 16.0};

    Spectrum state = transform(u0);
    if (config.dealias) dealias_inplace(state);
    Field u = inverse_transform(state);

    double t = 0.0;
    long step = 0;
    double linf = linf_norm(u);
    double last_l4 = lp_norm(u, 4);
    double l4acc = 0.0;
    double last_sample_t = 0.0;

    rep.initial_tail_warning = tail_fraction(state, kx, ky) > config.tail_max / 10.0;

    auto emit = [&](double dt_for_row) {
        const SampleDiag d = sample_diagnostics(state, u, kx, ky);
        if (!traj.t.empty()) {
            const double l44 = d.l4 * d.l4 * d.l4 * d.l4;
            const double p44 = last_l4 * last_l4 * last_l4 * last_l4;
            l4acc += 0.5 * (l44 + p44) * (t - last_sample_t);
        }
        last_l4 = d.l4;
        last_sample_t = t;
        traj.t.push_back(t);
        traj.mass.push_back(d.mass);
        for (std::size_t si = 0; si < config.s_list.size(); ++si) {
            traj.hs[si].push_back(hs_norm(state, config.s_list[si]));
            traj.hs_dot[si].push_back(hs_seminorm(state, config.s_list[si]));
        }
        traj.linf.push_back(d.linf);
        traj.l4acc.push_back(l4acc);
        traj.tail.push_back(d.tailf);
        traj.dt_used.push_back(dt_for_row);
        rep.concentration.push_back({t, concentration_fractions(u, rep.concentration_radii)});
        return std::pair<double, double>(d.linf, d.tailf);
    };

    emit(config.dt0);
    if (observer) observer(state, t, step);

    RunStatus status = RunStatus::completed;
    bool stopped = false;
    while (t < config.t_end - 1e-15 && !stopped) {
        double dt = config.dt0;
        if (config.adaptive) {
            dt = config.dt0 / (1.0 + linf * linf);
            dt = std::clamp(dt, config.dt0 * 1e-6, config.dt0);
        }
        dt = std::min(dt, config.t_end - t);

        strang_step_inplace(state, dt, config, &linf);
        t += dt;
        ++step;

        if (!all_finite(state)) {
            status = RunStatus::resolution_limited_blowup;
            stopped = true;
            break;  // truncated trajectory; the bad state is not emitted
        }

        if (step % config.sample_every == 0 || t >= config.t_end - 1e-15) {
            u = inverse_transform(state);
            const auto [li, tf] = emit(dt);
            if (observer) observer(state, t, step);
            if (li > config.linf_max) {
                status = RunStatus::norm_threshold;
                stopped = true;
            } else if (tf > config.tail_max) {
                status = RunStatus::resolution_limited_blowup;
                stopped = true;
            }
        }
    }

    rep.status = status;
    rep.stop_time = traj.t.empty() ? 0.0 : traj.t.back();

    if (status != RunStatus::completed) {
        for (std::size_t si = 0; si < config.s_list.size(); ++si) {
            const double s = config.s_list[si];
            const auto [b, e] = fit_window(traj, si, config.tail_max);
            if (e - b < 8) {
                rep.fit_notes.push_back("s=" + std::to_string(s) +
                                        ": window too short for a rate fit");
                continue;
            }
            std::vector<double> tw(traj.t.begin() + b, traj.t.begin() + e);
            std::vector<double> vw(traj.hs_dot[si].begin() + b, traj.hs_dot[si].begin() + e);
            try {
                rep.fits.push_back(fit_rate(tw, vw, s));
            } catch (const std::exception& ex) {
                rep.fit_notes.push_back("s=" + std::to_string(s) + ": " + ex.what());
            }
        }
    }
    return res;
}

}  // namespace dst
