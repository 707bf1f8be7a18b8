#ifndef DSTORUS_EVOLVE_HPP
#define DSTORUS_EVOLVE_HPP

#include <functional>
#include <string>
#include <vector>

#include "dstorus/field.hpp"
#include "dstorus/ratefit.hpp"

namespace dst {

struct SolverConfig {
    double L = 1.0;
    int nx = 128;
    int ny = 128;
    std::vector<double> s_list = {0.75};
    double dt0 = 1e-3;
    double t_end = 1.0;
    int sigma = +1;          // sign of the nonlocal term: RHS is -|u|^2 u - sigma E(|u|^2) u
    bool e_enabled = true;   // false solves the plain cubic hyperbolic equation
    bool adaptive = false;   // dt = dt0 / (1 + |u|_inf^2), clamped to [dt0*1e-6, dt0]
    bool dealias = true;     // 2/3 mask applied to the state after each nonlinear substep
    double linf_max = 1e6;
    double tail_max = 1e-4;
    int sample_every = 5;    // diagnostics cadence in steps

    void validate() const;   // throws with all violations listed at once
    // s values in (1/2, 1): the regularities the run is judged against.
    std::vector<double> theorem_range_s() const;
};

struct Trajectory {
    std::vector<double> s_list;
    std::vector<double> t;
    std::vector<double> mass;                 // L2 norm
    std::vector<std::vector<double>> hs;      // hs[si][row], inhomogeneous norm
    std::vector<std::vector<double>> hs_dot;  // homogeneous seminorm (the scale carrier)
    std::vector<double> linf;
    std::vector<double> l4acc;                // int_0^t |u|_L4^4 dtau (trapezoid over samples)
    std::vector<double> tail;                 // top-octave spectral fraction
    std::vector<double> dt_used;
    std::size_t rows() const { return t.size(); }
};

enum class RunStatus { completed, resolution_limited_blowup, norm_threshold };
std::string to_string(RunStatus s);

struct ConcentrationSample {
    double t;
    std::vector<double> fraction;  // mass fraction in balls around the density peak
};

struct BlowupReport {
    RunStatus status = RunStatus::completed;
    double stop_time = 0.0;
    bool initial_tail_warning = false;
    // Rate fits per tracked s on the homogeneous seminorm series: at desk scale
    // the conserved mass floors the inhomogeneous norm, while any lower bound
    // demonstrated on the seminorm transfers to the full norm.
    std::vector<RateFit> fits;
    std::vector<std::string> fit_notes;         // reasons for omitted fits
    std::vector<double> concentration_radii;
    std::vector<ConcentrationSample> concentration;
};

// One Strang step: half linear flow, exact nonlinear phase substep, half linear flow.
// Second-order accurate; both substeps are L2 isometries up to the dealias mask.
Field strang_step(const Field& u, double dt, const SolverConfig& config);

// Spectral-resident variant used by the main loop.
void strang_step_inplace(Spectrum& state, double dt, const SolverConfig& config,
                         double* linf_out = nullptr);

using StepObserver = std::function<void(const Spectrum& state, double t, long step)>;

struct RunResult {
    Trajectory trajectory;
    BlowupReport report;
};

// Integrates from u0 until t_end or a stop condition, sampling diagnostics at the
// configured cadence and fitting blow-up rates on the trailing resolved window.
RunResult run_simulation(const Field& u0, const SolverConfig& config,
                         const StepObserver& observer = nullptr);

// First-crossing classification of a finished trajectory.
RunStatus detect_blowup(const Trajectory& traj, const SolverConfig& config);

// Trailing fit window: resolved samples (tail < tail_max) within the top two
// decades of growth. Returns indices [begin, end) into the trajectory rows.
std::pair<std::size_t, std::size_t> fit_window(const Trajectory& traj, std::size_t s_index,
                                               double tail_max);

}  // namespace dst

#endif
