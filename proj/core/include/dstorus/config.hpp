#ifndef DSTORUS_CONFIG_HPP
#define DSTORUS_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dstorus/evolve.hpp"
#include "dstorus/hypnls.hpp"
#include "dstorus/ozawa.hpp"

namespace dst::io {

// Initial data menu for run/sweep configs. Fields are interpreted per kind.
struct InitialCondition {
    std::string kind = "zero";  // zero | modes | dila_profile | ozawa_cutoff | random_smooth
    // modes: explicit coefficient list
    struct Mode {
        int m = 0, n = 0;
        double re = 0.0, im = 0.0;
    };
    std::vector<Mode> modes;
    // dila_profile
    ProfileSpec profile;
    // ozawa_cutoff
    OzawaParams ozawa;
    double t0 = 0.0;
    double r0 = 0.0, r1 = 0.0;
    // random_smooth: Gaussian coefficients damped beyond kmax
    int kmax = 8;
    // common multiplier
    double amplitude = 1.0;

    Field build(const TorusGrid& grid, std::uint64_t seed) const;
};

struct RunSpec {
    SolverConfig solver;
    InitialCondition initial;
    long checkpoint_every = 0;  // steps; 0 disables
};

struct LabSpec {
    std::string probe = "bilinear";  // bilinear | semiclassical | band_bounds | trilinear
    std::vector<std::int64_t> L_list = {1, 2, 4, 8};
    std::vector<std::int64_t> N_list = {1, 2, 4, 8, 16};
    std::vector<std::int64_t> h_inv_list = {2, 4, 8, 16};
    std::vector<long> centers;  // flat (a1,b1,a2,b2) tuples for translation sweeps
    int trials = 50;
    double s = 0.75, b = 0.55, bprime = 0.45;
    int extent = 8;
    std::int64_t band_R = 4;
    double quad_rel_tol = 1e-6;
    int quad_nt_max = 2048;
    int refine_iters = 0;  // bilinear extremal refinement (0 = raw trials only)
    bool worst_case = false;
};

enum class ConfigKind { run, sweep, lab };

struct ParsedConfig {
    ConfigKind kind = ConfigKind::run;
    RunSpec run;                        // for kind run (and the sweep base)
    std::vector<RunSpec> sweep_runs;    // expanded runs for kind sweep
    std::vector<std::string> sweep_labels;
    LabSpec lab;
    std::string echo;                   // normalized config (JSON text)
    std::vector<std::string> explicit_keys;  // provenance: keys the user set
};

// Parses the JSON configuration. All violations (unknown keys, type errors,
// constraint failures) are reported together in one exception message.
ParsedConfig parse_config(const std::string& text);

}  // namespace dst::io

#endif
