#include "dstorus/config.hpp"

#include <json.hpp>

#include <cmath>
#include <stdexcept>

#include "dstorus/fft.hpp"
#include "dstorus/operators.hpp"
#include "dstorus/rng.hpp"
#include "dstorus/sampling.hpp"

namespace dst::io {

using nlohmann::json;

Field InitialCondition::build(const TorusGrid& grid, std::uint64_t seed) const {
    Field u(grid);
    if (kind == "zero") {
        return u;
    }
    if (kind == "modes") {
        Spectrum s(grid);
        for (const Mode& md : modes) s.c_at(md.m, md.n) = cd(md.re, md.im) * amplitude;
        return inverse_transform(s);
    }
    if (kind == "dila_profile") {
        SampleResult r = sample_hypnls_on_torus(profile, t0, grid);
        if (amplitude != 1.0) {
            for (cd& z : r.field.v) z *= amplitude;
        }
        return r.field;
    }
    if (kind == "ozawa_cutoff") {
        SampleResult r = sample_ozawa_on_torus(ozawa, t0, grid, Cutoff::bump(r0, r1), amplitude);
        return r.field;
    }
    if (kind == "random_smooth") {
        GaussianRng rng(seed);
        Spectrum s(grid);
        for (int m = -kmax; m <= kmax; ++m) {
            for (int n = -kmax; n <= kmax; ++n) {
                const double damp = std::exp(-(double(m) * m + double(n) * n) / (kmax * kmax));
                s.c_at(m, n) = rng.complex_gaussian() * damp * amplitude;
            }
        }
        return inverse_transform(s);
    }
    throw std::invalid_argument("InitialCondition: unknown kind '" + kind + "'");
}

namespace {

struct Check {
    std::vector<std::string> errors;
    std::vector<std::string> explicit_keys;

    void fail(const std::string& msg) { errors.push_back(msg); }

    void known_keys(const json& obj, const std::string& where,
                    std::initializer_list<const char*> keys) {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            bool ok = false;
            for (const char* k : keys) {
                if (it.key() == k) {
                    ok = true;
                    break;
                }
            }
            if (!ok) fail(where + ": unknown key '" + it.key() + "'");
        }
    }

    template <typename T>
    void get(const json& obj, const std::string& where, const char* key, T& out) {
        if (!obj.contains(key)) return;
        try {
            out = obj.at(key).get<T>();
            explicit_keys.push_back(where + "." + key);
        } catch (const json::exception&) {
            fail(where + "." + key + ": wrong type");
        }
    }
};

void parse_initial(Check& ck, const json& j, InitialCondition& ic) {
    ck.known_keys(j, "initial",
                  {"kind", "modes", "profile_c0", "profile_cos", "profile_sin", "a", "b", "t0",
                   "r0", "r1", "kmax", "amplitude"});
    ck.get(j, "initial", "kind", ic.kind);
    ck.get(j, "initial", "t0", ic.t0);
    ck.get(j, "initial", "r0", ic.r0);
    ck.get(j, "initial", "r1", ic.r1);
    ck.get(j, "initial", "kmax", ic.kmax);
    ck.get(j, "initial", "amplitude", ic.amplitude);
    ck.get(j, "initial", "a", ic.ozawa.a);
    ck.get(j, "initial", "b", ic.ozawa.b);
    ck.get(j, "initial", "profile_c0", ic.profile.c0);
    ck.get(j, "initial", "profile_cos", ic.profile.cos_coeffs);
    ck.get(j, "initial", "profile_sin", ic.profile.sin_coeffs);
    if (j.contains("modes")) {
        if (!j.at("modes").is_array()) {
            ck.fail("initial.modes: must be an array of [m, n, re, im]");
        } else {
            for (const auto& e : j.at("modes")) {
                if (!e.is_array() || e.size() != 4) {
                    ck.fail("initial.modes: entries must be [m, n, re, im]");
                    break;
                }
                ic.modes.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<double>(),
                                    e[3].get<double>()});
            }
            ck.explicit_keys.push_back("initial.modes");
        }
    }
    const std::vector<std::string> kinds = {"zero", "modes", "dila_profile", "ozawa_cutoff",
                                            "random_smooth"};
    if (std::find(kinds.begin(), kinds.end(), ic.kind) == kinds.end()) {
        ck.fail("initial.kind: unknown value '" + ic.kind + "'");
    }
}

void parse_run(Check& ck, const json& j, RunSpec& run) {
    ck.known_keys(j, "config",
                  {"grid", "time", "nonlinearity", "diagnostics", "initial", "sweep",
                   "checkpoint_every", "lab"});
    if (j.contains("grid")) {
        const json& g = j.at("grid");
        ck.known_keys(g, "grid", {"L", "nx", "ny"});
        ck.get(g, "grid", "L", run.solver.L);
        ck.get(g, "grid", "nx", run.solver.nx);
        ck.get(g, "grid", "ny", run.solver.ny);
    }
    if (j.contains("time")) {
        const json& g = j.at("time");
        ck.known_keys(g, "time", {"dt0", "t_end", "adaptive"});
        ck.get(g, "time", "dt0", run.solver.dt0);
        ck.get(g, "time", "t_end", run.solver.t_end);
        ck.get(g, "time", "adaptive", run.solver.adaptive);
    }
    if (j.contains("nonlinearity")) {
        const json& g = j.at("nonlinearity");
        ck.known_keys(g, "nonlinearity", {"sigma", "e_enabled", "dealias"});
        ck.get(g, "nonlinearity", "sigma", run.solver.sigma);
        ck.get(g, "nonlinearity", "e_enabled", run.solver.e_enabled);
        ck.get(g, "nonlinearity", "dealias", run.solver.dealias);
    }
    if (j.contains("diagnostics")) {
        const json& g = j.at("diagnostics");
        ck.known_keys(g, "diagnostics", {"s_list", "linf_max", "tail_max", "sample_every"});
        ck.get(g, "diagnostics", "s_list", run.solver.s_list);
        ck.get(g, "diagnostics", "linf_max", run.solver.linf_max);
        ck.get(g, "diagnostics", "tail_max", run.solver.tail_max);
        ck.get(g, "diagnostics", "sample_every", run.solver.sample_every);
    }
    if (j.contains("initial")) parse_initial(ck, j.at("initial"), run.initial);
    ck.get(j, "config", "checkpoint_every", run.checkpoint_every);

    // Constraint checks, all reported together.
    const SolverConfig& sc = run.solver;
    if (!(sc.L > 0.0)) ck.fail("grid.L: must be positive");
    if (sc.nx < 4 || sc.ny < 4) ck.fail("grid: nx, ny must be >= 4");
    if (sc.nx % 2 || sc.ny % 2) ck.fail("grid: nx, ny must be even");
    if (!(sc.dt0 > 0.0)) ck.fail("time.dt0: must be positive");
    if (!(sc.t_end > 0.0)) ck.fail("time.t_end: must be positive");
    if (!(sc.tail_max > 0.0 && sc.tail_max < 1.0)) ck.fail("diagnostics.tail_max: must be in (0,1)");
    if (sc.sigma != 1 && sc.sigma != -1) ck.fail("nonlinearity.sigma: must be +1 or -1");
    if (sc.s_list.empty()) ck.fail("diagnostics.s_list: must not be empty");
    for (double s : sc.s_list) {
        if (!(s > 0.5 && s < 1.0) && !(s >= 0.0)) ck.fail("diagnostics.s_list: s must be >= 0");
    }
    if (sc.sample_every < 1) ck.fail("diagnostics.sample_every: must be >= 1");
    if (run.initial.kind == "ozawa_cutoff") {
        if (!(run.initial.r0 > 0.0) || !(run.initial.r1 > run.initial.r0)) {
            ck.fail("initial: ozawa_cutoff needs 0 < r0 < r1");
        }
    }
}

void parse_lab(Check& ck, const json& j, LabSpec& lab) {
    ck.known_keys(j, "lab",
                  {"probe", "L_list", "N_list", "h_inv_list", "centers", "trials", "s", "b",
                   "bprime", "extent", "band_R", "quad_rel_tol", "quad_nt_max", "refine_iters", "worst_case"});
    ck.get(j, "lab", "probe", lab.probe);
    ck.get(j, "lab", "L_list", lab.L_list);
    ck.get(j, "lab", "N_list", lab.N_list);
    ck.get(j, "lab", "h_inv_list", lab.h_inv_list);
    ck.get(j, "lab", "centers", lab.centers);
    ck.get(j, "lab", "trials", lab.trials);
    ck.get(j, "lab", "s", lab.s);
    ck.get(j, "lab", "b", lab.b);
    ck.get(j, "lab", "bprime", lab.bprime);
    ck.get(j, "lab", "extent", lab.extent);
    ck.get(j, "lab", "band_R", lab.band_R);
    ck.get(j, "lab", "quad_rel_tol", lab.quad_rel_tol);
    ck.get(j, "lab", "quad_nt_max", lab.quad_nt_max);
    ck.get(j, "lab", "refine_iters", lab.refine_iters);
    ck.get(j, "lab", "worst_case", lab.worst_case);
    const std::vector<std::string> probes = {"bilinear", "semiclassical", "band_bounds",
                                             "trilinear"};
    if (std::find(probes.begin(), probes.end(), lab.probe) == probes.end()) {
        ck.fail("lab.probe: unknown value '" + lab.probe + "'");
    }
    if (lab.trials < 1) ck.fail("lab.trials: must be >= 1");
    if (!lab.centers.empty() && lab.centers.size() % 4 != 0) {
        ck.fail("lab.centers: flat list of (a1,b1,a2,b2) tuples");
    }
}

json* find_path(json& root, const std::string& dotted) {
    json* cur = &root;
    std::size_t pos = 0;
    while (true) {
        const std::size_t dot = dotted.find('.', pos);
        const std::string key = dotted.substr(pos, dot - pos);
        if (!cur->is_object()) return nullptr;
        if (dot == std::string::npos) {
            return &((*cur)[key]);
        }
        if (!cur->contains(key)) (*cur)[key] = json::object();
        cur = &((*cur)[key]);
        pos = dot + 1;
    }
}

}  // namespace

ParsedConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: JSON parse error: ") + e.what());
    }
    ParsedConfig out;
    Check ck;

    if (j.contains("lab")) {
        out.kind = ConfigKind::lab;
        parse_lab(ck, j.at("lab"), out.lab);
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() != "lab") ck.fail("config: unknown key '" + it.key() + "' beside lab");
        }
    } else {
        parse_run(ck, j, out.run);
        if (j.contains("sweep")) {
            out.kind = ConfigKind::sweep;
            const json& sw = j.at("sweep");
            ck.known_keys(sw, "sweep", {"axis", "values"});
            std::string axis;
            ck.get(sw, "sweep", "axis", axis);
            if (!sw.contains("values") || !sw.at("values").is_array() || axis.empty()) {
                ck.fail("sweep: needs 'axis' (dotted key) and 'values' (array)");
            } else if (ck.errors.empty()) {
                json base = j;
                base.erase("sweep");
                for (const auto& v : sw.at("values")) {
                    json run_j = base;
                    json* slot = find_path(run_j, axis);
                    if (!slot) {
                        ck.fail("sweep.axis: path '" + axis + "' not addressable");
                        break;
                    }
                    *slot = v;
                    Check ck2;
                    RunSpec rs;
                    parse_run(ck2, run_j, rs);
                    for (const std::string& e : ck2.errors) ck.fail("sweep[" + v.dump() + "]: " + e);
                    out.sweep_runs.push_back(rs);
                    out.sweep_labels.push_back(axis + "=" + v.dump());
                }
            }
        }
    }

    if (!ck.errors.empty()) {
        std::string msg = "config: " + std::to_string(ck.errors.size()) + " problem(s):";
        for (const std::string& e : ck.errors) msg += "\n  - " + e;
        throw std::invalid_argument(msg);
    }
    out.echo = j.dump(2);
    out.explicit_keys = ck.explicit_keys;
    return out;
}

}  // namespace dst::io
