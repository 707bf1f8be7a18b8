#include "dstorus/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

// All plans use FFTW_ESTIMATE: plan selection is then a deterministic function of the
// problem shape, which keeps reruns bitwise reproducible. Plan creation is serialized
// (FFTW's planner is not thread-safe); fftw_execute_dft on distinct arrays is.

namespace dst {
namespace {

struct PlanCache {
    std::mutex mu;
    // key: (nx, ny, sign, alignment of in, alignment of out)
    std::map<std::tuple<int, int, int, int, int>, fftw_plan> plans2d;
    // key: (n, howmany, sign, align in, align out)
    std::map<std::tuple<int, int, int, int, int>, fftw_plan> plans1d;

    ~PlanCache() {
        for (auto& [k, p] : plans2d) fftw_destroy_plan(p);
        for (auto& [k, p] : plans1d) fftw_destroy_plan(p);
    }
};

PlanCache& cache() {
    static PlanCache c;
    return c;
}

fftw_complex* fc(cd* p) { return reinterpret_cast<fftw_complex*>(p); }
const fftw_complex* fc(const cd* p) { return reinterpret_cast<const fftw_complex*>(p); }

}  // namespace

void dft_2d(int nx, int ny, const cd* in, cd* out, int sign) {
    if (in == out) throw std::invalid_argument("dft_2d: in-place transform not supported");
    auto* inp = const_cast<fftw_complex*>(fc(in));
    auto* outp = fc(out);
    const int ai = fftw_alignment_of(reinterpret_cast<double*>(inp));
    const int ao = fftw_alignment_of(reinterpret_cast<double*>(outp));
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(cache().mu);
        auto key = std::make_tuple(nx, ny, sign, ai, ao);
        auto it = cache().plans2d.find(key);
        if (it == cache().plans2d.end()) {
            // FFTW_ESTIMATE does not touch the arrays, so planning on user data is safe.
            plan = fftw_plan_dft_2d(nx, ny, inp, outp, sign, FFTW_ESTIMATE);
            if (!plan) throw std::runtime_error("dft_2d: fftw plan creation failed");
            cache().plans2d.emplace(key, plan);
        } else {
            plan = it->second;
        }
    }
    fftw_execute_dft(plan, inp, outp);
}

void dft_1d_batch(int n, int howmany, const cd* in, cd* out, int sign) {
    if (in == out) throw std::invalid_argument("dft_1d_batch: in-place transform not supported");
    auto* inp = const_cast<fftw_complex*>(fc(in));
    auto* outp = fc(out);
    const int ai = fftw_alignment_of(reinterpret_cast<double*>(inp));
    const int ao = fftw_alignment_of(reinterpret_cast<double*>(outp));
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(cache().mu);
        auto key = std::make_tuple(n, howmany, sign, ai, ao);
        auto it = cache().plans1d.find(key);
        if (it == cache().plans1d.end()) {
            plan = fftw_plan_many_dft(1, &n, howmany, inp, nullptr, 1, n, outp, nullptr, 1, n,
                                      sign, FFTW_ESTIMATE);
            if (!plan) throw std::runtime_error("dft_1d_batch: fftw plan creation failed");
            cache().plans1d.emplace(key, plan);
        } else {
            plan = it->second;
        }
    }
    fftw_execute_dft(plan, inp, outp);
}

Spectrum transform(const Field& field) {
    if (long(field.v.size()) != field.grid.size()) {
        throw std::invalid_argument("transform: field shape does not match its grid");
    }
    if (!all_finite(field)) throw std::invalid_argument("transform: non-finite field values");
    Spectrum out(field.grid);
    dft_2d(field.grid.nx, field.grid.ny, field.v.data(), out.c.data(), FFTW_FORWARD);
    const double scale = field.grid.period() / field.grid.size();
    for (cd& z : out.c) z *= scale;
    return out;
}

Field inverse_transform(const Spectrum& spec) {
    if (long(spec.c.size()) != spec.grid.size()) {
        throw std::invalid_argument("inverse_transform: spectrum shape does not match its grid");
    }
    if (!all_finite(spec)) throw std::invalid_argument("inverse_transform: non-finite coefficients");
    Field out(spec.grid);
    dft_2d(spec.grid.nx, spec.grid.ny, spec.c.data(), out.v.data(), FFTW_BACKWARD);
    const double scale = 1.0 / spec.grid.period();
    for (cd& z : out.v) z *= scale;
    return out;
}

}  // namespace dst
