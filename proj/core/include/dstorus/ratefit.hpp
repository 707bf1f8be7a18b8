#ifndef DSTORUS_RATEFIT_HPP
#define DSTORUS_RATEFIT_HPP

#include <optional>
#include <vector>

namespace dst {

// Power-law blow-up fit v(t) ~ C (T - t)^(-p).
struct RateFit {
    double T_est = 0.0;
    double p_est = 0.0;
    double C_est = 0.0;
    double residual = 0.0;      // RMS misfit of log v
    double p_err = 0.0;         // reported uncertainty on p
    double window_t0 = 0.0;     // fit window
    double window_t1 = 0.0;
    std::optional<double> s;           // regularity the fit is judged against
    bool consistent_lower_bound = false;  // p >= s/2 (set when s supplied)
    double pc_distance = 0.0;             // |p - s| (set when s supplied)
    bool ill_conditioned = false;         // thin window; widen if possible
};

// Least squares of log v = log C - p log(T - t) over (T, p, C); T located by a
// bounded 1-d search with an inner closed-form linear fit. Requires >= 8 samples,
// strictly increasing times, positive values increasing over the window.
RateFit fit_rate(const std::vector<double>& times, const std::vector<double>& values,
                 std::optional<double> s = std::nullopt);

}  // namespace dst

#endif
