#include "dstorus/ratefit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dst {

namespace {

struct LinFit {
    double p = 0.0;      // slope of log v against -log(T - t)
    double logC = 0.0;
    double sse = 0.0;
    double sxx = 0.0;    // spread of the regressor, for the stderr estimate
};

LinFit linear_fit(const std::vector<double>& t, const std::vector<double>& logv, double T) {
    const std::size_t n = t.size();
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = -std::log(T - t[i]);
        sx += x;
        sy += logv[i];
        sxx += x * x;
        sxy += x * logv[i];
    }
    LinFit f;
    const double det = n * sxx - sx * sx;
    f.p = (n * sxy - sx * sy) / det;
    f.logC = (sy - f.p * sx) / n;
    f.sxx = sxx - sx * sx / n;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = -std::log(T - t[i]);
        const double r = logv[i] - (f.logC + f.p * x);
        f.sse += r * r;
    }
    return f;
}

double sse_at(const std::vector<double>& t, const std::vector<double>& logv, double T) {
    return linear_fit(t, logv, T).sse;
}

}  // namespace

RateFit fit_rate(const std::vector<double>& times, const std::vector<double>& values,
                 std::optional<double> s) {
    const std::size_t n = times.size();
    if (n < 8 || values.size() != n) {
        throw std::invalid_argument("fit_rate: need >= 8 samples");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(values[i] > 0.0)) throw std::invalid_argument("fit_rate: values must be positive");
        if (i > 0 && !(times[i] > times[i - 1])) {
            throw std::invalid_argument("fit_rate: times must be strictly increasing");
        }
        if (i > 0 && values[i] < values[i - 1] * (1.0 - 1e-9)) {
            throw std::invalid_argument("fit_rate: values must be increasing over the fit window");
        }
    }
    if (!(values.back() > values.front() * (1.0 + 1e-12))) {
        throw std::invalid_argument("fit_rate: series has no growth");
    }

    std::vector<double> logv(n);
    for (std::size_t i = 0; i < n; ++i) logv[i] = std::log(values[i]);

    const double t_last = times.back();
    const double span = t_last - times.front();

    // Coarse scan over log(T - t_last), then golden-section refinement.
    const double lo = std::log(span * 1e-10), hi = std::log(span * 20.0);
    double best_u = lo, best_sse = HUGE_VAL;
    const int coarse = 160;
    for (int i = 0; i <= coarse; ++i) {
        const double u = lo + (hi - lo) * i / coarse;
        const double sse = sse_at(times, logv, t_last + std::exp(u));
        if (sse < best_sse) {
            best_sse = sse;
            best_u = u;
        }
    }
    double a = best_u - (hi - lo) / coarse, b = best_u + (hi - lo) / coarse;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = sse_at(times, logv, t_last + std::exp(c));
    double fd = sse_at(times, logv, t_last + std::exp(d));
    for (int it = 0; it < 200 && (b - a) > 1e-14; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = sse_at(times, logv, t_last + std::exp(c));
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = sse_at(times, logv, t_last + std::exp(d));
        }
    }
    const double T = t_last + std::exp((a + b) / 2.0);
    const LinFit f = linear_fit(times, logv, T);

    RateFit out;
    out.T_est = T;
    out.p_est = f.p;
    out.C_est = std::exp(f.logC);
    out.residual = std::sqrt(f.sse / n);
    out.window_t0 = times.front();
    out.window_t1 = t_last;

    // Uncertainty: regression stderr plus sensitivity to dropping the leading half.
    const double dof = double(n > 2 ? n - 2 : 1);
    double p_std = std::sqrt(std::max(f.sse / dof, 0.0) / std::max(f.sxx, 1e-300));
    double p_half_dev = 0.0;
    if (n >= 16) {
        std::vector<double> t2(times.begin() + n / 2, times.end());
        std::vector<double> v2(logv.begin() + n / 2, logv.end());
        const LinFit fh = linear_fit(t2, v2, T);
        p_half_dev = std::abs(fh.p - f.p);
    }
    out.p_err = std::max({2.0 * p_std, 1.25 * p_half_dev, 1e-12});
    out.ill_conditioned = f.sxx < 1e-4;

    if (s) {
        out.s = s;
        out.consistent_lower_bound = f.p >= *s / 2.0;
        out.pc_distance = std::abs(f.p - *s);
    }
    return out;
}

}  // namespace dst
