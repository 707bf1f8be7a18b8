#include "dstorus/hypnls.hpp"

#include <cmath>
#include <stdexcept>

#include "dstorus/fft.hpp"
#include "dstorus/quadrature.hpp"

namespace dst {

double ProfileSpec::eval(double theta) const {
    double v = c0;
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k) v += cos_coeffs[k] * std::cos((k + 1) * theta);
    for (std::size_t k = 0; k < sin_coeffs.size(); ++k) v += sin_coeffs[k] * std::sin((k + 1) * theta);
    return v;
}

double ProfileSpec::deriv(double theta) const {
    double v = 0.0;
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
        v -= cos_coeffs[k] * (k + 1) * std::sin((k + 1) * theta);
    }
    for (std::size_t k = 0; k < sin_coeffs.size(); ++k) {
        v += sin_coeffs[k] * (k + 1) * std::cos((k + 1) * theta);
    }
    return v;
}

bool ProfileSpec::is_constant() const {
    for (double a : cos_coeffs) {
        if (a != 0.0) return false;
    }
    for (double b : sin_coeffs) {
        if (b != 0.0) return false;
    }
    return true;
}

int ProfileSpec::max_mode() const {
    int m = 0;
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
        if (cos_coeffs[k] != 0.0) m = std::max(m, int(k + 1));
    }
    for (std::size_t k = 0; k < sin_coeffs.size(); ++k) {
        if (sin_coeffs[k] != 0.0) m = std::max(m, int(k + 1));
    }
    return m;
}

cd hyperbolic_explicit(double t, double x, double y, const ProfileSpec& profile) {
    const double u0 = profile.eval(x + y);
    const double phase = t * u0 * u0;
    return u0 * cd(std::cos(phase), std::sin(phase));
}

namespace {

// H^s(T^2) of a diagonal function g(x+y): coefficients c(k,k) = 2 pi a_k, so
// hs^2 = 4 pi^2 sum_k (1 + 2 k^2)^s |a_k|^2 with a_k the 1-d Fourier coefficients.
double diagonal_hs(const ProfileSpec& profile, double s, double t, int M) {
    std::vector<cd> g(M), gh(M);
    for (int j = 0; j < M; ++j) {
        const double theta = 2.0 * M_PI * j / M;
        const double u0 = profile.eval(theta);
        const double phase = t * u0 * u0;
        g[j] = u0 * cd(std::cos(phase), std::sin(phase));
    }
    dft_1d_batch(M, 1, g.data(), gh.data(), -1);
    double acc = 0.0;
    for (int i = 0; i < M; ++i) {
        const double k = TorusGrid::freq_of_index(i, M);
        const double ak2 = std::norm(gh[i]) / (double(M) * double(M));
        acc += std::pow(1.0 + 2.0 * k * k, s) * ak2;
    }
    return 2.0 * M_PI * std::sqrt(acc);
}

}  // namespace

double hypnls_hs(const ProfileSpec& profile, double s, double t) {
    // Phase derivative bound sets the bandwidth; refine until stable.
    double dmax = 0.0, umax = 0.0;
    for (int j = 0; j < 512; ++j) {
        const double theta = 2.0 * M_PI * j / 512;
        dmax = std::max(dmax, std::abs(2.0 * profile.eval(theta) * profile.deriv(theta)));
        umax = std::max(umax, std::abs(profile.eval(theta)));
    }
    int M = next_pow2(std::max(512, int(8.0 * (profile.max_mode() + std::abs(t) * dmax + 8.0))));
    double prev = diagonal_hs(profile, s, t, M);
    for (int it = 0; it < 6; ++it) {
        M *= 2;
        const double cur = diagonal_hs(profile, s, t, M);
        if (std::abs(cur - prev) <= 1e-12 * std::abs(cur)) return cur;
        prev = cur;
    }
    return prev;
}

std::vector<double> growth_curve(const ProfileSpec& profile, double s,
                                 const std::vector<double>& t_list) {
    if (profile.is_constant()) {
        throw std::invalid_argument("growth_curve: constant profiles have no growth statement");
    }
    if (s < 0.0) throw std::invalid_argument("growth_curve: s must be >= 0");
    std::vector<double> out;
    out.reserve(t_list.size());
    for (double t : t_list) out.push_back(hypnls_hs(profile, s, t));
    return out;
}

}  // namespace dst
