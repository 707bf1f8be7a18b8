#include "dstorus/quadrature.hpp"

#include <cmath>

namespace dst {

namespace {

// Nodes from Newton iteration on P_16; computed once.
struct GL16 {
    std::vector<double> x, w;
    GL16() {
        const int n = 16;
        x.resize(n);
        w.resize(n);
        for (int i = 0; i < n / 2; ++i) {
            double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    const double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (z * p0 - p1) / (z * z - 1.0);
                const double dz = p0 / pp;
                z -= dz;
                if (std::abs(dz) < 1e-16) break;
            }
            x[i] = -z;
            x[n - 1 - i] = z;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
    }
};

const GL16& gl16_data() {
    static GL16 g;
    return g;
}

}  // namespace

const std::vector<double>& gl16_nodes() { return gl16_data().x; }
const std::vector<double>& gl16_weights() { return gl16_data().w; }

double gl16(const std::function<double(double)>& f, double a, double b) {
    const auto& x = gl16_nodes();
    const auto& w = gl16_weights();
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += w[i] * f(mid + half * x[i]);
    return acc * half;
}

double integrate_geometric(const std::function<double(double)>& f, double x0, double x1,
                           double growth) {
    if (x1 <= x0) return 0.0;
    double acc = 0.0;
    double lo = x0;
    while (lo < x1) {
        double hi = std::min(lo * growth, x1);
        if (lo == 0.0) hi = std::min(x1, 1e-12);
        acc += gl16(f, lo, hi);
        lo = hi;
    }
    return acc;
}

double integrate_tail(const std::function<double(double)>& f, double x0, double rel_tol) {
    double acc = 0.0;
    double lo = x0;
    for (int k = 0; k < 200; ++k) {
        const double hi = lo * 2.0;
        const double panel = gl16(f, lo, hi);
        acc += panel;
        if (std::abs(panel) < rel_tol * std::abs(acc) && k > 2) break;
        lo = hi;
    }
    return acc;
}

double smoothstep_cinf(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    const double fa = std::exp(-1.0 / u);
    const double fb = std::exp(-1.0 / (1.0 - u));
    return fa / (fa + fb);
}

int next_pow2(int n) {
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

int next_fast_size(int n) {
    for (int m = n;; ++m) {
        int r = m;
        for (int f : {2, 3, 5}) {
            while (r % f == 0) r /= f;
        }
        if (r == 1) return m;
    }
}

}  // namespace dst
