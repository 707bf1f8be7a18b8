#include "dstorus/field.hpp"

#include <cmath>

namespace dst {

bool all_finite(const Field& f) {
    for (const cd& z : f.v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

bool all_finite(const Spectrum& s) {
    for (const cd& z : s.c) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

cd inner(const Field& a, const Field& b) {
    cd acc(0.0, 0.0);
    for (std::size_t i = 0; i < a.v.size(); ++i) acc += a.v[i] * std::conj(b.v[i]);
    return acc * a.grid.cell_weight();
}

double l2_distance(const Field& a, const Field& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.v.size(); ++i) acc += std::norm(a.v[i] - b.v[i]);
    return std::sqrt(acc * a.grid.cell_weight());
}

}  // namespace dst
