#include "dstorus/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace dst {

namespace {
template <typename Fn>
Spectrum map_multiplier(const Spectrum& spec, Fn&& symbol) {
    Spectrum out(spec.grid);
    const int nx = spec.grid.nx, ny = spec.grid.ny;
    for (int i = 0; i < nx; ++i) {
        const int m = TorusGrid::freq_of_index(i, nx);
        for (int j = 0; j < ny; ++j) {
            const int n = TorusGrid::freq_of_index(j, ny);
            out.c[std::size_t(i) * ny + j] = symbol(m, n) * spec.c[std::size_t(i) * ny + j];
        }
    }
    return out;
}
}  // namespace

Spectrum apply_p(const Spectrum& spec) {
    const double L = spec.grid.L;
    return map_multiplier(spec, [L](int m, int n) { return p_symbol(m, n, L); });
}

Spectrum apply_e(const Spectrum& spec) {
    return map_multiplier(spec, [](int m, int n) { return e_symbol(m, n); });
}

Spectrum propagate_linear(const Spectrum& spec, double t) {
    Spectrum out = spec;
    propagate_linear_inplace(out, t);
    return out;
}

void propagate_linear_inplace(Spectrum& spec, double t) {
    const int nx = spec.grid.nx, ny = spec.grid.ny;
    const double L = spec.grid.L;
    for (int i = 0; i < nx; ++i) {
        const int m = TorusGrid::freq_of_index(i, nx);
        for (int j = 0; j < ny; ++j) {
            const int n = TorusGrid::freq_of_index(j, ny);
            const double phase = t * p_symbol(m, n, L);
            spec.c[std::size_t(i) * ny + j] *= cd(std::cos(phase), std::sin(phase));
        }
    }
}

double hermitian_defect(const Spectrum& spec) {
    const int nx = spec.grid.nx, ny = spec.grid.ny;
    double norm2 = 0.0;
    for (const cd& z : spec.c) norm2 += std::norm(z);
    if (norm2 == 0.0) return 0.0;
    double worst = 0.0;
    for (int i = 0; i < nx; ++i) {
        const int ineg = (nx - i) % nx;
        for (int j = 0; j < ny; ++j) {
            const int jneg = (ny - j) % ny;
            const cd a = spec.c[std::size_t(i) * ny + j];
            const cd b = spec.c[std::size_t(ineg) * ny + jneg];
            worst = std::max(worst, std::abs(a - std::conj(b)));
        }
    }
    return worst / std::sqrt(norm2);
}

Spectrum solve_phi(const Spectrum& rho, double hermitian_tol) {
    if (hermitian_defect(rho) > hermitian_tol) {
        throw std::invalid_argument(
            "solve_phi: input spectrum is not Hermitian-symmetric (rho must be a real field)");
    }
    const double L = rho.grid.L;
    return map_multiplier(rho, [L](int m, int n) -> cd {
        if (m == 0 && n == 0) return cd(0.0, 0.0);
        return cd(0.0, -double(m) * L / (double(m) * m + double(n) * n));
    });
}

int dealias_cutoff(int n) { return n / 3; }

void dealias_inplace(Spectrum& spec) {
    const int nx = spec.grid.nx, ny = spec.grid.ny;
    const int cx = dealias_cutoff(nx), cy = dealias_cutoff(ny);
    for (int i = 0; i < nx; ++i) {
        const int m = TorusGrid::freq_of_index(i, nx);
        for (int j = 0; j < ny; ++j) {
            const int n = TorusGrid::freq_of_index(j, ny);
            if (std::abs(m) > cx || std::abs(n) > cy) {
                spec.c[std::size_t(i) * ny + j] = cd(0.0, 0.0);
            }
        }
    }
}

}  // namespace dst
