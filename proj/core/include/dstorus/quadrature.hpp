#ifndef DSTORUS_QUADRATURE_HPP
#define DSTORUS_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace dst {

// 16-point Gauss-Legendre nodes/weights on [-1, 1].
const std::vector<double>& gl16_nodes();
const std::vector<double>& gl16_weights();

double gl16(const std::function<double(double)>& f, double a, double b);

// Composite rule on geometric panels [x0 * g^k, x0 * g^(k+1)] covering [x0, x1].
double integrate_geometric(const std::function<double(double)>& f, double x0, double x1,
                           double growth = 2.0);

// Semi-infinite tail: panels doubled until a panel contributes less than
// rel_tol times the running total.
double integrate_tail(const std::function<double(double)>& f, double x0, double rel_tol = 1e-14);

// C-infinity step: 0 for u <= 0, 1 for u >= 1, exp-smooth in between.
double smoothstep_cinf(double u);

int next_pow2(int n);
// Smallest 2^a 3^b 5^c >= n (FFT-friendly sizes).
int next_fast_size(int n);

}  // namespace dst

#endif
