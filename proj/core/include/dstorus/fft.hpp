#ifndef DSTORUS_FFT_HPP
#define DSTORUS_FFT_HPP

#include "dstorus/field.hpp"

namespace dst {

// Forward transform: c(m,n) = <u, e_{m,n}> evaluated by the grid quadrature,
// i.e. c = (2 pi L / (nx ny)) * DFT(u) with the e^{-i} kernel.
Spectrum transform(const Field& field);

// Exact adjoint/inverse: u(x_j,y_k) = sum c(m,n) e_{m,n}(x_j,y_k).
Field inverse_transform(const Spectrum& spec);

// Raw unnormalized c2c DFTs used by the space-time module. sign = -1 forward, +1 backward.
// in and out must be distinct arrays of length nx*ny.
void dft_2d(int nx, int ny, const cd* in, cd* out, int sign);

// Batched 1-d DFT along contiguous length-n blocks, howmany blocks, unnormalized.
void dft_1d_batch(int n, int howmany, const cd* in, cd* out, int sign);

}  // namespace dst

#endif
