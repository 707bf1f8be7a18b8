#ifndef DSTORUS_FREQBOX_HPP
#define DSTORUS_FREQBOX_HPP

#include <cstdint>
#include <vector>

#include "dstorus/field.hpp"

namespace dst {

// Exact rational p/q with q > 0. Doubles convert exactly (mantissa / 2^k),
// so box membership tests below involve no floating-point rounding.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d);
    static Rational of(std::int64_t n) { return Rational(n, 1); }
    static Rational from_double(double x);

    double value() const { return double(num) / double(den); }
};

// |a/b| compared against c/d using 128-bit cross multiplication.
int compare_abs(std::int64_t a_num, std::int64_t a_den, std::int64_t b_num, std::int64_t b_den);

// Frequency box on the lattice, in the scale-free coordinates (m/L - a, n/L - b):
//   annulus: inner <= Max(|m/L - a|, |n/L - b|) <= outer   (closed by default)
//   cube:    Max(|m/L - a|, |n/L - b|) <= outer
// Setting outer_closed = false gives the half-open shells used for exact
// dyadic partitions.
struct FreqBox {
    enum class Shape { annulus, cube };

    Shape shape = Shape::cube;
    Rational a, b;       // center offsets
    Rational inner;      // ignored for cubes
    Rational outer;
    bool inner_closed = true;
    bool outer_closed = true;

    static FreqBox annulus(Rational center_a, Rational center_b, Rational inner, Rational outer);
    static FreqBox cube(Rational center_a, Rational center_b, Rational half_width);
    // Dyadic shell N <= . < 2N centered at the origin.
    static FreqBox dyadic_shell(std::int64_t N);

    bool contains(int m, int n, Rational L) const;

    // Integer lattice points inside the box for torus scale L.
    std::vector<std::pair<int, int>> lattice_points(Rational L) const;
    long lattice_count(Rational L) const;
};

struct BoxProjection {
    Spectrum spectrum;
    bool empty_box = false;  // set when the box misses the representable lattice entirely
};

// Zeroes all coefficients outside the box. Orthogonal projection (idempotent,
// self-adjoint). The grid scale is converted to an exact rational internally.
BoxProjection project_box(const Spectrum& spec, const FreqBox& box);

}  // namespace dst

#endif
