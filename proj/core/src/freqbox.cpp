#include "dstorus/freqbox.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dst {

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("Rational: non-finite value");
    if (x == 0.0) return Rational();
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    std::int64_t m = std::llround(std::ldexp(mant, 53));
    exp -= 53;
    while (m != 0 && (m & 1) == 0) {
        m >>= 1;
        ++exp;
    }
    if (exp >= 0) {
        if (exp > 10) throw std::invalid_argument("Rational: value too large for exact arithmetic");
        return Rational(m << exp, 1);
    }
    if (exp < -62) throw std::invalid_argument("Rational: value too fine for exact arithmetic");
    return Rational(m, std::int64_t(1) << (-exp));
}

int compare_abs(std::int64_t a_num, std::int64_t a_den, std::int64_t b_num, std::int64_t b_den) {
    __int128 lhs = (__int128)(a_num < 0 ? -a_num : a_num) * (b_den < 0 ? -b_den : b_den);
    __int128 rhs = (__int128)(b_num < 0 ? -b_num : b_num) * (a_den < 0 ? -a_den : a_den);
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

FreqBox FreqBox::annulus(Rational ca, Rational cb, Rational inner, Rational outer) {
    FreqBox q;
    q.shape = Shape::annulus;
    q.a = ca;
    q.b = cb;
    q.inner = inner;
    q.outer = outer;
    return q;
}

FreqBox FreqBox::cube(Rational ca, Rational cb, Rational half_width) {
    FreqBox q;
    q.shape = Shape::cube;
    q.a = ca;
    q.b = cb;
    q.outer = half_width;
    return q;
}

FreqBox FreqBox::dyadic_shell(std::int64_t N) {
    FreqBox q = annulus(Rational(), Rational(), Rational::of(N), Rational::of(2 * N));
    q.outer_closed = false;
    return q;
}

namespace {

// |m/L - a| as an exact rational: (m * L.den * a.den - a.num * L.num, L.num * a.den).
// Magnitudes stay inside __int128 for the grid sizes this toolkit supports.
struct Offset {
    __int128 num;
    __int128 den;
};

Offset offset_of(int m, const Rational& center, const Rational& L) {
    Offset o;
    o.num = (__int128)m * L.den * center.den - (__int128)center.num * L.num;
    if (o.num < 0) o.num = -o.num;
    o.den = (__int128)L.num * center.den;
    if (o.den < 0) o.den = -o.den;
    return o;
}

int compare_offset(const Offset& o, const Rational& r) {
    __int128 lhs = o.num * (r.den < 0 ? -r.den : r.den);
    __int128 rhs = (__int128)(r.num < 0 ? -r.num : r.num) * o.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

Offset max_offset(const Offset& a, const Offset& b) {
    // Common denominator comparison.
    __int128 lhs = a.num * b.den, rhs = b.num * a.den;
    return lhs >= rhs ? a : b;
}

}  // namespace

bool FreqBox::contains(int m, int n, Rational L) const {
    if (L.num <= 0) throw std::invalid_argument("FreqBox::contains: scale must be positive");
    const Offset om = offset_of(m, a, L);
    const Offset on = offset_of(n, b, L);
    const Offset mx = max_offset(om, on);
    const int hi = compare_offset(mx, outer);
    if (hi > 0 || (hi == 0 && !outer_closed)) return false;
    if (shape == Shape::cube) return true;
    const int lo = compare_offset(mx, inner);
    if (lo < 0 || (lo == 0 && !inner_closed)) return false;
    return true;
}

std::vector<std::pair<int, int>> FreqBox::lattice_points(Rational L) const {
    // Conservative integer bounds from double arithmetic, membership decided exactly.
    const double Lv = L.value();
    const double ra = a.value(), rb = b.value(), ro = outer.value();
    const long mlo = long(std::floor((ra - ro) * Lv)) - 1, mhi = long(std::ceil((ra + ro) * Lv)) + 1;
    const long nlo = long(std::floor((rb - ro) * Lv)) - 1, nhi = long(std::ceil((rb + ro) * Lv)) + 1;
    std::vector<std::pair<int, int>> pts;
    for (long m = mlo; m <= mhi; ++m) {
        for (long n = nlo; n <= nhi; ++n) {
            if (contains(int(m), int(n), L)) pts.emplace_back(int(m), int(n));
        }
    }
    return pts;
}

long FreqBox::lattice_count(Rational L) const { return long(lattice_points(L).size()); }

BoxProjection project_box(const Spectrum& spec, const FreqBox& box) {
    const Rational L = Rational::from_double(spec.grid.L);
    BoxProjection out;
    out.spectrum = Spectrum(spec.grid);
    const int nx = spec.grid.nx, ny = spec.grid.ny;
    bool any = false;
    for (int i = 0; i < nx; ++i) {
        const int m = TorusGrid::freq_of_index(i, nx);
        for (int j = 0; j < ny; ++j) {
            const int n = TorusGrid::freq_of_index(j, ny);
            if (box.contains(m, n, L)) {
                out.spectrum.c[std::size_t(i) * ny + j] = spec.c[std::size_t(i) * ny + j];
                any = true;
            }
        }
    }
    out.empty_box = !any;
    return out;
}

}  // namespace dst
