#ifndef DSTORUS_RNG_HPP
#define DSTORUS_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace dst {

// splitmix64; used to derive independent per-trial seeds from (base, labels).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    return splitmix64(base ^ splitmix64(a ^ splitmix64(b ^ splitmix64(c))));
}

struct GaussianRng {
    std::mt19937_64 gen;
    std::normal_distribution<double> normal{0.0, 1.0};

    explicit GaussianRng(std::uint64_t seed) : gen(seed) {}

    // Standard complex Gaussian: independent N(0, 1/2) real and imaginary parts.
    std::complex<double> complex_gaussian() {
        return {normal(gen) * M_SQRT1_2, normal(gen) * M_SQRT1_2};
    }
};

}  // namespace dst

#endif
