#include "dstorus/checkpoint.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "dstorus/grid.hpp"

namespace dst::io {

namespace {

constexpr char kMagic[4] = {'D', 'S', 'T', 'R'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put(std::ofstream& out, T v) {
    // Serialized little-endian; this toolkit targets little-endian hosts.
    out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T take(std::ifstream& in) {
    T v;
    in.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!in) throw std::runtime_error("checkpoint: truncated file");
    return v;
}

}  // namespace

void save_checkpoint(const std::string& path, const Checkpoint& c) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("checkpoint: cannot open " + path + " for writing");
    out.write(kMagic, 4);
    put<std::uint32_t>(out, kVersion);
    put<double>(out, c.state.grid.L);
    put<std::uint32_t>(out, std::uint32_t(c.state.grid.nx));
    put<std::uint32_t>(out, std::uint32_t(c.state.grid.ny));
    put<double>(out, c.t);
    put<std::int32_t>(out, std::int32_t(c.sigma));
    put<std::uint32_t>(out, c.e_enabled ? 1u : 0u);
    for (const cd& z : c.state.v) {
        put<double>(out, z.real());
        put<double>(out, z.imag());
    }
    if (!out) throw std::runtime_error("checkpoint: write failed for " + path);
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("checkpoint: cannot open " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0) {
        throw std::runtime_error("checkpoint: bad magic in " + path);
    }
    const auto version = take<std::uint32_t>(in);
    if (version != kVersion) {
        throw std::runtime_error("checkpoint: unsupported version " + std::to_string(version) +
                                 " in " + path);
    }
    Checkpoint c;
    const double L = take<double>(in);
    const auto nx = take<std::uint32_t>(in);
    const auto ny = take<std::uint32_t>(in);
    c.t = take<double>(in);
    c.sigma = int(take<std::int32_t>(in));
    c.e_enabled = take<std::uint32_t>(in) != 0;
    c.state = Field(make_grid(L, int(nx), int(ny)));
    for (cd& z : c.state.v) {
        const double re = take<double>(in);
        const double im = take<double>(in);
        z = cd(re, im);
    }
    return c;
}

}  // namespace dst::io
