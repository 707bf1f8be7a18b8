#ifndef DSTORUS_CHECKPOINT_HPP
#define DSTORUS_CHECKPOINT_HPP

#include <string>

#include "dstorus/field.hpp"

namespace dst::io {

// Binary state snapshot. Layout (little-endian):
//   magic "DSTR" | u32 version (=1) | f64 L | u32 nx | u32 ny | f64 t |
//   i32 sigma | u32 e_enabled | nx*ny complex values (f64 re, f64 im), row-major.
struct Checkpoint {
    Field state;
    double t = 0.0;
    int sigma = +1;
    bool e_enabled = true;
};

void save_checkpoint(const std::string& path, const Checkpoint& c);
Checkpoint load_checkpoint(const std::string& path);

}  // namespace dst::io

#endif
