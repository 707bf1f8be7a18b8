#include "dstorus/grid.hpp"

#include <stdexcept>
#include <string>

namespace dst {

TorusGrid make_grid(double L, int nx, int ny) {
    if (!(L > 0.0)) {
        throw std::invalid_argument("make_grid: scale L must be positive, got " + std::to_string(L));
    }
    if (nx < 4 || ny < 4) {
        throw std::invalid_argument("make_grid: nx, ny must be >= 4, got " + std::to_string(nx) +
                                    "x" + std::to_string(ny));
    }
    if (nx % 2 != 0 || ny % 2 != 0) {
        throw std::invalid_argument("make_grid: nx, ny must be even, got " + std::to_string(nx) +
                                    "x" + std::to_string(ny));
    }
    return TorusGrid{L, nx, ny};
}

}  // namespace dst
