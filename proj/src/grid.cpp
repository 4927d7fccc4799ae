#include "crossdiff/grid.hpp"

#include <stdexcept>
#include <string>

namespace crossdiff {

Grid build_grid(double half_width, int cell_count) {
    if (!(half_width > 0.0))
        throw std::invalid_argument("build_grid: half-width must be positive, got " +
                                    std::to_string(half_width));
    if (cell_count < 2)
        throw std::invalid_argument("build_grid: need at least 2 cells, got " +
                                    std::to_string(cell_count));
    Grid g;
    g.half_width = half_width;
    g.cell_count = cell_count;
    g.dx = 2.0 * half_width / cell_count;
    g.centers.resize(cell_count);
    for (int i = 0; i < cell_count; ++i)
        g.centers[i] = -half_width + (i + 0.5) * g.dx;
    return g;
}

}  // namespace crossdiff
