#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "rre/model.hpp"

namespace rre {

/// Rectangular evaluation grid over the two feature axes.
struct GridSpec {
    double x1_min = 0.0, x1_max = 1.0;
    double x2_min = 0.0, x2_max = 1.0;
    std::size_t nx = 2, ny = 2;

    void validate() const {
        if (nx < 2 || ny < 2) throw invalid_grid_error("grid resolution must be >= 2 per axis");
        if (!(x1_min < x1_max) || !(x2_min < x2_max))
            throw invalid_grid_error("grid bounds must satisfy min < max");
        if (!std::isfinite(x1_min) || !std::isfinite(x1_max) || !std::isfinite(x2_min) ||
            !std::isfinite(x2_max))
            throw invalid_grid_error("grid bounds must be finite");
    }

    double x1_at(std::size_t i) const {
        return x1_min + (x1_max - x1_min) * static_cast<double>(i) / static_cast<double>(nx - 1);
    }
    double x2_at(std::size_t j) const {
        return x2_min + (x2_max - x2_min) * static_cast<double>(j) / static_cast<double>(ny - 1);
    }
};

/// G at every node, row-major: index = i * ny + j for node (x1_at(i), x2_at(j)).
inline std::vector<double> evaluate_grid(const RreModel& model, const GridSpec& grid) {
    grid.validate();
    if (model.dimension() != 2)
        throw invalid_grid_error("grid evaluation requires a 2-d model");
    std::vector<double> values;
    values.reserve(grid.nx * grid.ny);
    for (std::size_t i = 0; i < grid.nx; ++i)
        for (std::size_t j = 0; j < grid.ny; ++j)
            values.push_back(discriminant(model, FeatureVector{grid.x1_at(i), grid.x2_at(j)}));
    return values;
}

} // namespace rre
