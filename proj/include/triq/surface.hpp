#pragma once

#include <optional>
#include <ostream>
#include <vector>

#include <json.hpp>

namespace triq {

struct SurfacePoint {
    double x, y;
    std::optional<double> f;  // empty for out-of-domain points in full-grid mode
};

struct SurfaceGrid {
    int nx = 0, ny = 0;
    bool full_grid = false;
    std::vector<SurfacePoint> rows;  // row-major, y outer, x inner
};

// Uniform grid over the bounding box of M ([1/2,1] x [0,1]); by default only
// points of M are emitted, full-grid mode keeps the rest with F missing.
SurfaceGrid surface_grid(int nx, int ny, bool full_grid = false);

// Header exactly "x,y,F", LF endings, shortest round-trip decimals.
void write_surface_csv(const SurfaceGrid& g, std::ostream& out);

nlohmann::ordered_json surface_to_json(const SurfaceGrid& g);

}  // namespace triq
