#include "triq/surface.hpp"

#include <stdexcept>

#include "triq/devilfish.hpp"
#include "triq/num_format.hpp"

namespace triq {

SurfaceGrid surface_grid(int nx, int ny, bool full_grid) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("surface_grid: need nx, ny >= 2");
    SurfaceGrid g;
    g.nx = nx;
    g.ny = ny;
    g.full_grid = full_grid;
    for (int j = 0; j < ny; ++j) {
        const double y = static_cast<double>(j) / (ny - 1);
        for (int i = 0; i < nx; ++i) {
            const double x = 0.5 + 0.5 * i / (nx - 1);
            const bool inside = in_domain({x, y}, 1e-12);
            if (!inside && !full_grid) continue;
            SurfacePoint p{x, y, std::nullopt};
            if (inside) p.f = eval_F({x, y});
            g.rows.push_back(p);
        }
    }
    return g;
}

void write_surface_csv(const SurfaceGrid& g, std::ostream& out) {
    out << "x,y,F\n";
    for (const auto& p : g.rows) {
        out << shortest(p.x) << ',' << shortest(p.y) << ',';
        if (p.f) out << shortest(*p.f);
        out << '\n';
    }
}

nlohmann::ordered_json surface_to_json(const SurfaceGrid& g) {
    nlohmann::ordered_json j;
    j["nx"] = g.nx;
    j["ny"] = g.ny;
    j["full_grid"] = g.full_grid;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& p : g.rows) {
        nlohmann::ordered_json row;
        row.push_back(shortest(p.x));
        row.push_back(shortest(p.y));
        if (p.f)
            row.push_back(shortest(*p.f));
        else
            row.push_back(nullptr);
        j["rows"].push_back(row);
    }
    return j;
}

}  // namespace triq
