#pragma once

#include <string>
#include <vector>

#include "hullborne/submersion.hpp"
#include "hullborne/vec.hpp"

namespace hullborne {

struct FluidParams {
    double rho_water = 1000.0;  // kg/m^3
    double g = 9.81;            // m/s^2
};

enum class CentroidMode { volumetric, eq5_vertex_mean };

struct MeshBuoyancy {
    std::string mesh_id;
    double force_magnitude = 0.0;  // N
    Vec3 centroid{};
    double volume = 0.0;  // m^3
};

struct BuoyancyReport {
    Vec3 total_force{};  // N, always vertical (+z)
    Vec3 application_point{};
    bool application_point_defined = false;  // false when total volume is zero
    std::vector<MeshBuoyancy> per_mesh;
};

// Archimedes: rho * g * V. Negative volume is a caller bug.
double buoyant_force_magnitude(const FluidParams& params, double volume);

// Per-mesh forces, total force along +z, application point at the
// volume-weighted mean of the per-mesh centroids.
BuoyancyReport assembly_buoyancy(
    const std::vector<std::pair<std::string, SubmergedRegion>>& regions,
    const FluidParams& params, CentroidMode centroid_mode = CentroidMode::volumetric);

}  // namespace hullborne
