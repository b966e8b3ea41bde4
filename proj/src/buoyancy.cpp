#include "hullborne/buoyancy.hpp"

#include <stdexcept>

namespace hullborne {

double buoyant_force_magnitude(const FluidParams& params, double volume) {
    if (volume < 0.0)
        throw std::invalid_argument("buoyant_force_magnitude: negative volume");
    return params.rho_water * params.g * volume;
}

BuoyancyReport assembly_buoyancy(
    const std::vector<std::pair<std::string, SubmergedRegion>>& regions,
    const FluidParams& params, CentroidMode centroid_mode) {
    BuoyancyReport report;
    double total_volume = 0.0;
    Vec3 weighted{};
    for (const auto& [id, region] : regions) {
        Vec3 centroid = centroid_mode == CentroidMode::volumetric ? region.centroid_volumetric
                                                                  : region.centroid_eq5;
        double f = buoyant_force_magnitude(params, region.volume);
        report.per_mesh.push_back({id, f, centroid, region.volume});
        total_volume += region.volume;
        weighted += centroid * region.volume;
    }
    report.total_force = {0.0, 0.0, params.rho_water * params.g * total_volume};
    if (total_volume > 0.0) {
        report.application_point = weighted / total_volume;
        report.application_point_defined = true;
    }
    return report;
}

}  // namespace hullborne
