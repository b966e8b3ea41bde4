#pragma once

#include <vector>

#include "hullborne/mesh.hpp"
#include "hullborne/vec.hpp"
#include "hullborne/water.hpp"

namespace hullborne {

// vertices_only is the paper-faithful mode; clipped additionally inserts
// edge-waterplane intersection points, closing the hull at the free surface.
enum class ClipMode { vertices_only, clipped };
enum class VolumeMethod { hull, sliced };

struct SubmergedRegion {
    std::vector<Vec3> points;  // world-frame submerged vertices (+ clip points)
    double volume = 0.0;       // m^3
    Vec3 centroid_eq5{};         // unweighted hull-vertex mean
    Vec3 centroid_volumetric{};  // center of mass of the enclosed region
    VolumeMethod method = VolumeMethod::hull;
    ClipMode clip_mode = ClipMode::clipped;
    bool centroid_defined = false;  // false when nothing is submerged
};

std::vector<Vec3> world_vertices(const TriMesh& mesh, const Pose& pose);

// World-frame vertices with z < level_at(t); in clipped mode also the
// interpolated intersection of every mesh edge crossing the water plane.
std::vector<Vec3> submerged_point_set(const TriMesh& mesh, const Pose& pose,
                                      const WaterSurface& surface, double t,
                                      ClipMode clip_mode);

// Quickhull over the submerged point set. Degenerate sets (fewer than four
// non-coplanar points) yield volume 0 with the centroid at the point mean;
// empty sets yield centroid_defined = false. Never throws for geometry.
SubmergedRegion hull_submerged_volume(const TriMesh& mesh, const Pose& pose,
                                      const WaterSurface& surface, double t,
                                      ClipMode clip_mode);

// Cross-section integration: slices [z_min, eta] at spacing dz, takes the 2D
// convex hull of edge-plane intersections per slice, integrates area by the
// trapezoid rule. dz <= 0 selects the default, submerged z-extent / 100.
SubmergedRegion sliced_submerged_volume(const TriMesh& mesh, const Pose& pose,
                                        const WaterSurface& surface, double t,
                                        double dz = 0.0);

struct DraftPoint {
    double draft = 0.0;   // level minus lowest mesh point, m
    double volume = 0.0;  // m^3
    Vec3 centroid{};
};

// Sweeps the water level across the mesh's z-extent in n_levels uniform steps.
std::vector<DraftPoint> volume_draft_curve(const TriMesh& mesh, const Pose& pose,
                                           VolumeMethod method, ClipMode clip_mode,
                                           int n_levels, double dz = 0.0);

// Lowest-vertex tracking: a full z-sort every resort_interval steps, with the
// tracked lowest vertex gating the all-above-water quick reject in between.
struct VertexTracker {
    std::vector<int> sorted_z_indices;  // ascending world z as of last resort
    int steps_since_resort = 0;
    int resort_interval = 10;
    int lowest_vertex_index = 0;
};

VertexTracker make_vertex_tracker(const TriMesh& mesh, const Pose& pose,
                                  int resort_interval = 10);

// Advances the tracker one step, resorting when the interval elapses.
// Returns quick_reject: true iff the tracked lowest vertex sits above the
// water level, i.e. hull work can be skipped entirely.
bool update_vertex_tracker(VertexTracker& tracker, const TriMesh& mesh, const Pose& pose,
                           double water_level);

}  // namespace hullborne
