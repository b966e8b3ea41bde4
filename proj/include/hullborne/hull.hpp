#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <vector>

#include "hullborne/vec.hpp"

namespace hullborne {

// Fewer than 4 points, or all points coincident/collinear/coplanar within
// tolerance. Callers typically map this to zero submerged volume.
struct DegenerateHullError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvexHull {
    std::vector<Vec3> vertices;             // subset of the input points
    std::vector<std::array<int, 3>> faces;  // outward-wound index triples
    int source_count = 0;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t face_count() const { return faces.size(); }
};

// Scale-relative tolerance: eps_scale * bounding-box diagonal.
inline constexpr double kHullEpsScale = 1e-10;

// Quickhull: initial simplex from axis-extreme points, per-face outside sets,
// farthest-point expansion over horizon edges until no outside point remains.
// Points within eps of a face plane count as inside.
// Throws DegenerateHullError on degenerate input.
ConvexHull quickhull(std::span<const Vec3> points, double eps_scale = kHullEpsScale);

// Sum of per-face tetrahedron volumes |(v1-v0)·((v2-v0)x(v3-v0))|/6 with the
// reference point v0 at the hull vertex mean (interior, so the absolute
// values sum exactly).
double hull_volume(const ConvexHull& hull);

// Unweighted arithmetic mean of the hull vertices.
Vec3 vertex_mean_centroid(const ConvexHull& hull);

// Volume-weighted mean of tetrahedron centroids: the center of mass of the
// enclosed solid, and the physically correct center of buoyancy.
Vec3 volumetric_centroid(const ConvexHull& hull);

// Largest signed distance from any of the given points to any hull face
// plane (positive = outside). Containment check helper.
double max_outside_distance(const ConvexHull& hull, std::span<const Vec3> points);

}  // namespace hullborne
