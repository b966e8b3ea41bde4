#include "hullborne/submersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hullborne/hull.hpp"
#include "hullborne/ops.hpp"

namespace hullborne {

namespace {

Vec3 point_mean(const std::vector<Vec3>& pts) {
    Vec3 sum{};
    for (const Vec3& p : pts) sum += p;
    return pts.empty() ? sum : sum / static_cast<double>(pts.size());
}

struct Pt2 {
    double x, y;
};

// Monotone-chain 2D convex hull; returns the polygon counter-clockwise.
std::vector<Pt2> hull_2d(std::vector<Pt2> pts) {
    if (pts.size() < 3) return pts;
    std::sort(pts.begin(), pts.end(), [](const Pt2& a, const Pt2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    auto cross = [](const Pt2& o, const Pt2& a, const Pt2& b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<Pt2> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0.0) --k;
        h[k++] = pts[i];
    }
    h.resize(k > 1 ? k - 1 : k);
    return h;
}

// Shoelace area and centroid of a simple polygon.
void polygon_area_centroid(const std::vector<Pt2>& poly, double& area, Pt2& centroid) {
    area = 0.0;
    centroid = {0.0, 0.0};
    if (poly.size() < 3) {
        if (!poly.empty()) {
            for (const Pt2& p : poly) {
                centroid.x += p.x;
                centroid.y += p.y;
            }
            centroid.x /= static_cast<double>(poly.size());
            centroid.y /= static_cast<double>(poly.size());
        }
        return;
    }
    double a2 = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Pt2& p = poly[i];
        const Pt2& q = poly[(i + 1) % poly.size()];
        double w = p.x * q.y - q.x * p.y;
        a2 += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    area = 0.5 * std::abs(a2);
    if (std::abs(a2) > 0.0) {
        centroid = {cx / (3.0 * a2), cy / (3.0 * a2)};
    } else {
        for (const Pt2& p : poly) {
            centroid.x += p.x;
            centroid.y += p.y;
        }
        centroid.x /= static_cast<double>(poly.size());
        centroid.y /= static_cast<double>(poly.size());
    }
}

}  // namespace

std::vector<Vec3> world_vertices(const TriMesh& mesh, const Pose& pose) {
    std::vector<Vec3> out;
    out.reserve(mesh.vertices.size());
    for (const Vec3& v : mesh.vertices) out.push_back(pose.to_world(v));
    return out;
}

std::vector<Vec3> submerged_point_set(const TriMesh& mesh, const Pose& pose,
                                      const WaterSurface& surface, double t,
                                      ClipMode clip_mode) {
    const double level = surface.level_at(t);
    auto world = world_vertices(mesh, pose);
    std::vector<Vec3> out;
    for (const Vec3& p : world)
        if (p.z < level) out.push_back(p);
    if (clip_mode == ClipMode::clipped) {
        double z_lo = std::numeric_limits<double>::infinity(), z_hi = -z_lo;
        for (const Vec3& p : world) {
            z_lo = std::min(z_lo, p.z);
            z_hi = std::max(z_hi, p.z);
        }
        // Vertices sitting on the water plane close the hull there; the
        // strict z < level pass misses them (e.g. an apex exactly at the
        // waterline) and no edge crossing recovers them.
        const double eps = 1e-9 * (z_hi - z_lo);
        for (const Vec3& p : world)
            if (p.z >= level && p.z - level <= eps) out.push_back({p.x, p.y, level});
        for (auto [a, b] : mesh_edges(mesh)) {
            double za = world[a].z - level, zb = world[b].z - level;
            if ((za < 0.0 && zb > 0.0) || (za > 0.0 && zb < 0.0)) {
                double s = za / (za - zb);
                Vec3 p = world[a] + (world[b] - world[a]) * s;
                p.z = level;  // exact by construction
                out.push_back(p);
            }
        }
    }
    return out;
}

SubmergedRegion hull_submerged_volume(const TriMesh& mesh, const Pose& pose,
                                      const WaterSurface& surface, double t,
                                      ClipMode clip_mode) {
    SubmergedRegion region;
    region.method = VolumeMethod::hull;
    region.clip_mode = clip_mode;
    region.points = submerged_point_set(mesh, pose, surface, t, clip_mode);
    if (region.points.empty()) return region;
    region.centroid_defined = true;
    try {
        ConvexHull hull = quickhull(region.points);
        region.volume = hull_volume(hull);
        region.centroid_eq5 = vertex_mean_centroid(hull);
        region.centroid_volumetric = volumetric_centroid(hull);
    } catch (const DegenerateHullError&) {
        region.volume = 0.0;
        region.centroid_eq5 = region.centroid_volumetric = point_mean(region.points);
    }
    return region;
}

SubmergedRegion sliced_submerged_volume(const TriMesh& mesh, const Pose& pose,
                                        const WaterSurface& surface, double t, double dz) {
    SubmergedRegion region;
    region.method = VolumeMethod::sliced;
    region.clip_mode = ClipMode::clipped;
    const double level = surface.level_at(t);
    auto world = world_vertices(mesh, pose);

    double z_min = std::numeric_limits<double>::infinity();
    double z_max = -std::numeric_limits<double>::infinity();
    for (const Vec3& p : world) {
        z_min = std::min(z_min, p.z);
        z_max = std::max(z_max, p.z);
    }
    region.points = submerged_point_set(mesh, pose, surface, t, ClipMode::clipped);
    if (level <= z_min || region.points.empty()) return region;
    region.centroid_defined = true;
    region.centroid_eq5 = point_mean(region.points);

    const double z_top = std::min(level, z_max);
    const double extent = z_top - z_min;
    if (extent <= 0.0) {
        region.centroid_volumetric = region.centroid_eq5;
        return region;
    }
    if (dz <= 0.0) dz = extent / 100.0;
    const int n_slices = std::max(1, static_cast<int>(std::ceil(extent / dz)));
    const double h = extent / n_slices;
    const double eps_z = 1e-9 * (z_max - z_min);

    const auto edges = mesh_edges(mesh);
    // Interval bucketing: one pass classifies each edge's z-span onto the
    // slice planes it can cross, so a slice only tests its own candidates
    // instead of every edge. Candidate counts equal actual plane crossings
    // up to the one-plane guard band on each side.
    std::vector<std::vector<int>> edge_buckets(n_slices + 1);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        ++ops::counters().edge_plane_tests;  // the classification pass
        double za = world[edges[e].first].z, zb = world[edges[e].second].z;
        double lo = std::min(za, zb), hi = std::max(za, zb);
        if (hi < z_min || lo > z_top) continue;
        int i_lo = std::max(0, static_cast<int>(std::floor((lo - z_min) / h)));
        int i_hi = std::min(n_slices, static_cast<int>(std::ceil((hi - z_min) / h)));
        for (int i = i_lo; i <= i_hi; ++i)
            edge_buckets[i].push_back(static_cast<int>(e));
    }
    std::vector<std::vector<int>> vertex_buckets(n_slices + 1);
    for (std::size_t v = 0; v < world.size(); ++v) {
        int i = static_cast<int>(std::llround((world[v].z - z_min) / h));
        for (int j = i - 1; j <= i + 1; ++j)
            if (j >= 0 && j <= n_slices &&
                std::abs(world[v].z - (z_min + j * h)) <= eps_z)
                vertex_buckets[j].push_back(static_cast<int>(v));
    }

    std::vector<double> areas(n_slices + 1, 0.0);
    std::vector<Pt2> centroids(n_slices + 1, {0.0, 0.0});
    for (int i = 0; i <= n_slices; ++i) {
        const double z = z_min + i * h;
        std::vector<Pt2> section;
        for (int e : edge_buckets[i]) {
            ++ops::counters().edge_plane_tests;
            auto [a, b] = edges[e];
            double za = world[a].z - z, zb = world[b].z - z;
            if ((za < 0.0 && zb > 0.0) || (za > 0.0 && zb < 0.0)) {
                double s = za / (za - zb);
                section.push_back({world[a].x + (world[b].x - world[a].x) * s,
                                   world[a].y + (world[b].y - world[a].y) * s});
            }
        }
        for (int v : vertex_buckets[i]) section.push_back({world[v].x, world[v].y});
        ++ops::counters().slice_area_evals;
        auto poly = hull_2d(std::move(section));
        polygon_area_centroid(poly, areas[i], centroids[i]);
    }

    // Trapezoid integration of area and area-weighted centroid over z.
    double volume = 0.0, mx = 0.0, my = 0.0, mz = 0.0;
    for (int i = 0; i <= n_slices; ++i) {
        double w = (i == 0 || i == n_slices) ? 0.5 * h : h;
        double z = z_min + i * h;
        volume += w * areas[i];
        mx += w * areas[i] * centroids[i].x;
        my += w * areas[i] * centroids[i].y;
        mz += w * areas[i] * z;
    }
    region.volume = volume;
    region.centroid_volumetric =
        volume > 0.0 ? Vec3{mx / volume, my / volume, mz / volume} : region.centroid_eq5;
    return region;
}

std::vector<DraftPoint> volume_draft_curve(const TriMesh& mesh, const Pose& pose,
                                           VolumeMethod method, ClipMode clip_mode,
                                           int n_levels, double dz) {
    if (n_levels < 2) throw std::invalid_argument("volume_draft_curve: n_levels must be >= 2");
    auto world = world_vertices(mesh, pose);
    double z_min = std::numeric_limits<double>::infinity();
    double z_max = -std::numeric_limits<double>::infinity();
    for (const Vec3& p : world) {
        z_min = std::min(z_min, p.z);
        z_max = std::max(z_max, p.z);
    }
    std::vector<DraftPoint> curve;
    curve.reserve(n_levels);
    for (int i = 0; i < n_levels; ++i) {
        double level = z_min + (z_max - z_min) * i / (n_levels - 1);
        // Top of the sweep sits just above the mesh so the strict z < level
        // test submerges every vertex.
        if (i == n_levels - 1) level += 1e-9 * (z_max - z_min);
        WaterSurface s = WaterSurface::still(level);
        SubmergedRegion r = method == VolumeMethod::hull
                                ? hull_submerged_volume(mesh, pose, s, 0.0, clip_mode)
                                : sliced_submerged_volume(mesh, pose, s, 0.0, dz);
        curve.push_back({level - z_min, r.volume, r.centroid_volumetric});
    }
    return curve;
}

VertexTracker make_vertex_tracker(const TriMesh& mesh, const Pose& pose, int resort_interval) {
    VertexTracker tracker;
    tracker.resort_interval = std::max(1, resort_interval);
    tracker.sorted_z_indices.resize(mesh.vertices.size());
    std::iota(tracker.sorted_z_indices.begin(), tracker.sorted_z_indices.end(), 0);
    auto world = world_vertices(mesh, pose);
    std::stable_sort(tracker.sorted_z_indices.begin(), tracker.sorted_z_indices.end(),
                     [&](int a, int b) { return world[a].z < world[b].z; });
    tracker.lowest_vertex_index = tracker.sorted_z_indices.front();
    tracker.steps_since_resort = 0;
    return tracker;
}

bool update_vertex_tracker(VertexTracker& tracker, const TriMesh& mesh, const Pose& pose,
                           double water_level) {
    ++tracker.steps_since_resort;
    if (tracker.steps_since_resort >= tracker.resort_interval) {
        auto world = world_vertices(mesh, pose);
        std::stable_sort(tracker.sorted_z_indices.begin(), tracker.sorted_z_indices.end(),
                         [&](int a, int b) { return world[a].z < world[b].z; });
        tracker.lowest_vertex_index = tracker.sorted_z_indices.front();
        tracker.steps_since_resort = 0;
    }
    double lowest_z = pose.to_world(mesh.vertices[tracker.lowest_vertex_index]).z;
    return lowest_z >= water_level;
}

}  // namespace hullborne
