#include "hullborne/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "hullborne/ops.hpp"

namespace hullborne {

namespace {

struct Face {
    std::array<int, 3> v{};   // outward winding into the point array
    std::array<int, 3> nb{};  // nb[i] is the face across edge (v[i], v[i+1])
    Vec3 normal{};
    double offset = 0.0;  // plane: normal · p == offset
    std::vector<int> outside;
    int far_idx = -1;
    double far_dist = 0.0;
    bool alive = true;
};

struct Builder {
    std::span<const Vec3> pts;
    double eps = 0.0;
    std::vector<Face> faces;
    std::vector<int> work;  // faces with pending outside points
    std::vector<int> visit_mark;
    int visit_epoch = 0;

    double signed_dist(const Face& f, const Vec3& p) const {
        ++ops::counters().point_plane_tests;
        return f.normal.dot(p) - f.offset;
    }

    void compute_plane(Face& f) {
        const Vec3& a = pts[f.v[0]];
        Vec3 n = (pts[f.v[1]] - a).cross(pts[f.v[2]] - a);
        double len = n.norm();
        f.normal = len > 0.0 ? n / len : Vec3{0, 0, 0};
        f.offset = f.normal.dot(a);
    }

    int add_face(int a, int b, int c) {
        Face f;
        f.v = {a, b, c};
        f.nb = {-1, -1, -1};
        compute_plane(f);
        faces.push_back(std::move(f));
        return static_cast<int>(faces.size()) - 1;
    }

    void link(int fa, int ea, int fb, int eb) {
        faces[fa].nb[ea] = fb;
        faces[fb].nb[eb] = fa;
    }

    // Wires neighbor pointers for a batch of faces via their directed edges.
    void wire(const std::vector<int>& ids) {
        std::map<std::pair<int, int>, std::pair<int, int>> open;  // edge -> (face, slot)
        for (int id : ids) {
            const auto& f = faces[id];
            for (int e = 0; e < 3; ++e) {
                int u = f.v[e], v = f.v[(e + 1) % 3];
                auto it = open.find({v, u});
                if (it != open.end()) {
                    link(id, e, it->second.first, it->second.second);
                    open.erase(it);
                } else {
                    open[{u, v}] = {id, e};
                }
            }
        }
    }

    void assign_outside(int point, const std::vector<int>& candidates) {
        int best = -1;
        double best_d = eps;
        for (int id : candidates) {
            double d = signed_dist(faces[id], pts[point]);
            if (d > best_d) {
                best_d = d;
                best = id;
            }
        }
        if (best < 0) return;
        Face& f = faces[best];
        f.outside.push_back(point);
        if (best_d > f.far_dist) {
            f.far_dist = best_d;
            f.far_idx = point;
        }
    }
};

std::array<int, 4> initial_simplex(std::span<const Vec3> pts, double eps) {
    const int n = static_cast<int>(pts.size());
    // Axis-extreme candidates.
    std::array<int, 6> ext{0, 0, 0, 0, 0, 0};
    for (int i = 1; i < n; ++i) {
        const Vec3& p = pts[i];
        if (p.x < pts[ext[0]].x) ext[0] = i;
        if (p.x > pts[ext[1]].x) ext[1] = i;
        if (p.y < pts[ext[2]].y) ext[2] = i;
        if (p.y > pts[ext[3]].y) ext[3] = i;
        if (p.z < pts[ext[4]].z) ext[4] = i;
        if (p.z > pts[ext[5]].z) ext[5] = i;
    }
    // Widest pair among the extremes.
    int i0 = ext[0], i1 = ext[1];
    double best = -1.0;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) {
            double d = (pts[ext[a]] - pts[ext[b]]).norm2();
            if (d > best) {
                best = d;
                i0 = ext[a];
                i1 = ext[b];
            }
        }
    if (std::sqrt(std::max(best, 0.0)) <= eps)
        throw DegenerateHullError("all points coincident within tolerance");

    // Farthest point from the line (i0, i1).
    Vec3 dir = (pts[i1] - pts[i0]).normalized();
    int i2 = -1;
    best = eps;
    for (int i = 0; i < n; ++i) {
        Vec3 r = pts[i] - pts[i0];
        double d = (r - dir * r.dot(dir)).norm();
        if (d > best) {
            best = d;
            i2 = i;
        }
    }
    if (i2 < 0) throw DegenerateHullError("points collinear within tolerance");

    // Farthest point from the plane (i0, i1, i2).
    Vec3 pn = (pts[i1] - pts[i0]).cross(pts[i2] - pts[i0]).normalized();
    int i3 = -1;
    best = eps;
    for (int i = 0; i < n; ++i) {
        double d = std::abs(pn.dot(pts[i] - pts[i0]));
        if (d > best) {
            best = d;
            i3 = i;
        }
    }
    if (i3 < 0) throw DegenerateHullError("points coplanar within tolerance");
    return {i0, i1, i2, i3};
}

}  // namespace

ConvexHull quickhull(std::span<const Vec3> points, double eps_scale) {
    const int n = static_cast<int>(points.size());
    if (n < 4) throw DegenerateHullError("need at least 4 points, got " + std::to_string(n));

    Vec3 lo = points[0], hi = points[0];
    for (const Vec3& p : points) {
        lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
        hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    const double diag = (hi - lo).norm();
    const double eps = eps_scale * diag;
    if (diag <= 0.0) throw DegenerateHullError("all points coincident");

    Builder bld;
    bld.pts = points;
    bld.eps = eps;

    auto [i0, i1, i2, i3] = initial_simplex(points, eps);
    // Positive orientation: i3 above the (i0,i1,i2) plane.
    Vec3 pn = (points[i1] - points[i0]).cross(points[i2] - points[i0]);
    if (pn.dot(points[i3] - points[i0]) > 0.0) std::swap(i1, i2);

    std::vector<int> initial = {bld.add_face(i0, i1, i2), bld.add_face(i0, i2, i3),
                                bld.add_face(i2, i1, i3), bld.add_face(i1, i0, i3)};
    bld.wire(initial);

    for (int i = 0; i < n; ++i) {
        if (i == i0 || i == i1 || i == i2 || i == i3) continue;
        bld.assign_outside(i, initial);
    }
    for (int id : initial)
        if (!bld.faces[id].outside.empty()) bld.work.push_back(id);

    long iterations = 0;
    const long max_iterations = 100L * n + 1000;
    while (!bld.work.empty()) {
        if (++iterations > max_iterations)
            throw DegenerateHullError("quickhull failed to converge");
        int fid = bld.work.back();
        bld.work.pop_back();
        Face& f = bld.faces[fid];
        if (!f.alive || f.outside.empty()) continue;
        const int eye = f.far_idx;
        const Vec3& eye_p = points[eye];

        // Faces visible from the eye (BFS over adjacency). Epoch-tagged
        // marks avoid re-zeroing a faces-sized array every iteration:
        // 2*epoch = visible, 2*epoch + 1 = horizon neighbor.
        const int seen = 2 * ++bld.visit_epoch;
        if (bld.visit_mark.size() < bld.faces.size())
            bld.visit_mark.resize(2 * bld.faces.size() + 16, 0);
        std::vector<int> visible = {fid};
        bld.visit_mark[fid] = seen;
        for (std::size_t qi = 0; qi < visible.size(); ++qi) {
            const Face& g = bld.faces[visible[qi]];
            for (int e = 0; e < 3; ++e) {
                int nb = g.nb[e];
                if (nb < 0 || bld.visit_mark[nb] >= seen) continue;
                if (bld.signed_dist(bld.faces[nb], eye_p) > bld.eps) {
                    bld.visit_mark[nb] = seen;
                    visible.push_back(nb);
                } else {
                    bld.visit_mark[nb] = seen + 1;  // horizon neighbor
                }
            }
        }

        // Horizon edges: edges of visible faces whose neighbor is not visible.
        struct HorizonEdge {
            int a, b, outer_face, outer_slot;
        };
        std::vector<HorizonEdge> horizon;
        for (int vid : visible) {
            const Face& g = bld.faces[vid];
            for (int e = 0; e < 3; ++e) {
                int nb = g.nb[e];
                if (nb < 0 || bld.visit_mark[nb] != seen + 1) continue;
                int a = g.v[e], b = g.v[(e + 1) % 3];
                const Face& outer = bld.faces[nb];
                int slot = 0;
                while (!(outer.v[slot] == b && outer.v[(slot + 1) % 3] == a)) ++slot;
                horizon.push_back({a, b, nb, slot});
            }
        }

        // New faces from the eye to each horizon edge.
        std::vector<int> fresh;
        fresh.reserve(horizon.size());
        for (const auto& he : horizon) {
            int nf = bld.add_face(he.a, he.b, eye);
            bld.link(nf, 0, he.outer_face, he.outer_slot);
            fresh.push_back(nf);
        }
        // Wire the eye-adjacent edges among the fresh faces.
        {
            std::map<std::pair<int, int>, std::pair<int, int>> open;
            for (int id : fresh) {
                const auto& g = bld.faces[id];
                for (int e = 1; e < 3; ++e) {
                    int u = g.v[e], v = g.v[(e + 1) % 3];
                    auto it = open.find({v, u});
                    if (it != open.end()) {
                        bld.link(id, e, it->second.first, it->second.second);
                        open.erase(it);
                    } else {
                        open[{u, v}] = {id, e};
                    }
                }
            }
        }

        // Retire visible faces and redistribute their outside points.
        std::vector<int> orphans;
        for (int vid : visible) {
            Face& g = bld.faces[vid];
            g.alive = false;
            for (int p : g.outside)
                if (p != eye) orphans.push_back(p);
            g.outside.clear();
        }
        for (int p : orphans) bld.assign_outside(p, fresh);
        for (int id : fresh)
            if (!bld.faces[id].outside.empty()) bld.work.push_back(id);
    }

    // Compact to the output representation.
    ConvexHull hull;
    hull.source_count = n;
    std::vector<int> remap(points.size(), -1);
    for (const Face& f : bld.faces) {
        if (!f.alive) continue;
        std::array<int, 3> out{};
        for (int k = 0; k < 3; ++k) {
            int src = f.v[k];
            if (remap[src] < 0) {
                remap[src] = static_cast<int>(hull.vertices.size());
                hull.vertices.push_back(points[src]);
            }
            out[k] = remap[src];
        }
        hull.faces.push_back(out);
    }

    // Winding sanity: every face normal must point away from the vertex mean.
    Vec3 mean{};
    for (const Vec3& v : hull.vertices) mean += v;
    mean = mean / static_cast<double>(hull.vertices.size());
    for (auto& f : hull.faces) {
        const Vec3& a = hull.vertices[f[0]];
        Vec3 nrm = (hull.vertices[f[1]] - a).cross(hull.vertices[f[2]] - a);
        if (nrm.dot(mean - a) > 0.0) std::swap(f[1], f[2]);
    }
    return hull;
}

double hull_volume(const ConvexHull& hull) {
    if (hull.vertices.empty() || hull.faces.empty()) return 0.0;
    Vec3 v0{};
    for (const Vec3& v : hull.vertices) v0 += v;
    v0 = v0 / static_cast<double>(hull.vertices.size());
    double total = 0.0;
    for (const auto& f : hull.faces) {
        Vec3 a = hull.vertices[f[0]] - v0;
        Vec3 b = hull.vertices[f[1]] - v0;
        Vec3 c = hull.vertices[f[2]] - v0;
        total += std::abs(a.dot(b.cross(c)));
    }
    return total / 6.0;
}

Vec3 vertex_mean_centroid(const ConvexHull& hull) {
    Vec3 sum{};
    for (const Vec3& v : hull.vertices) sum += v;
    return sum / static_cast<double>(hull.vertices.size());
}

Vec3 volumetric_centroid(const ConvexHull& hull) {
    Vec3 v0{};
    for (const Vec3& v : hull.vertices) v0 += v;
    v0 = v0 / static_cast<double>(hull.vertices.size());
    double total = 0.0;
    Vec3 weighted{};
    for (const auto& f : hull.faces) {
        const Vec3& a = hull.vertices[f[0]];
        const Vec3& b = hull.vertices[f[1]];
        const Vec3& c = hull.vertices[f[2]];
        double vol = std::abs((a - v0).dot((b - v0).cross(c - v0))) / 6.0;
        Vec3 tet_centroid = (v0 + a + b + c) / 4.0;
        total += vol;
        weighted += tet_centroid * vol;
    }
    if (total <= 0.0) return v0;
    return weighted / total;
}

double max_outside_distance(const ConvexHull& hull, std::span<const Vec3> points) {
    Vec3 mean = vertex_mean_centroid(hull);
    double worst = -std::numeric_limits<double>::infinity();
    for (const auto& f : hull.faces) {
        const Vec3& a = hull.vertices[f[0]];
        Vec3 n = (hull.vertices[f[1]] - a).cross(hull.vertices[f[2]] - a).normalized();
        if (n.dot(mean - a) > 0.0) n = -n;
        for (const Vec3& p : points) worst = std::max(worst, n.dot(p - a));
    }
    return worst;
}

}  // namespace hullborne
