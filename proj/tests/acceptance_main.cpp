// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are pinned in code next to each check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hullborne/bench.hpp"
#include "hullborne/buoyancy.hpp"
#include "hullborne/dynamics.hpp"
#include "hullborne/hull.hpp"
#include "hullborne/primitives.hpp"
#include "hullborne/scene.hpp"
#include "hullborne/submersion.hpp"
#include "oracles.hpp"

#ifndef HULLBORNE_SOURCE_DIR
#define HULLBORNE_SOURCE_DIR "."
#endif

using namespace hullborne;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d. %s — %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list args;
    va_start(args, f);
    std::vsnprintf(buf, sizeof buf, f, args);
    va_end(args);
    return buf;
}

double cylinder_submerged_exact(double r, double h, double level_from_center) {
    double draft = std::clamp(level_from_center + h / 2.0, 0.0, h);
    return std::numbers::pi * r * r * draft;
}

// 1. Submerged-volume error < 3% on sphere and cylinder at 9 drafts each.
void criterion_volume_accuracy() {
    double worst = 0.0;
    auto sphere = make_icosphere(1.0, 4);
    auto cylinder = make_cylinder(0.5, 1.0, 64);
    for (int i = 1; i <= 9; ++i) {
        double f = i / 10.0;
        {
            double level = -1.0 + 2.0 * f;
            auto r = hull_submerged_volume(sphere, Pose{}, WaterSurface::still(level), 0.0,
                                           ClipMode::clipped);
            double exact = oracle::spherical_cap_volume(1.0, 2.0 * f);
            worst = std::max(worst, std::abs(r.volume - exact) / exact);
        }
        {
            double level = -0.5 + f;
            auto r = hull_submerged_volume(cylinder, Pose{}, WaterSurface::still(level), 0.0,
                                           ClipMode::clipped);
            double exact = cylinder_submerged_exact(0.5, 1.0, level);
            worst = std::max(worst, std::abs(r.volume - exact) / exact);
        }
    }
    report(1, "volume accuracy (<3%)", worst < 0.03,
           fmt("worst relative error %.3f%% over 18 drafts", 100.0 * worst));
}

// 2. Tilted-cylinder error < 3% at 0/15/30/45 deg vs a 1e6-sample MC oracle.
void criterion_tilt() {
    auto cylinder = make_cylinder(0.5, 1.0, 64);
    double worst = 0.0;
    for (double deg : {0.0, 15.0, 30.0, 45.0}) {
        Pose pose{{}, Quat::from_axis_angle({0, 1, 0}, deg * std::numbers::pi / 180.0)};
        auto world = world_vertices(cylinder, pose);
        double z_lo = 1e300, z_hi = -1e300;
        Vec3 lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
        for (const auto& p : world) {
            z_lo = std::min(z_lo, p.z);
            z_hi = std::max(z_hi, p.z);
            lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
            hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
        }
        double level = (z_lo + z_hi) / 2.0;  // half draft
        auto region =
            hull_submerged_volume(cylinder, pose, WaterSurface::still(level), 0.0,
                                  ClipMode::clipped);
        // Membership test is analytic: back-rotate into the body frame.
        Quat inv{pose.orientation.w, -pose.orientation.x, -pose.orientation.y,
                 -pose.orientation.z};
        auto inside = [&](const Vec3& p) {
            if (p.z >= level) return false;
            Vec3 b = inv.rotate(p);
            return std::abs(b.z) <= 0.5 && b.x * b.x + b.y * b.y <= 0.25;
        };
        auto est = oracle::mc_volume(inside, lo, {hi.x, hi.y, level}, 1000000, 777);
        worst = std::max(worst, std::abs(region.volume - est.volume) / est.volume);
    }
    report(2, "tilt robustness to 45 deg (<3%)", worst < 0.03,
           fmt("worst error vs MC oracle %.3f%%", 100.0 * worst));
}

// 3. Quickhull equals the brute-force oracle on 200 random sets; containment,
// idempotence, rotation invariance, Euler formula.
void criterion_quickhull() {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> size(8, 50);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int violations = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto pts = oracle::random_points_in_ball(size(rng), 1.0, 10000u + trial);
        auto hull = quickhull(pts);
        auto expected = oracle::brute_force_hull_vertices(pts);
        std::set<std::array<long long, 3>> got, want;
        for (const auto& p : hull.vertices)
            got.insert({std::llround(p.x * 1e9), std::llround(p.y * 1e9),
                        std::llround(p.z * 1e9)});
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (expected[i])
                want.insert({std::llround(pts[i].x * 1e9), std::llround(pts[i].y * 1e9),
                             std::llround(pts[i].z * 1e9)});
        if (got != want) ++violations;
        if (max_outside_distance(hull, pts) > kHullEpsScale * 2.0 * std::sqrt(3.0) + 1e-12)
            ++violations;
        auto again = quickhull(hull.vertices);
        if (std::abs(hull_volume(again) - hull_volume(hull)) >
            1e-12 * std::max(1.0, hull_volume(hull)))
            ++violations;
        Quat q = Quat::from_axis_angle({u(rng), u(rng), 1.0}, u(rng) * 3.0);
        auto rotated = pts;
        for (auto& p : rotated) p = q.rotate(p);
        if (std::abs(hull_volume(quickhull(rotated)) - hull_volume(hull)) >
            1e-9 * std::max(1.0, hull_volume(hull)))
            ++violations;
        std::set<std::pair<int, int>> edges;
        for (const auto& f : hull.faces)
            for (int k = 0; k < 3; ++k) edges.insert(std::minmax(f[k], f[(k + 1) % 3]));
        if (static_cast<long>(hull.vertex_count()) - static_cast<long>(edges.size()) +
                static_cast<long>(hull.face_count()) != 2)
            ++violations;
    }
    report(3, "quickhull correctness (200 random sets)", violations == 0,
           fmt("%d violations", violations));
}

// 4. Hull volume vs Monte-Carlo within 3 sigma on 20 clouds; exact on
// box/tetrahedron to 1e-9 relative.
void criterion_volume_formula() {
    int violations = 0;
    for (int trial = 0; trial < 20; ++trial) {
        auto pts = oracle::random_points_in_ball(40, 1.0, 555u + trial);
        auto hull = quickhull(pts);
        double v = hull_volume(hull);
        auto est = oracle::mc_volume(
            [&](const Vec3& p) { return oracle::point_in_hull(hull, p); }, {-1, -1, -1},
            {1, 1, 1}, 200000, 31u + trial);
        if (std::abs(v - est.volume) > 3.0 * est.sigma + 1e-9) ++violations;
    }
    std::vector<Vec3> cube;
    for (int i = 0; i < 8; ++i)
        cube.push_back({double(i & 1), double((i >> 1) & 1), double((i >> 2) & 1)});
    if (std::abs(hull_volume(quickhull(cube)) - 1.0) > 1e-9) ++violations;
    std::vector<Vec3> tet = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    if (std::abs(hull_volume(quickhull(tet)) - 1.0 / 6.0) > 1e-9 / 6.0) ++violations;
    report(4, "tetrahedral volume formula", violations == 0, fmt("%d violations", violations));
}

// 5. Force and application-point arithmetic at 1e-12.
void criterion_force_arithmetic() {
    FluidParams fluid;
    bool ok = buoyant_force_magnitude(fluid, 0.001) == 9.81;
    auto region = [](double v, Vec3 c) {
        SubmergedRegion r;
        r.volume = v;
        r.centroid_eq5 = r.centroid_volumetric = c;
        r.centroid_defined = true;
        return r;
    };
    auto symmetric = assembly_buoyancy(
        {{"a", region(0.5, {-1, 0, 0})}, {"b", region(0.5, {1, 0, 0})}}, fluid);
    ok = ok && std::abs(symmetric.application_point.x) <= 1e-12 &&
         std::abs(symmetric.total_force.z - 9810.0) <= 1e-12 * 9810.0;
    auto split = assembly_buoyancy(
        {{"a", region(0.75, {0, 0, 0})}, {"b", region(0.25, {1, 0, 0})}}, fluid);
    ok = ok && std::abs(split.application_point.x - 0.25) <= 1e-12;
    auto scaled = assembly_buoyancy(
        {{"a", region(0.75 * 7, {0, 0, 0})}, {"b", region(0.25 * 7, {1, 0, 0})}}, fluid);
    ok = ok && std::abs(scaled.application_point.x - split.application_point.x) <= 1e-12;
    report(5, "buoyancy arithmetic (rho g V, weighted centroid)", ok, "exact to 1e-12");
}

// 6. Half-density cube settles at half draft within 2% over 5 s / dt 0.01.
void criterion_settling() {
    auto cube = make_box(0.2, 0.2, 0.2);
    SimConfig cfg;
    cfg.linear_damping = 60.0;
    RigidState state;
    state.pose.position = {0, 0, 0.15};
    state.mass = 4.0;  // rho_body / rho_water = 0.5
    state.inertia = box_inertia(4.0, 0.2, 0.2, 0.2);
    auto trace = run_drop({cube}, WaterSurface::still(0.0), cfg, state);
    double draft = 0.1 - trace.rows.back().cog.z;
    bool ok = trace.rows.size() == 500 && std::abs(draft - 0.1) / 0.1 < 0.02;
    report(6, "Archimedes settling (draft 0.5 h +/- 2%)", ok,
           fmt("final draft %.4f m (target 0.100), %zu steps", draft, trace.rows.size()));
}

// 7. Post-transient CoG oscillation frequency on 0.5 Hz waves within 5%;
// amplitude reported, not asserted.
void criterion_wave_following() {
    auto cube = make_box(1, 1, 1);
    SimConfig cfg;
    cfg.duration = 12.0;
    cfg.linear_damping = 4000.0;
    RigidState state;
    state.pose.position = {0, 0, 0.2};
    state.mass = 500.0;
    state.inertia = box_inertia(500.0, 1, 1, 1);
    auto trace = run_drop({cube}, WaterSurface::waves(0.0, 0.3, 0.5), cfg, state);

    double mean_z = 0.0;
    std::size_t first = 200;  // t > 2 s
    for (std::size_t i = first; i < trace.rows.size(); ++i) mean_z += trace.rows[i].cog.z;
    mean_z /= static_cast<double>(trace.rows.size() - first);
    std::vector<double> crossings;
    double amplitude = 0.0;
    for (std::size_t i = first + 1; i < trace.rows.size(); ++i) {
        double a = trace.rows[i - 1].cog.z - mean_z, b = trace.rows[i].cog.z - mean_z;
        amplitude = std::max(amplitude, std::abs(b));
        if (a < 0.0 && b >= 0.0)
            crossings.push_back(trace.rows[i - 1].t + cfg.dt * (-a) / (b - a));
    }
    double freq = crossings.size() > 1
                      ? (crossings.size() - 1) / (crossings.back() - crossings.front())
                      : 0.0;
    bool ok = std::abs(freq - 0.5) / 0.5 < 0.05;
    report(7, "wave following (0.5 Hz +/- 5%)", ok,
           fmt("measured %.4f Hz from %zu up-crossings; amplitude %.4f m (reported only)",
               freq, crossings.size(), amplitude));
}

// 8. Single clipped-hull step on a 10k-vertex mesh: median < 16.6 ms.
void criterion_realtime() {
    auto sphere = make_icosphere(1.0, 5);  // 10242 vertices
    WaterSurface surface = WaterSurface::still(0.0);
    std::vector<double> times;
    double volume = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
        auto t0 = std::chrono::steady_clock::now();
        volume = hull_submerged_volume(sphere, Pose{}, surface, 0.0, ClipMode::clipped).volume;
        auto t1 = std::chrono::steady_clock::now();
        times.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    std::sort(times.begin(), times.end());
    double median = times[times.size() / 2];
    report(8, "real-time budget (60 Hz, 10k vertices)", median < 16.6,
           fmt("median %.3f ms over 100 reps (volume %.4f)", median, volume));
}

// 9. Sliced vs hull primitive-op counts on the hourglass at 5 drafts.
void criterion_iteration_reduction() {
    // Dense tessellation: the ratio is density-dependent (hull tests per
    // point grow with the cloud size while slicing stays linear).
    auto mesh = make_hourglass(0.5, 1.0, 1024);
    auto bench = run_bench(mesh, {0.1, 0.3, 0.5, 0.7, 0.9}, 3);
    double hull_ops = 0.0, sliced_ops = 0.0;
    int hull_n = 0, sliced_n = 0;
    for (const auto& a : bench.aggregates) {
        if (a.method == "hull_clipped") {
            hull_ops += static_cast<double>(a.ops);
            ++hull_n;
        } else if (a.method == "sliced") {
            sliced_ops += static_cast<double>(a.ops);
            ++sliced_n;
        }
    }
    hull_ops /= hull_n;
    sliced_ops /= sliced_n;
    bool ok = sliced_ops < hull_ops;
    report(9, "iteration reduction (sliced < hull ops)", ok,
           fmt("sliced/hull op ratio %.3f (paper reports 0.60; hull %.0f vs sliced %.0f "
               "mean ops)",
               sliced_ops / hull_ops, hull_ops, sliced_ops));
}

// 10. F_b standard deviation over 100 steps at static equilibrium < 0.1% mg.
void criterion_force_consistency() {
    auto cube = make_box(0.2, 0.2, 0.2);
    SimConfig cfg;
    cfg.linear_damping = 60.0;
    RigidState state;
    state.pose.position = {0, 0, 0.0};  // exact equilibrium draft 0.1
    state.mass = 4.0;
    state.inertia = box_inertia(4.0, 0.2, 0.2, 0.2);
    std::vector<double> fb;
    WaterSurface surface = WaterSurface::still(0.0);
    for (int i = 0; i < 100; ++i) {
        BuoyancyReport r;
        state = step(state, {cube}, surface, cfg, i * cfg.dt, &r);
        fb.push_back(r.total_force.z);
    }
    double mean = 0.0;
    for (double f : fb) mean += f;
    mean /= fb.size();
    double var = 0.0;
    for (double f : fb) var += (f - mean) * (f - mean);
    double sd = std::sqrt(var / fb.size());
    double mg = 4.0 * cfg.fluid.g;
    report(10, "force consistency at equilibrium", sd < 0.001 * mg,
           fmt("sd %.6g N = %.5f%% of mg", sd, 100.0 * sd / mg));
}

// 11. Monotonicity, bounds, clipped >= vertices_only over 50 random levels
// per mesh. Bounds use the hull on convex meshes and slicing on the
// hourglass (the 3D hull convexifies the waist by construction).
void criterion_monotonicity() {
    int violations = 0;
    struct Case {
        TriMesh mesh;
        bool convex;
    };
    std::vector<Case> cases;
    cases.push_back({make_box(1, 1, 1), true});
    cases.push_back({make_icosphere(0.6, 3), true});
    cases.push_back({make_hourglass(0.5, 1.0, 32), false});
    std::mt19937 rng(2718);
    for (const auto& c : cases) {
        double z_lo = 1e300, z_hi = -1e300;
        for (const auto& v : c.mesh.vertices) {
            z_lo = std::min(z_lo, v.z);
            z_hi = std::max(z_hi, v.z);
        }
        std::uniform_real_distribution<double> u(z_lo - 0.1, z_hi + 0.1);
        std::vector<double> levels;
        for (int i = 0; i < 50; ++i) levels.push_back(u(rng));
        std::sort(levels.begin(), levels.end());
        double total = mesh_total_volume(c.mesh);
        double prev = -1.0;
        for (double level : levels) {
            WaterSurface s = WaterSurface::still(level);
            auto clip = hull_submerged_volume(c.mesh, Pose{}, s, 0.0, ClipMode::clipped);
            auto bare =
                hull_submerged_volume(c.mesh, Pose{}, s, 0.0, ClipMode::vertices_only);
            if (clip.volume < prev - 1e-9) ++violations;
            if (clip.volume < bare.volume - 1e-9) ++violations;
            double bound_volume =
                c.convex ? clip.volume
                         : sliced_submerged_volume(c.mesh, Pose{}, s, 0.0).volume;
            if (bound_volume < 0.0 || bound_volume > total * 1.03) ++violations;
            prev = clip.volume;
        }
    }
    report(11, "monotonicity & bounds (150 random levels)", violations == 0,
           fmt("%d violations", violations));
}

// 12. Byte-identical traces across runs and against checked-in goldens.
void criterion_determinism() {
    const std::string source_dir = HULLBORNE_SOURCE_DIR;
    int mismatches = 0;
    std::string detail;
    for (const std::string scene : {"cube_still", "cube_waves"}) {
        auto cfg = load_scene(source_dir + "/scenes/" + scene + ".cfg");
        auto inst = instantiate_scene(cfg, source_dir + "/scenes");
        auto a = trace_to_csv(run_drop(inst.assembly, cfg.surface, cfg.sim, inst.initial_state));
        auto b = trace_to_csv(run_drop(inst.assembly, cfg.surface, cfg.sim, inst.initial_state));
        if (a != b) {
            ++mismatches;
            detail += scene + ": rerun differs; ";
        }
        std::ifstream golden(source_dir + "/tests/golden/" + scene + ".csv");
        std::stringstream buf;
        buf << golden.rdbuf();
        if (!golden || buf.str() != a) {
            ++mismatches;
            detail += scene + ": golden differs; ";
        }
    }
    report(12, "determinism & golden traces", mismatches == 0,
           mismatches == 0 ? "byte-identical across runs and vs goldens" : detail);
}

}  // namespace

int main() {
    criterion_volume_accuracy();
    criterion_tilt();
    criterion_quickhull();
    criterion_volume_formula();
    criterion_force_arithmetic();
    criterion_settling();
    criterion_wave_following();
    criterion_realtime();
    criterion_iteration_reduction();
    criterion_force_consistency();
    criterion_monotonicity();
    criterion_determinism();
    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTANCE OK" : "ACCEPTANCE",
                failures);
    return failures == 0 ? 0 : 1;
}
