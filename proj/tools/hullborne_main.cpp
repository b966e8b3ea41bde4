#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hullborne/bench.hpp"
#include "hullborne/dynamics.hpp"
#include "hullborne/hull.hpp"
#include "hullborne/obj_io.hpp"
#include "hullborne/primitives.hpp"
#include "hullborne/scene.hpp"
#include "hullborne/submersion.hpp"
#include "hullborne/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumerical = 3;

hullborne::TriMesh load_input(const std::string& path, const std::string& primitive) {
    if (!primitive.empty()) return hullborne::builtin_primitive(primitive);
    return hullborne::load_obj(path);
}

void write_or_print(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

int cmd_hull(const std::string& obj, const std::string& primitive) {
    auto mesh = load_input(obj, primitive);
    auto hull = hullborne::quickhull(mesh.vertices);
    double volume = hullborne::hull_volume(hull);
    auto c5 = hullborne::vertex_mean_centroid(hull);
    auto cv = hullborne::volumetric_centroid(hull);
    std::printf("mesh: %s (%zu vertices, %zu faces)\n", mesh.name.c_str(),
                mesh.vertex_count(), mesh.face_count());
    std::printf("hull: %zu vertices, %zu faces\n", hull.vertex_count(), hull.face_count());
    std::printf("volume: %.9g m^3\n", volume);
    std::printf("centroid (vertex mean): (%.9g, %.9g, %.9g)\n", c5.x, c5.y, c5.z);
    std::printf("centroid (volumetric):  (%.9g, %.9g, %.9g)\n", cv.x, cv.y, cv.z);
    return kExitOk;
}

int cmd_hydrostat(const std::string& obj, const std::string& primitive,
                  const std::string& method, int levels, const std::string& clip,
                  const std::string& out_path, const std::string& plot_path) {
    auto mesh = load_input(obj, primitive);
    auto vm = method == "sliced" ? hullborne::VolumeMethod::sliced
                                 : hullborne::VolumeMethod::hull;
    auto cm = clip == "vertices" ? hullborne::ClipMode::vertices_only
                                 : hullborne::ClipMode::clipped;
    auto curve = hullborne::volume_draft_curve(mesh, hullborne::Pose{}, vm, cm, levels);
    std::string csv = "draft,volume,centroid_z\n";
    char buf[128];
    for (const auto& p : curve) {
        std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g\n", p.draft, p.volume, p.centroid.z);
        csv += buf;
    }
    write_or_print(out_path, csv);
    if (!plot_path.empty()) {
        hullborne::SvgSeries s;
        s.label = method;
        for (const auto& p : curve) s.points.emplace_back(p.draft, p.volume);
        write_or_print(plot_path, hullborne::svg_line_plot("Submerged volume vs draft",
                                                           "draft [m]", "volume [m^3]", {s}));
    }
    return kExitOk;
}

int cmd_simulate(const std::string& scene_path, std::string out_path, std::string plot_path) {
    auto cfg = hullborne::load_scene(scene_path);
    std::string dir = ".";
    auto slash = scene_path.find_last_of('/');
    if (slash != std::string::npos) dir = scene_path.substr(0, slash);
    auto inst = hullborne::instantiate_scene(cfg, dir);
    auto trace = hullborne::run_drop(inst.assembly, cfg.surface, cfg.sim, inst.initial_state);

    if (out_path.empty()) out_path = cfg.trace_path;
    if (plot_path.empty()) plot_path = cfg.plot_path;
    write_or_print(out_path, hullborne::trace_to_csv(trace));
    if (!plot_path.empty()) {
        hullborne::SvgSeries z{"z_cog", "#1f77b4", {}}, eta{"eta", "#2ca02c", {}};
        for (const auto& r : trace.rows) {
            z.points.emplace_back(r.t, r.cog.z);
            eta.points.emplace_back(r.t, r.eta);
        }
        write_or_print(plot_path,
                       hullborne::svg_line_plot("Drop trace", "t [s]", "z [m]", {z, eta}));
    }

    // Summary over the post-transient half of the run.
    const auto& rows = trace.rows;
    std::size_t half = rows.size() / 2;
    double mg = inst.initial_state.mass * cfg.sim.fluid.g;
    double max_fb_dev = 0.0, mean_z = 0.0;
    for (std::size_t i = half; i < rows.size(); ++i) {
        max_fb_dev = std::max(max_fb_dev, std::abs(rows[i].fb - mg));
        mean_z += rows[i].cog.z;
    }
    mean_z /= static_cast<double>(rows.size() - half);
    int up_crossings = 0;
    double first_cross = 0.0, last_cross = 0.0;
    for (std::size_t i = half + 1; i < rows.size(); ++i) {
        if (rows[i - 1].cog.z < mean_z && rows[i].cog.z >= mean_z) {
            if (up_crossings == 0) first_cross = rows[i].t;
            last_cross = rows[i].t;
            ++up_crossings;
        }
    }
    double freq = up_crossings > 1 ? (up_crossings - 1) / (last_cross - first_cross) : 0.0;

    // Draft of the lowest body point at the final sample.
    const auto& last = rows.back();
    hullborne::Quat q =
        hullborne::Quat::from_axis_angle({0, 0, 1}, last.yaw) *
        hullborne::Quat::from_axis_angle({0, 1, 0}, last.pitch) *
        hullborne::Quat::from_axis_angle({1, 0, 0}, last.roll);
    hullborne::Pose pose{last.cog, q.normalized()};
    double low = 1e300;
    for (const auto& mesh : inst.assembly)
        for (const auto& v : mesh.vertices) low = std::min(low, pose.to_world(v).z);
    std::fprintf(stderr, "steps: %zu\n", rows.size());
    std::fprintf(stderr, "settling draft: %.6g m (final eta %.6g, lowest point %.6g)\n",
                 last.eta - low, last.eta, low);
    std::fprintf(stderr, "post-transient oscillation: %.4g Hz (%d up-crossings)\n", freq,
                 up_crossings);
    std::fprintf(stderr, "max |F_b - mg| post-transient: %.6g N (%.4g%% of mg)\n", max_fb_dev,
                 100.0 * max_fb_dev / mg);
    return kExitOk;
}

int cmd_bench(const std::string& obj, const std::string& primitive, int reps,
              const std::string& drafts_arg, const std::string& out_path) {
    auto mesh = load_input(obj, primitive);
    std::vector<double> drafts;
    std::istringstream ss(drafts_arg);
    std::string tok;
    while (std::getline(ss, tok, ',')) drafts.push_back(std::stod(tok));
    auto report = hullborne::run_bench(mesh, drafts, reps);
    std::cout << hullborne::bench_table(report);
    if (!out_path.empty()) write_or_print(out_path, hullborne::bench_to_csv(report));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hullborne: convex-hull buoyancy engine"};
    app.require_subcommand(1);

    std::string obj, primitive, method = "hull", clip = "clipped", out_path, plot_path;
    std::string scene_path, drafts = "0.1,0.3,0.5,0.7,0.9";
    int levels = 50, reps = 5;

    auto* hull = app.add_subcommand("hull", "Convex hull and volume of a mesh");
    hull->add_option("obj", obj, "OBJ file path");
    hull->add_option("--primitive", primitive, "builtin primitive spec instead of an OBJ");

    auto* hydro = app.add_subcommand("hydrostat", "Volume-vs-draft curve");
    hydro->add_option("obj", obj, "OBJ file path");
    hydro->add_option("--primitive", primitive, "builtin primitive spec instead of an OBJ");
    hydro->add_option("--method", method, "hull|sliced")
        ->check(CLI::IsMember({"hull", "sliced"}));
    hydro->add_option("--levels", levels, "number of water levels")->check(CLI::Range(2, 100000));
    hydro->add_option("--clip", clip, "vertices|clipped")
        ->check(CLI::IsMember({"vertices", "clipped"}));
    hydro->add_option("--out", out_path, "CSV output path (default stdout)");
    hydro->add_option("--plot", plot_path, "SVG plot path");

    auto* sim = app.add_subcommand("simulate", "Timestepped flotation from a scene config");
    sim->add_option("scene", scene_path, "scene config path")->required();
    sim->add_option("--out", out_path, "trace CSV path (overrides config)");
    sim->add_option("--plot", plot_path, "SVG plot path (overrides config)");

    auto* bench = app.add_subcommand("bench", "Method comparison benchmark");
    bench->add_option("obj", obj, "OBJ file path");
    bench->add_option("--primitive", primitive, "builtin primitive spec instead of an OBJ");
    bench->add_option("--reps", reps, "repetitions per cell")->check(CLI::Range(3, 100000));
    bench->add_option("--drafts", drafts, "comma-separated draft fractions");
    bench->add_option("--out", out_path, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (hull->parsed()) {
            if (obj.empty() && primitive.empty())
                throw CLI::ValidationError("hull", "need an OBJ path or --primitive");
            return cmd_hull(obj, primitive);
        }
        if (hydro->parsed()) {
            if (obj.empty() && primitive.empty())
                throw CLI::ValidationError("hydrostat", "need an OBJ path or --primitive");
            return cmd_hydrostat(obj, primitive, method, levels, clip, out_path, plot_path);
        }
        if (sim->parsed()) return cmd_simulate(scene_path, out_path, plot_path);
        if (bench->parsed()) {
            if (obj.empty() && primitive.empty())
                throw CLI::ValidationError("bench", "need an OBJ path or --primitive");
            return cmd_bench(obj, primitive, reps, drafts, out_path);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const hullborne::NumericalAbort& e) {
        std::cerr << "numerical abort: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitUsage;
}
