#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <vector>

#include "hullborne/buoyancy.hpp"
#include "hullborne/dynamics.hpp"
#include "hullborne/hull.hpp"
#include "hullborne/obj_io.hpp"
#include "hullborne/primitives.hpp"
#include "hullborne/scene.hpp"
#include "hullborne/submersion.hpp"
#include "hullborne/water.hpp"

namespace py = pybind11;
using namespace hullborne;

namespace {

Vec3 to_vec3(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }
std::array<double, 3> from_vec3(const Vec3& v) { return {v.x, v.y, v.z}; }

TriMesh mesh_from_arrays(const std::vector<std::array<double, 3>>& vertices,
                         const std::vector<std::array<int, 3>>& faces) {
    TriMesh m;
    for (const auto& v : vertices) m.vertices.push_back(to_vec3(v));
    for (const auto& f : faces) m.faces.push_back(f);
    validate_mesh(m);
    return m;
}

WaterSurface surface_of(double level, double amplitude, double frequency, double phase) {
    return amplitude == 0.0 ? WaterSurface::still(level)
                            : WaterSurface::waves(level, amplitude, frequency, phase);
}

}  // namespace

PYBIND11_MODULE(_hullborne, m) {
    m.doc() = "Convex-hull buoyancy engine bindings";

    py::register_exception<ObjParseError>(m, "ObjParseError");
    py::register_exception<MeshError>(m, "MeshError");
    py::register_exception<DegenerateHullError>(m, "DegenerateHullError");
    py::register_exception<NumericalAbort>(m, "NumericalAbortError");
    py::register_exception<SceneConfigError>(m, "SceneConfigError");

    py::class_<TriMesh>(m, "TriMesh")
        .def(py::init(&mesh_from_arrays), py::arg("vertices"), py::arg("faces"))
        .def_property_readonly("vertices",
                               [](const TriMesh& mesh) {
                                   std::vector<std::array<double, 3>> out;
                                   for (const auto& v : mesh.vertices)
                                       out.push_back(from_vec3(v));
                                   return out;
                               })
        .def_property_readonly("faces", [](const TriMesh& mesh) { return mesh.faces; })
        .def_readwrite("name", &TriMesh::name)
        .def("total_volume", [](const TriMesh& mesh) { return mesh_total_volume(mesh); })
        .def("__repr__", [](const TriMesh& mesh) {
            return "TriMesh(" + std::to_string(mesh.vertices.size()) + " vertices, " +
                   std::to_string(mesh.faces.size()) + " faces)";
        });

    m.def("load_obj", &load_obj, py::arg("path"));
    m.def("parse_obj", &parse_obj_string, py::arg("text"), py::arg("name") = "");
    m.def("serialize_obj", &serialize_obj, py::arg("mesh"));
    m.def("primitive", &builtin_primitive, py::arg("spec"));

    m.def(
        "convex_hull",
        [](const std::vector<std::array<double, 3>>& points) {
            std::vector<Vec3> pts;
            for (const auto& p : points) pts.push_back(to_vec3(p));
            ConvexHull hull = quickhull(pts);
            std::vector<std::array<double, 3>> verts;
            for (const auto& v : hull.vertices) verts.push_back(from_vec3(v));
            return py::make_tuple(verts, hull.faces, hull_volume(hull));
        },
        py::arg("points"),
        "Quickhull over a point cloud; returns (vertices, faces, volume).");

    m.def(
        "submerged_volume",
        [](const TriMesh& mesh, double level, const std::string& method,
           const std::string& clip, double dz) {
            WaterSurface surface = WaterSurface::still(level);
            SubmergedRegion r;
            if (method == "sliced") {
                r = sliced_submerged_volume(mesh, Pose{}, surface, 0.0, dz);
            } else if (method == "hull") {
                ClipMode mode =
                    clip == "vertices" ? ClipMode::vertices_only : ClipMode::clipped;
                r = hull_submerged_volume(mesh, Pose{}, surface, 0.0, mode);
            } else {
                throw py::value_error("method must be 'hull' or 'sliced'");
            }
            py::dict out;
            out["volume"] = r.volume;
            out["centroid"] = from_vec3(r.centroid_volumetric);
            out["centroid_vertex_mean"] = from_vec3(r.centroid_eq5);
            out["centroid_defined"] = r.centroid_defined;
            return out;
        },
        py::arg("mesh"), py::arg("level"), py::arg("method") = "hull",
        py::arg("clip") = "clipped", py::arg("dz") = 0.0);

    m.def(
        "buoyant_force",
        [](double volume, double rho_water, double g) {
            return buoyant_force_magnitude({rho_water, g}, volume);
        },
        py::arg("volume"), py::arg("rho_water") = 1000.0, py::arg("g") = 9.81);

    m.def(
        "volume_draft_curve",
        [](const TriMesh& mesh, int n_levels, const std::string& method) {
            auto curve = volume_draft_curve(
                mesh, Pose{},
                method == "sliced" ? VolumeMethod::sliced : VolumeMethod::hull,
                ClipMode::clipped, n_levels);
            std::vector<std::pair<double, double>> out;
            for (const auto& p : curve) out.emplace_back(p.draft, p.volume);
            return out;
        },
        py::arg("mesh"), py::arg("n_levels") = 50, py::arg("method") = "hull");

    m.def(
        "simulate",
        [](const TriMesh& mesh, double mass, const std::array<double, 3>& position,
           double duration, double dt, double level, double wave_amplitude,
           double wave_frequency, double linear_damping, double angular_damping,
           const std::string& inertia_spec) {
            SimConfig cfg;
            cfg.duration = duration;
            cfg.dt = dt;
            cfg.linear_damping = linear_damping;
            cfg.angular_damping = angular_damping;
            cfg.record_timing = false;
            RigidState state;
            state.pose.position = to_vec3(position);
            state.mass = mass;
            state.inertia = primitive_inertia(inertia_spec, mass);
            auto trace = run_drop({mesh}, surface_of(level, wave_amplitude, wave_frequency, 0.0),
                                  cfg, state);
            py::list rows;
            for (const auto& r : trace.rows) {
                py::dict row;
                row["t"] = r.t;
                row["cog"] = from_vec3(r.cog);
                row["volume"] = r.volume;
                row["fb"] = r.fb;
                row["eta"] = r.eta;
                row["roll"] = r.roll;
                row["pitch"] = r.pitch;
                row["yaw"] = r.yaw;
                rows.append(row);
            }
            return rows;
        },
        py::arg("mesh"), py::arg("mass"), py::arg("position"), py::arg("duration") = 5.0,
        py::arg("dt") = 0.01, py::arg("level") = 0.0, py::arg("wave_amplitude") = 0.0,
        py::arg("wave_frequency") = 0.5, py::arg("linear_damping") = 0.0,
        py::arg("angular_damping") = 0.0, py::arg("inertia_spec") = "box 1 1 1");

    m.def(
        "run_scene",
        [](const std::string& path) {
            auto cfg = load_scene(path);
            std::string dir;
            auto slash = path.find_last_of('/');
            if (slash != std::string::npos) dir = path.substr(0, slash);
            auto inst = instantiate_scene(cfg, dir);
            auto trace = run_drop(inst.assembly, cfg.surface, cfg.sim, inst.initial_state);
            return trace_to_csv(trace);
        },
        py::arg("path"), "Runs a scene config and returns the trace CSV as a string.");
}
