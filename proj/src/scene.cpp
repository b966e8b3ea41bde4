#include "hullborne/scene.hpp"

#include <fstream>
#include <sstream>

#include "hullborne/obj_io.hpp"
#include "hullborne/primitives.hpp"

namespace hullborne {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out = "invalid scene config:";
    for (const auto& p : parts) out += "\n  - " + p;
    return out;
}

struct KeyValue {
    std::string section;
    int section_index;  // ordinal of this [section] block
    std::string key;
    std::string value;
};

std::vector<double> parse_numbers(const std::string& s) {
    std::istringstream ss(s);
    std::vector<double> out;
    double v;
    while (ss >> v) out.push_back(v);
    return out;
}

}  // namespace

SceneConfigError::SceneConfigError(std::vector<std::string> v)
    : std::runtime_error(join(v)), violations(std::move(v)) {}

SceneConfig parse_scene(std::istream& in) {
    std::vector<KeyValue> entries;
    std::string line, section;
    int section_index = -1;
    int mesh_count = 0;
    std::vector<std::string> errors;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto last = line.find_last_not_of(" \t\r");
        line = line.substr(first, last - first + 1);
        if (line.front() == '[') {
            if (line.back() != ']') {
                errors.push_back("line " + std::to_string(line_no) + ": malformed section header");
                continue;
            }
            section = line.substr(1, line.size() - 2);
            section_index = section == "mesh" ? mesh_count++ : 0;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            errors.push_back("line " + std::to_string(line_no) + ": expected key = value");
            continue;
        }
        auto strip = [](std::string s) {
            auto a = s.find_first_not_of(" \t");
            auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string{} : s.substr(a, b - a + 1);
        };
        entries.push_back({section, section_index, strip(line.substr(0, eq)),
                           strip(line.substr(eq + 1))});
    }

    SceneConfig cfg;
    cfg.meshes.resize(mesh_count);

    auto vec3 = [&](const KeyValue& e) -> Vec3 {
        auto n = parse_numbers(e.value);
        if (n.size() != 3) {
            errors.push_back(e.section + "." + e.key + ": expected 3 numbers");
            return {};
        }
        return {n[0], n[1], n[2]};
    };
    auto num = [&](const KeyValue& e) -> double {
        auto n = parse_numbers(e.value);
        if (n.size() != 1) {
            errors.push_back(e.section + "." + e.key + ": expected a number");
            return 0.0;
        }
        return n[0];
    };
    auto boolean = [&](const KeyValue& e) -> bool {
        if (e.value == "true" || e.value == "on" || e.value == "1") return true;
        if (e.value == "false" || e.value == "off" || e.value == "0") return false;
        errors.push_back(e.section + "." + e.key + ": expected true/false");
        return false;
    };

    for (const auto& e : entries) {
        if (e.section == "mesh") {
            SceneMesh& m = cfg.meshes[e.section_index];
            if (e.key == "obj") m.obj_path = e.value;
            else if (e.key == "primitive") m.primitive = e.value;
            else if (e.key == "offset") m.offset = vec3(e);
            else errors.push_back("mesh." + e.key + ": unknown key");
        } else if (e.section == "body") {
            if (e.key == "mass") cfg.mass = num(e);
            else if (e.key == "position") cfg.body_position = vec3(e);
            else if (e.key == "velocity") cfg.initial_velocity = vec3(e);
            else if (e.key == "orientation") {
                auto n = parse_numbers(e.value);
                if (n.size() != 4) errors.push_back("body.orientation: expected w x y z");
                else cfg.body_orientation = Quat{n[0], n[1], n[2], n[3]}.normalized();
            } else if (e.key == "inertia") {
                if (e.value == "auto") {
                    cfg.inertia_auto = true;
                } else {
                    auto n = parse_numbers(e.value);
                    if (n.size() == 3) cfg.inertia = Mat3::diagonal(n[0], n[1], n[2]);
                    else if (n.size() == 9) {
                        for (int i = 0; i < 9; ++i) cfg.inertia.m[i] = n[i];
                    } else errors.push_back("body.inertia: expected 'auto', 3, or 9 numbers");
                }
            } else errors.push_back("body." + e.key + ": unknown key");
        } else if (e.section == "fluid") {
            if (e.key == "rho") cfg.sim.fluid.rho_water = num(e);
            else if (e.key == "g") cfg.sim.fluid.g = num(e);
            else errors.push_back("fluid." + e.key + ": unknown key");
        } else if (e.section == "surface") {
            if (e.key == "level") cfg.surface.base_level = num(e);
            else if (e.key == "amplitude") cfg.surface.amplitude = num(e);
            else if (e.key == "frequency") cfg.surface.frequency = num(e);
            else if (e.key == "phase") cfg.surface.phase = num(e);
            else if (e.key == "waves") cfg.surface.enabled = boolean(e);
            else errors.push_back("surface." + e.key + ": unknown key");
        } else if (e.section == "sim") {
            if (e.key == "dt") cfg.sim.dt = num(e);
            else if (e.key == "duration") cfg.sim.duration = num(e);
            else if (e.key == "resort_interval") cfg.sim.resort_interval = static_cast<int>(num(e));
            else if (e.key == "linear_damping") cfg.sim.linear_damping = num(e);
            else if (e.key == "angular_damping") cfg.sim.angular_damping = num(e);
            else if (e.key == "slice_dz") cfg.sim.slice_dz = num(e);
            else if (e.key == "record_timing") cfg.sim.record_timing = boolean(e);
            else if (e.key == "method") {
                if (e.value == "hull") cfg.sim.method = VolumeMethod::hull;
                else if (e.value == "sliced") cfg.sim.method = VolumeMethod::sliced;
                else errors.push_back("sim.method: expected hull|sliced");
            } else if (e.key == "clip") {
                if (e.value == "clipped") cfg.sim.clip_mode = ClipMode::clipped;
                else if (e.value == "vertices") cfg.sim.clip_mode = ClipMode::vertices_only;
                else errors.push_back("sim.clip: expected clipped|vertices");
            } else if (e.key == "centroid") {
                if (e.value == "volumetric") cfg.sim.centroid_mode = CentroidMode::volumetric;
                else if (e.value == "eq5") cfg.sim.centroid_mode = CentroidMode::eq5_vertex_mean;
                else errors.push_back("sim.centroid: expected volumetric|eq5");
            } else errors.push_back("sim." + e.key + ": unknown key");
        } else if (e.section == "output") {
            if (e.key == "trace") cfg.trace_path = e.value;
            else if (e.key == "plot") cfg.plot_path = e.value;
            else if (e.key == "report") cfg.report_path = e.value;
            else errors.push_back("output." + e.key + ": unknown key");
        } else {
            errors.push_back("[" + e.section + "]: unknown section");
        }
    }

    if (cfg.meshes.empty()) errors.push_back("at least one [mesh] section is required");
    for (std::size_t i = 0; i < cfg.meshes.size(); ++i) {
        const auto& m = cfg.meshes[i];
        if (m.obj_path.empty() == m.primitive.empty())
            errors.push_back("mesh #" + std::to_string(i) +
                             ": exactly one of obj/primitive must be set");
    }
    if (cfg.mass <= 0.0) errors.push_back("body.mass: must be > 0");
    if (cfg.sim.dt <= 0.0) errors.push_back("sim.dt: must be > 0");
    if (cfg.sim.duration < cfg.sim.dt) errors.push_back("sim.duration: must be >= dt");
    if (cfg.sim.fluid.rho_water <= 0.0) errors.push_back("fluid.rho: must be > 0");
    if (cfg.sim.fluid.g <= 0.0) errors.push_back("fluid.g: must be > 0");
    if (cfg.surface.amplitude < 0.0) errors.push_back("surface.amplitude: must be >= 0");
    if (cfg.surface.frequency < 0.0) errors.push_back("surface.frequency: must be >= 0");
    if (cfg.inertia_auto && (cfg.meshes.empty() || cfg.meshes[0].primitive.empty()))
        errors.push_back("body.inertia: 'auto' requires the first mesh to be a primitive");

    if (!errors.empty()) throw SceneConfigError(std::move(errors));
    return cfg;
}

SceneConfig load_scene(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SceneConfigError({"cannot open '" + path + "'"});
    return parse_scene(in);
}

SceneInstance instantiate_scene(const SceneConfig& config, const std::string& relative_to) {
    SceneInstance inst;
    std::vector<std::string> errors;
    for (const auto& m : config.meshes) {
        try {
            TriMesh mesh;
            if (!m.primitive.empty()) {
                mesh = builtin_primitive(m.primitive);
            } else {
                std::string path = m.obj_path;
                if (!relative_to.empty() && !path.empty() && path[0] != '/')
                    path = relative_to + "/" + path;
                mesh = load_obj(path);
            }
            for (auto& v : mesh.vertices) v += m.offset;
            inst.assembly.push_back(std::move(mesh));
        } catch (const std::exception& e) {
            errors.push_back(std::string("mesh load failed: ") + e.what());
        }
    }
    if (!errors.empty()) throw SceneConfigError(std::move(errors));

    inst.initial_state.pose.position = config.body_position;
    inst.initial_state.pose.orientation = config.body_orientation;
    inst.initial_state.linear_velocity = config.initial_velocity;
    inst.initial_state.mass = config.mass;
    inst.initial_state.inertia =
        config.inertia_auto ? primitive_inertia(config.meshes[0].primitive, config.mass)
                            : config.inertia;
    return inst;
}

}  // namespace hullborne
