#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "hullborne/dynamics.hpp"
#include "hullborne/mesh.hpp"

namespace hullborne {

// Collects every violated field so the CLI can list them all at once.
struct SceneConfigError : std::runtime_error {
    std::vector<std::string> violations;
    explicit SceneConfigError(std::vector<std::string> v);
};

// One mesh of the assembly, in body frame. Exactly one of obj/primitive set.
struct SceneMesh {
    std::string obj_path;
    std::string primitive;  // e.g. "box 1 1 1"
    Vec3 offset{};          // body-frame translation applied to the vertices
};

struct SceneConfig {
    std::vector<SceneMesh> meshes;
    double mass = 1.0;
    Mat3 inertia{};
    bool inertia_auto = false;  // derive from the first mesh's primitive spec
    Vec3 body_position{};
    Quat body_orientation{};
    Vec3 initial_velocity{};
    WaterSurface surface = WaterSurface::still();
    SimConfig sim{};
    std::string trace_path;
    std::string plot_path;
    std::string report_path;
};

// Key/value format with [section] headers; `[mesh]` sections repeat.
// Schema documented in the README. Throws SceneConfigError listing every
// violated field.
SceneConfig parse_scene(std::istream& in);
SceneConfig load_scene(const std::string& path);

// Resolved simulation inputs derived from a SceneConfig.
struct SceneInstance {
    std::vector<TriMesh> assembly;
    RigidState initial_state;
};

// Loads/generates all meshes and builds the initial rigid state.
// relative_to: directory used to resolve relative OBJ paths.
SceneInstance instantiate_scene(const SceneConfig& config,
                                const std::string& relative_to = "");

}  // namespace hullborne
