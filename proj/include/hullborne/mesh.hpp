#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hullborne/vec.hpp"

namespace hullborne {

struct MeshError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Triangle mesh in body frame, meters, z-up. Face indices are 0-based.
struct TriMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;
    std::string name;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t face_count() const { return faces.size(); }
};

// Throws MeshError on out-of-range indices, repeated indices within a face,
// or fewer than 4 vertices.
void validate_mesh(const TriMesh& mesh);

// Signed-tetrahedron volume of the whole mesh against the origin, absolute
// value taken on the total. Assumes a watertight, consistently wound mesh;
// non-watertight input gives an unreliable result (not detected).
double mesh_total_volume(const TriMesh& mesh);

// Undirected edge set (each pair sorted ascending, deduplicated).
std::vector<std::pair<int, int>> mesh_edges(const TriMesh& mesh);

}  // namespace hullborne
