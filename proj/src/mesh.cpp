#include "hullborne/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace hullborne {

void validate_mesh(const TriMesh& mesh) {
    if (mesh.vertices.size() < 4)
        throw MeshError("degenerate mesh: fewer than 4 vertices (" +
                        std::to_string(mesh.vertices.size()) + ")");
    const int n = static_cast<int>(mesh.vertices.size());
    for (std::size_t i = 0; i < mesh.faces.size(); ++i) {
        const auto& f = mesh.faces[i];
        for (int k = 0; k < 3; ++k)
            if (f[k] < 0 || f[k] >= n)
                throw MeshError("face " + std::to_string(i) + ": vertex index " +
                                std::to_string(f[k]) + " out of range [0, " +
                                std::to_string(n) + ")");
        if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
            throw MeshError("face " + std::to_string(i) + " references the same vertex twice");
    }
}

double mesh_total_volume(const TriMesh& mesh) {
    double six_v = 0.0;
    for (const auto& f : mesh.faces) {
        const Vec3& a = mesh.vertices[f[0]];
        const Vec3& b = mesh.vertices[f[1]];
        const Vec3& c = mesh.vertices[f[2]];
        six_v += a.dot(b.cross(c));
    }
    return std::abs(six_v) / 6.0;
}

std::vector<std::pair<int, int>> mesh_edges(const TriMesh& mesh) {
    std::set<std::pair<int, int>> edges;
    for (const auto& f : mesh.faces)
        for (int k = 0; k < 3; ++k) {
            int a = f[k], b = f[(k + 1) % 3];
            edges.emplace(std::min(a, b), std::max(a, b));
        }
    return {edges.begin(), edges.end()};
}

}  // namespace hullborne
