#include "hullborne/obj_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

namespace hullborne {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

double parse_coord(const std::string& tok, int line_no) {
    const char* begin = tok.data();
    const char* end = begin + tok.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ObjParseError(line_no, "non-numeric vertex coordinate '" + tok + "'");
    return value;
}

// Face tokens look like "3", "3/1", "3/1/2", "3//2"; only the vertex index
// part is used.
int parse_face_index(const std::string& tok, int vertex_count, int line_no) {
    std::string head = tok.substr(0, tok.find('/'));
    int idx = 0;
    auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), idx);
    if (ec != std::errc{} || ptr != head.data() + head.size() || idx == 0)
        throw ObjParseError(line_no, "bad face index '" + tok + "'");
    int zero_based = idx > 0 ? idx - 1 : vertex_count + idx;
    if (zero_based < 0 || zero_based >= vertex_count)
        throw ObjParseError(line_no, "face index " + std::to_string(idx) +
                                         " out of range (have " +
                                         std::to_string(vertex_count) + " vertices)");
    return zero_based;
}

}  // namespace

TriMesh parse_obj(std::istream& in, const std::string& name) {
    TriMesh mesh;
    mesh.name = name;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks[0] == "v") {
            if (toks.size() < 4)
                throw ObjParseError(line_no, "vertex record needs 3 coordinates");
            mesh.vertices.push_back({parse_coord(toks[1], line_no),
                                     parse_coord(toks[2], line_no),
                                     parse_coord(toks[3], line_no)});
        } else if (toks[0] == "f") {
            if (toks.size() < 4)
                throw ObjParseError(line_no, "face record needs at least 3 indices");
            int vc = static_cast<int>(mesh.vertices.size());
            std::vector<int> poly;
            for (std::size_t i = 1; i < toks.size(); ++i)
                poly.push_back(parse_face_index(toks[i], vc, line_no));
            for (std::size_t i = 1; i + 1 < poly.size(); ++i)
                mesh.faces.push_back({poly[0], poly[i], poly[i + 1]});
        }
        // vt, vn, usemtl, mtllib, g, o, s: ignored.
    }
    validate_mesh(mesh);
    return mesh;
}

TriMesh parse_obj_string(const std::string& text, const std::string& name) {
    std::istringstream ss(text);
    return parse_obj(ss, name);
}

TriMesh load_obj(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MeshError("cannot open '" + path + "'");
    std::string name = path;
    auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    return parse_obj(in, name);
}

std::string serialize_obj(const TriMesh& mesh) {
    std::string out;
    if (!mesh.name.empty()) out += "o " + mesh.name + "\n";
    char buf[96];
    for (const auto& v : mesh.vertices) {
        std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v.x, v.y, v.z);
        out += buf;
    }
    for (const auto& f : mesh.faces) {
        std::snprintf(buf, sizeof buf, "f %d %d %d\n", f[0] + 1, f[1] + 1, f[2] + 1);
        out += buf;
    }
    return out;
}

}  // namespace hullborne
