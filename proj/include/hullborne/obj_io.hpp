#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "hullborne/mesh.hpp"

namespace hullborne {

struct ObjParseError : std::runtime_error {
    int line;
    ObjParseError(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Minimal OBJ subset: `v` and `f` records only; vt/vn/usemtl/g/o/# skipped.
// Polygon faces are fan-triangulated from the first vertex. 1-based and
// negative (relative) indices supported. The parsed mesh is validated.
TriMesh parse_obj(std::istream& in, const std::string& name = "");
TriMesh parse_obj_string(const std::string& text, const std::string& name = "");
TriMesh load_obj(const std::string& path);

// v/f records only; parse_obj(serialize_obj(m)) reproduces m.
std::string serialize_obj(const TriMesh& mesh);

}  // namespace hullborne
