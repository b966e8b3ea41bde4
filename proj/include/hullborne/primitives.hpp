#pragma once

#include <string>

#include "hullborne/mesh.hpp"
#include "hullborne/vec.hpp"

namespace hullborne {

// Watertight, consistently wound oracle meshes with closed-form volumes.

// Axis-aligned box centered at the origin.
TriMesh make_box(double sx, double sy, double sz);

// Subdivided icosahedron projected onto the sphere of radius r.
TriMesh make_icosphere(double r, int subdivisions);

// Cylinder of radius r, height h, axis along z, centered at the origin.
TriMesh make_cylinder(double r, double h, int segments);

// Cone with base ring (radius r) at z = 0 and apex at (0, 0, h).
TriMesh make_cone(double r, double h, int segments);

// Two cones apex-to-apex at the origin: base rings at z = -h and z = +h.
TriMesh make_hourglass(double r, double h, int segments);

// Parses a primitive spec string: "box SX SY SZ", "icosphere R SUBDIV",
// "cylinder R H SEGS", "cone R H SEGS", "hourglass R H SEGS".
TriMesh builtin_primitive(const std::string& spec);

// Analytic body-frame inertia tensors about the CoG for the same primitives.
Mat3 box_inertia(double mass, double sx, double sy, double sz);
Mat3 sphere_inertia(double mass, double r);
Mat3 cylinder_inertia(double mass, double r, double h);
Mat3 hourglass_inertia(double mass, double r, double h);

// Inertia matching a primitive spec string (apex-centered cone uses the
// tensor about its own centroid).
Mat3 primitive_inertia(const std::string& spec, double mass);

}  // namespace hullborne
