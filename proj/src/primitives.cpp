#include "hullborne/primitives.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace hullborne {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void ring(TriMesh& mesh, double r, double z, int n) {
    for (int i = 0; i < n; ++i) {
        double a = 2.0 * std::numbers::pi * i / n;
        mesh.vertices.push_back({r * std::cos(a), r * std::sin(a), z});
    }
}

}  // namespace

TriMesh make_box(double sx, double sy, double sz) {
    require(sx > 0 && sy > 0 && sz > 0, "box: dimensions must be positive");
    TriMesh m;
    m.name = "box";
    double hx = sx / 2, hy = sy / 2, hz = sz / 2;
    for (int i = 0; i < 8; ++i)
        m.vertices.push_back({(i & 1) ? hx : -hx, (i & 2) ? hy : -hy, (i & 4) ? hz : -hz});
    // Outward-wound quads, split into triangles.
    const int quads[6][4] = {
        {0, 2, 3, 1},  // bottom (-z)
        {4, 5, 7, 6},  // top (+z)
        {0, 1, 5, 4},  // -y
        {2, 6, 7, 3},  // +y
        {0, 4, 6, 2},  // -x
        {1, 3, 7, 5},  // +x
    };
    for (const auto& q : quads) {
        m.faces.push_back({q[0], q[1], q[2]});
        m.faces.push_back({q[0], q[2], q[3]});
    }
    return m;
}

TriMesh make_icosphere(double r, int subdivisions) {
    require(r > 0, "icosphere: radius must be positive");
    require(subdivisions >= 0 && subdivisions <= 7, "icosphere: subdivisions in [0, 7]");
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    TriMesh m;
    m.name = "icosphere";
    const double raw[12][3] = {{-1, phi, 0}, {1, phi, 0},   {-1, -phi, 0}, {1, -phi, 0},
                               {0, -1, phi}, {0, 1, phi},   {0, -1, -phi}, {0, 1, -phi},
                               {phi, 0, -1}, {phi, 0, 1},   {-phi, 0, -1}, {-phi, 0, 1}};
    for (const auto& v : raw) {
        Vec3 p{v[0], v[1], v[2]};
        m.vertices.push_back(p.normalized() * r);
    }
    m.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
               {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
               {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
               {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
    for (int s = 0; s < subdivisions; ++s) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int a, int b) {
            auto key = std::minmax(a, b);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            Vec3 p = ((m.vertices[a] + m.vertices[b]) / 2.0).normalized() * r;
            int idx = static_cast<int>(m.vertices.size());
            m.vertices.push_back(p);
            midpoint[key] = idx;
            return idx;
        };
        std::vector<std::array<int, 3>> next;
        next.reserve(m.faces.size() * 4);
        for (const auto& f : m.faces) {
            int ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
            next.push_back({f[0], ab, ca});
            next.push_back({f[1], bc, ab});
            next.push_back({f[2], ca, bc});
            next.push_back({ab, bc, ca});
        }
        m.faces = std::move(next);
    }
    return m;
}

TriMesh make_cylinder(double r, double h, int segments) {
    require(r > 0 && h > 0, "cylinder: dimensions must be positive");
    require(segments >= 3, "cylinder: need at least 3 segments");
    TriMesh m;
    m.name = "cylinder";
    const int n = segments;
    ring(m, r, -h / 2, n);  // 0..n-1
    ring(m, r, h / 2, n);   // n..2n-1
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        m.faces.push_back({i, j, n + j});
        m.faces.push_back({i, n + j, n + i});
    }
    for (int i = 1; i + 1 < n; ++i) {
        m.faces.push_back({0, i + 1, i});              // bottom cap, -z
        m.faces.push_back({n, n + i, n + i + 1});      // top cap, +z
    }
    return m;
}

TriMesh make_cone(double r, double h, int segments) {
    require(r > 0 && h > 0, "cone: dimensions must be positive");
    require(segments >= 3, "cone: need at least 3 segments");
    TriMesh m;
    m.name = "cone";
    const int n = segments;
    ring(m, r, 0.0, n);
    m.vertices.push_back({0, 0, h});  // apex = n
    for (int i = 0; i < n; ++i) m.faces.push_back({i, (i + 1) % n, n});
    for (int i = 1; i + 1 < n; ++i) m.faces.push_back({0, i + 1, i});
    return m;
}

TriMesh make_hourglass(double r, double h, int segments) {
    require(r > 0 && h > 0, "hourglass: dimensions must be positive");
    require(segments >= 3, "hourglass: need at least 3 segments");
    TriMesh m;
    m.name = "hourglass";
    const int n = segments;
    // Lower cone: base ring at -h, apex at the origin.
    ring(m, r, -h, n);                 // 0..n-1
    m.vertices.push_back({0, 0, 0});   // lower apex = n
    for (int i = 0; i < n; ++i) m.faces.push_back({i, (i + 1) % n, n});
    for (int i = 1; i + 1 < n; ++i) m.faces.push_back({0, i + 1, i});
    // Upper cone: base ring at +h, its own apex vertex at the origin.
    const int base = n + 1;
    ring(m, r, h, n);                       // base..base+n-1
    m.vertices.push_back({0, 0, 0});        // upper apex = base+n
    for (int i = 0; i < n; ++i)
        m.faces.push_back({base + (i + 1) % n, base + i, base + n});
    for (int i = 1; i + 1 < n; ++i) m.faces.push_back({base, base + i, base + i + 1});
    return m;
}

TriMesh builtin_primitive(const std::string& spec) {
    std::istringstream ss(spec);
    std::string kind;
    ss >> kind;
    auto num = [&](const char* what) {
        double v;
        if (!(ss >> v)) throw std::invalid_argument("primitive '" + spec + "': missing " + what);
        return v;
    };
    if (kind == "box") {
        double sx = num("sx"), sy = num("sy"), sz = num("sz");
        return make_box(sx, sy, sz);
    }
    if (kind == "icosphere") {
        double r = num("radius");
        int sub = static_cast<int>(num("subdivisions"));
        return make_icosphere(r, sub);
    }
    if (kind == "cylinder") {
        double r = num("radius"), h = num("height");
        int n = static_cast<int>(num("segments"));
        return make_cylinder(r, h, n);
    }
    if (kind == "cone") {
        double r = num("radius"), h = num("height");
        int n = static_cast<int>(num("segments"));
        return make_cone(r, h, n);
    }
    if (kind == "hourglass") {
        double r = num("radius"), h = num("height");
        int n = static_cast<int>(num("segments"));
        return make_hourglass(r, h, n);
    }
    throw std::invalid_argument("unknown primitive kind '" + kind + "'");
}

Mat3 box_inertia(double mass, double sx, double sy, double sz) {
    double k = mass / 12.0;
    return Mat3::diagonal(k * (sy * sy + sz * sz), k * (sx * sx + sz * sz),
                          k * (sx * sx + sy * sy));
}

Mat3 sphere_inertia(double mass, double r) {
    double i = 0.4 * mass * r * r;
    return Mat3::diagonal(i, i, i);
}

Mat3 cylinder_inertia(double mass, double r, double h) {
    double ixy = mass * (3 * r * r + h * h) / 12.0;
    return Mat3::diagonal(ixy, ixy, mass * r * r / 2.0);
}

Mat3 hourglass_inertia(double mass, double r, double h) {
    // Two solid cones, apexes at the CoG. Per cone (mass m/2): about its own
    // centroid Ix = m(3r^2/20 + 3h^2/80), then parallel-axis by 3h/4.
    double mc = mass / 2.0;
    double ix = 2.0 * (mc * (3 * r * r / 20.0 + 3 * h * h / 80.0) +
                       mc * (3 * h / 4.0) * (3 * h / 4.0));
    double iz = 2.0 * (0.3 * mc * r * r);
    return Mat3::diagonal(ix, ix, iz);
}

Mat3 primitive_inertia(const std::string& spec, double mass) {
    std::istringstream ss(spec);
    std::string kind;
    double a = 0, b = 0, c = 0;
    ss >> kind >> a >> b >> c;
    if (kind == "box") return box_inertia(mass, a, b, c);
    if (kind == "icosphere") return sphere_inertia(mass, a);
    if (kind == "cylinder") return cylinder_inertia(mass, a, b);
    if (kind == "hourglass") return hourglass_inertia(mass, a, b);
    if (kind == "cone") {
        // About the cone's own centroid (not the apex).
        double ix = mass * (3 * a * a / 20.0 + 3 * b * b / 80.0);
        return Mat3::diagonal(ix, ix, 0.3 * mass * a * a);
    }
    throw std::invalid_argument("no analytic inertia for '" + spec + "'");
}

}  // namespace hullborne
