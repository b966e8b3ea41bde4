#include "hullborne/dynamics.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <sstream>

namespace hullborne {

namespace {

int env_thread_cap() {
    const char* v = std::getenv("HULLBORNE_THREADS");
    if (!v) return 1;
    int n = std::atoi(v);
    return n > 0 ? n : 1;
}

bool finite(const Vec3& v) {
    return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

[[noreturn]] void abort_with_dump(const RigidState& s, double t) {
    std::ostringstream os;
    os << "non-finite state at t=" << t << ": pos=(" << s.pose.position.x << ","
       << s.pose.position.y << "," << s.pose.position.z << ") vel=("
       << s.linear_velocity.x << "," << s.linear_velocity.y << "," << s.linear_velocity.z
       << ") omega=(" << s.angular_velocity.x << "," << s.angular_velocity.y << ","
       << s.angular_velocity.z << ") quat=(" << s.pose.orientation.w << ","
       << s.pose.orientation.x << "," << s.pose.orientation.y << ","
       << s.pose.orientation.z << ")";
    throw NumericalAbort(os.str());
}

SubmergedRegion region_for(const TriMesh& mesh, const Pose& pose, const WaterSurface& surface,
                           const SimConfig& config, double t) {
    return config.method == VolumeMethod::hull
               ? hull_submerged_volume(mesh, pose, surface, t, config.clip_mode)
               : sliced_submerged_volume(mesh, pose, surface, t, config.slice_dz);
}

RigidState step_impl(const RigidState& state, const std::vector<TriMesh>& assembly,
                     const WaterSurface& surface, const SimConfig& config, double t,
                     BuoyancyReport* report_out, std::vector<VertexTracker>* trackers) {
    const double eta = surface.level_at(t);

    std::vector<std::pair<std::string, SubmergedRegion>> regions(assembly.size());
    const int threads = env_thread_cap();
    auto compute_one = [&](std::size_t i) {
        std::string id = assembly[i].name.empty() ? "mesh" + std::to_string(i) : assembly[i].name;
        if (trackers &&
            update_vertex_tracker((*trackers)[i], assembly[i], state.pose, eta)) {
            SubmergedRegion empty;
            empty.method = config.method;
            empty.clip_mode = config.clip_mode;
            regions[i] = {std::move(id), empty};
            return;
        }
        regions[i] = {std::move(id),
                      region_for(assembly[i], state.pose, surface, config, t)};
    };
    if (threads > 1 && assembly.size() > 1) {
        std::vector<std::future<void>> futs;
        for (std::size_t i = 0; i < assembly.size(); ++i)
            futs.push_back(std::async(std::launch::async, compute_one, i));
        for (auto& f : futs) f.get();
    } else {
        for (std::size_t i = 0; i < assembly.size(); ++i) compute_one(i);
    }

    BuoyancyReport report = assembly_buoyancy(regions, config.fluid, config.centroid_mode);

    const Vec3 cog = state.pose.position;
    Vec3 force{0.0, 0.0, -state.mass * config.fluid.g};
    force += report.total_force;
    force -= state.linear_velocity * config.linear_damping;
    Vec3 torque{};
    if (report.application_point_defined)
        torque += (report.application_point - cog).cross(report.total_force);
    torque -= state.angular_velocity * config.angular_damping;

    RigidState next = state;
    next.linear_velocity += force * (config.dt / state.mass);
    Mat3 rot = Mat3::from_quat(state.pose.orientation);
    Mat3 inertia_world = rot * state.inertia * rot.transposed();
    next.angular_velocity += inertia_world.inverse() * torque * config.dt;

    next.pose.position += next.linear_velocity * config.dt;
    double omega_norm = next.angular_velocity.norm();
    if (omega_norm > 0.0) {
        Quat dq = Quat::from_axis_angle(next.angular_velocity / omega_norm,
                                        omega_norm * config.dt);
        next.pose.orientation = dq * next.pose.orientation;
    }
    next.pose.orientation = next.pose.orientation.normalized();

    if (!finite(next.pose.position) || !finite(next.linear_velocity) ||
        !finite(next.angular_velocity) || !std::isfinite(next.pose.orientation.norm()))
        abort_with_dump(next, t);

    if (report_out) *report_out = std::move(report);
    return next;
}

}  // namespace

RigidState step(const RigidState& state, const std::vector<TriMesh>& assembly,
                const WaterSurface& surface, const SimConfig& config, double t,
                BuoyancyReport* report_out) {
    return step_impl(state, assembly, surface, config, t, report_out, nullptr);
}

Trace run_drop(const std::vector<TriMesh>& assembly, const WaterSurface& surface,
               const SimConfig& config, const RigidState& initial_state) {
    const long n_steps = static_cast<long>(std::llround(config.duration / config.dt));
    if (n_steps < 2) throw std::invalid_argument("run_drop: duration/dt must give >= 2 steps");

    std::vector<VertexTracker> trackers;
    for (const auto& mesh : assembly)
        trackers.push_back(make_vertex_tracker(mesh, initial_state.pose, config.resort_interval));

    Trace trace;
    trace.rows.reserve(n_steps);
    RigidState state = initial_state;
    for (long i = 0; i < n_steps; ++i) {
        const double t = i * config.dt;
        BuoyancyReport report;
        auto t0 = std::chrono::steady_clock::now();
        state = step_impl(state, assembly, surface, config, t, &report, &trackers);
        auto t1 = std::chrono::steady_clock::now();

        double total_volume = 0.0;
        for (const auto& m : report.per_mesh) total_volume += m.volume;
        auto rpy = state.pose.orientation.to_euler_rpy();
        TraceRow row;
        row.t = t;
        row.cog = state.pose.position;
        row.volume = total_volume;
        row.fb = report.total_force.z;
        row.eta = surface.level_at(t);
        row.roll = rpy[0];
        row.pitch = rpy[1];
        row.yaw = rpy[2];
        row.step_ms = config.record_timing
                          ? std::chrono::duration<double, std::milli>(t1 - t0).count()
                          : 0.0;
        trace.rows.push_back(row);
    }
    return trace;
}

std::string trace_to_csv(const Trace& trace) {
    std::string out = "t,z_cog,x_cog,y_cog,volume,fb,eta,roll,pitch,yaw,step_ms\n";
    char buf[320];
    for (const TraceRow& r : trace.rows) {
        std::snprintf(buf, sizeof buf,
                      "%.6f,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.9g,%.4f\n", r.t,
                      r.cog.z, r.cog.x, r.cog.y, r.volume, r.fb, r.eta, r.roll, r.pitch,
                      r.yaw, r.step_ms);
        out += buf;
    }
    return out;
}

}  // namespace hullborne
