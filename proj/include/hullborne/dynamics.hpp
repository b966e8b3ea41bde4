#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hullborne/buoyancy.hpp"
#include "hullborne/mesh.hpp"
#include "hullborne/submersion.hpp"
#include "hullborne/vec.hpp"
#include "hullborne/water.hpp"

namespace hullborne {

struct RigidState {
    Pose pose{};             // position of the CoG + orientation
    Vec3 linear_velocity{};  // m/s
    Vec3 angular_velocity{};  // rad/s, world frame
    double mass = 1.0;        // kg
    Mat3 inertia{};           // body-frame tensor, kg m^2
};

struct SimConfig {
    double dt = 0.01;       // s
    double duration = 5.0;  // s
    VolumeMethod method = VolumeMethod::hull;
    ClipMode clip_mode = ClipMode::clipped;
    CentroidMode centroid_mode = CentroidMode::volumetric;
    int resort_interval = 10;
    double linear_damping = 0.0;   // N s/m
    double angular_damping = 0.0;  // N m s/rad
    double slice_dz = 0.0;         // 0 = auto
    FluidParams fluid{};
    bool record_timing = true;  // step_ms column; off for golden traces
};

// A non-finite state was produced; what() carries a diagnostic state dump.
struct NumericalAbort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TraceRow {
    double t = 0.0;
    Vec3 cog{};
    double volume = 0.0;  // total submerged, m^3
    double fb = 0.0;      // buoyant force magnitude, N
    double eta = 0.0;     // instantaneous water level, m
    double roll = 0.0, pitch = 0.0, yaw = 0.0;  // rad
    double step_ms = 0.0;
};

struct Trace {
    std::vector<TraceRow> rows;
};

// One semi-implicit Euler step: buoyancy at the reported application point
// (torque r x F about the CoG), gravity at the CoG, optional damping;
// velocity first, then position; quaternion advanced by the exponential map
// of the angular velocity and renormalized.
RigidState step(const RigidState& state, const std::vector<TriMesh>& assembly,
                const WaterSurface& surface, const SimConfig& config, double t,
                BuoyancyReport* report_out = nullptr);

// Drop experiment: integrates duration/dt steps and records the trace.
Trace run_drop(const std::vector<TriMesh>& assembly, const WaterSurface& surface,
               const SimConfig& config, const RigidState& initial_state);

// CSV with the fixed header t,z_cog,x_cog,y_cog,volume,fb,eta,roll,pitch,yaw,step_ms.
std::string trace_to_csv(const Trace& trace);

}  // namespace hullborne
