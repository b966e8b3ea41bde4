#include "hullborne/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "hullborne/ops.hpp"

namespace hullborne {

namespace {

struct MethodSpec {
    const char* name;
    VolumeMethod method;
    ClipMode clip;
};

constexpr MethodSpec kMethods[] = {
    {"hull_vertices_only", VolumeMethod::hull, ClipMode::vertices_only},
    {"hull_clipped", VolumeMethod::hull, ClipMode::clipped},
    {"sliced", VolumeMethod::sliced, ClipMode::clipped},
};

double run_once(const TriMesh& mesh, const MethodSpec& spec, const WaterSurface& surface,
                double slice_dz, std::uint64_t& ops_out, double& ms_out) {
    ops::reset();
    auto t0 = std::chrono::steady_clock::now();
    SubmergedRegion region =
        spec.method == VolumeMethod::hull
            ? hull_submerged_volume(mesh, Pose{}, surface, 0.0, spec.clip)
            : sliced_submerged_volume(mesh, Pose{}, surface, 0.0, slice_dz);
    auto t1 = std::chrono::steady_clock::now();
    ms_out = std::chrono::duration<double, std::milli>(t1 - t0).count();
    const auto& c = ops::counters();
    ops_out = spec.method == VolumeMethod::hull ? c.hull_ops() : c.sliced_ops();
    return region.volume;
}

}  // namespace

const char* BenchReport::metric_note() {
    return "ops metric: hull = point-plane distance tests; "
           "sliced = edge-plane intersection tests + slice-area evaluations";
}

BenchReport run_bench(const TriMesh& mesh, const std::vector<double>& draft_fractions,
                      int repetitions) {
    if (repetitions < 3) throw std::invalid_argument("bench: repetitions must be >= 3");
    double z_min = std::numeric_limits<double>::infinity(), z_max = -z_min;
    for (const auto& v : mesh.vertices) {
        z_min = std::min(z_min, v.z);
        z_max = std::max(z_max, v.z);
    }
    const double extent = z_max - z_min;

    BenchReport report;
    double hull_clipped_ops_sum = 0.0, sliced_ops_sum = 0.0;
    int hull_cells = 0, sliced_cells = 0;
    for (const auto& spec : kMethods) {
        for (double f : draft_fractions) {
            WaterSurface surface = WaterSurface::still(z_min + f * extent);
            // Dense sliced reference: the finest oracle available for
            // arbitrary watertight meshes.
            std::uint64_t ref_ops;
            double ref_ms;
            MethodSpec ref{"ref", VolumeMethod::sliced, ClipMode::clipped};
            double ref_volume =
                run_once(mesh, ref, surface, extent / 1000.0, ref_ops, ref_ms);

            std::vector<double> times;
            std::uint64_t ops_count = 0;
            double volume = 0.0;
            for (int rep = 0; rep < repetitions; ++rep) {
                double ms;
                volume = run_once(mesh, spec, surface, 0.0, ops_count, ms);
                times.push_back(ms);
                double err = ref_volume > 0.0
                                 ? 100.0 * std::abs(volume - ref_volume) / ref_volume
                                 : 0.0;
                report.raw.push_back({spec.name, f, rep, ms, ops_count, volume, err});
            }
            std::sort(times.begin(), times.end());
            BenchAggregate agg;
            agg.method = spec.name;
            agg.draft_fraction = f;
            double sum = 0.0;
            for (double t : times) sum += t;
            agg.mean_ms = sum / times.size();
            agg.p95_ms = times[std::min(times.size() - 1,
                                        static_cast<std::size_t>(0.95 * times.size()))];
            agg.ops = ops_count;
            agg.volume = volume;
            agg.error_pct = ref_volume > 0.0
                                ? 100.0 * std::abs(volume - ref_volume) / ref_volume
                                : 0.0;
            report.aggregates.push_back(agg);
            if (agg.method == std::string("hull_clipped")) {
                hull_clipped_ops_sum += static_cast<double>(ops_count);
                ++hull_cells;
            } else if (agg.method == std::string("sliced")) {
                sliced_ops_sum += static_cast<double>(ops_count);
                ++sliced_cells;
            }
        }
    }
    if (hull_cells > 0 && sliced_cells > 0 && hull_clipped_ops_sum > 0.0)
        report.sliced_to_hull_op_ratio =
            (sliced_ops_sum / sliced_cells) / (hull_clipped_ops_sum / hull_cells);
    return report;
}

std::string bench_to_csv(const BenchReport& report) {
    std::string out = std::string("# ") + BenchReport::metric_note() + "\n";
    out += "kind,method,draft_fraction,rep,wall_ms,ops,volume,error_pct\n";
    char buf[256];
    for (const auto& c : report.raw) {
        std::snprintf(buf, sizeof buf, "raw,%s,%.3f,%d,%.4f,%llu,%.9g,%.4f\n",
                      c.method.c_str(), c.draft_fraction, c.rep, c.wall_ms,
                      static_cast<unsigned long long>(c.ops), c.volume, c.error_pct);
        out += buf;
    }
    for (const auto& a : report.aggregates) {
        std::snprintf(buf, sizeof buf, "agg,%s,%.3f,-,%.4f,%llu,%.9g,%.4f\n",
                      a.method.c_str(), a.draft_fraction, a.mean_ms,
                      static_cast<unsigned long long>(a.ops), a.volume, a.error_pct);
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "# sliced/hull op ratio: %.4f (paper reports 0.60)\n",
                  report.sliced_to_hull_op_ratio);
    out += buf;
    return out;
}

std::string bench_table(const BenchReport& report) {
    std::string out = std::string(BenchReport::metric_note()) + "\n";
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-20s %8s %10s %10s %12s %12s %10s\n", "method", "draft",
                  "mean_ms", "p95_ms", "ops", "volume", "err_pct");
    out += buf;
    for (const auto& a : report.aggregates) {
        std::snprintf(buf, sizeof buf, "%-20s %8.3f %10.4f %10.4f %12llu %12.6g %10.4f\n",
                      a.method.c_str(), a.draft_fraction, a.mean_ms, a.p95_ms,
                      static_cast<unsigned long long>(a.ops), a.volume, a.error_pct);
        out += buf;
    }
    std::snprintf(buf, sizeof buf, "sliced/hull op ratio: %.4f (paper reports 0.60)\n",
                  report.sliced_to_hull_op_ratio);
    out += buf;
    return out;
}

}  // namespace hullborne
