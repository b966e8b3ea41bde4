#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hullborne/mesh.hpp"
#include "hullborne/submersion.hpp"

namespace hullborne {

// One timed run of one method at one draft.
struct BenchCell {
    std::string method;  // hull_vertices_only | hull_clipped | sliced
    double draft_fraction = 0.0;
    int rep = 0;
    double wall_ms = 0.0;
    std::uint64_t ops = 0;  // exact primitive-op count, not sampled
    double volume = 0.0;
    double error_pct = 0.0;  // vs the dense sliced reference
};

struct BenchAggregate {
    std::string method;
    double draft_fraction = 0.0;
    double mean_ms = 0.0;
    double p95_ms = 0.0;
    std::uint64_t ops = 0;
    double volume = 0.0;
    double error_pct = 0.0;
};

struct BenchReport {
    std::vector<BenchCell> raw;
    std::vector<BenchAggregate> aggregates;
    // Mean sliced primitive-op count over mean clipped-hull count.
    double sliced_to_hull_op_ratio = 0.0;
    // Printed in the CSV header: how "iteration count" is operationalized.
    static const char* metric_note();
};

// Runs every method at every draft fraction (of the mesh z-extent),
// repetitions times each. Deterministic cell order.
BenchReport run_bench(const TriMesh& mesh, const std::vector<double>& draft_fractions,
                      int repetitions);

std::string bench_to_csv(const BenchReport& report);
std::string bench_table(const BenchReport& report);

}  // namespace hullborne
