#pragma once

#include <cstdint>

namespace hullborne::ops {

// Exact primitive-operation counters for the bench harness. Incremented at
// every point-plane distance test (hull path) and at every edge-plane
// intersection test and slice-area evaluation (sliced path). Thread-local so
// parallel submersion work does not race; the bench aggregates per thread.
struct Counters {
    std::uint64_t point_plane_tests = 0;
    std::uint64_t edge_plane_tests = 0;
    std::uint64_t slice_area_evals = 0;

    std::uint64_t hull_ops() const { return point_plane_tests; }
    std::uint64_t sliced_ops() const { return edge_plane_tests + slice_area_evals; }
};

Counters& counters();
void reset();

}  // namespace hullborne::ops
