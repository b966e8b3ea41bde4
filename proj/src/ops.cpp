#include "hullborne/ops.hpp"

namespace hullborne::ops {

Counters& counters() {
    thread_local Counters c;
    return c;
}

void reset() { counters() = Counters{}; }

}  // namespace hullborne::ops
