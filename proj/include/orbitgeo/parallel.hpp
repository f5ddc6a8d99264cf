#pragma once

#include <functional>

namespace orbitgeo {

// Worker cap: ORBITGEO_THREADS when set and valid, else the hardware count.
int thread_cap();

// Run body(0..count-1) across up to thread_cap() threads. Work items must be
// independent; outputs should go to preindexed slots so results do not depend
// on the thread count. The first exception thrown by any item is rethrown.
void parallel_for(int count, const std::function<void(int)>& body);

}  // namespace orbitgeo
