// SPDX-License-Identifier: Apache-2.0
#include "lapmult/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lapmult::parallel {

namespace {
#ifdef _OPENMP
std::atomic<bool> g_enabled{true};
#else
std::atomic<bool> g_enabled{false};
#endif
}  // namespace

bool enabled() {
#ifdef _OPENMP
  return g_enabled.load(std::memory_order_relaxed);
#else
  return false;
#endif
}

void set_enabled(bool on) { g_enabled.store(on, std::memory_order_relaxed); }

int max_threads() {
#ifdef _OPENMP
  return enabled() ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

}  // namespace lapmult::parallel
