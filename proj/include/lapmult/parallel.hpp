// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace lapmult::parallel {

/// Global switch for the OpenMP kernels. Counting results are bit-identical
/// either way; the serial path is kept as the reference for tests and the
/// benchmark. Defaults to enabled when built with OpenMP.
bool enabled();
void set_enabled(bool on);

int max_threads();

}  // namespace lapmult::parallel
