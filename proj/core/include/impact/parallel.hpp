// Copyright The impactsynth Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace impact {

// Runs fn(i) for i in [0, n). Each index must write only to its own output
// slot; any cross-index reduction belongs in the caller, in index order, so
// results do not depend on the thread count.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace impact
