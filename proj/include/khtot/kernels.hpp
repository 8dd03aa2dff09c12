#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "khtot/f2linalg.hpp"

namespace khtot {

// Runs fn(i) for i in [0, n). Parallel uses OpenMP with dynamic scheduling;
// callers write only to slot i so results do not depend on the schedule.
void for_each_index(std::size_t n, Execution exec, const std::function<void(std::size_t)>& fn);

std::vector<int> block_ranks(const std::vector<DenseBlock>& blocks, Execution exec);

int worker_threads();

}  // namespace khtot
