#include "khtot/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace khtot {

void for_each_index(std::size_t n, Execution exec, const std::function<void(std::size_t)>& fn) {
  if (exec == Execution::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long i = 0; i < count; ++i) fn(static_cast<std::size_t>(i));
}

std::vector<int> block_ranks(const std::vector<DenseBlock>& blocks, Execution exec) {
  std::vector<int> ranks(blocks.size(), 0);
  for_each_index(blocks.size(), exec, [&](std::size_t i) { ranks[i] = f2_rank(blocks[i]); });
  return ranks;
}

int worker_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace khtot
