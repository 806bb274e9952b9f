#pragma once

#include <functional>

namespace tcue {

// Runs fn(i) for i in [0, count) on up to `threads` workers. Each index owns
// its output slot, so results are identical for any thread count; reductions
// over the gathered results must run sequentially afterwards.
void parallel_for(long long count, int threads, const std::function<void(long long)>& fn);

int default_thread_count();

}  // namespace tcue
