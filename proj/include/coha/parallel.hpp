#pragma once

#include <cstddef>
#include <functional>

namespace coha {

/// Worker count for parallel reductions, from the COHA_THREADS environment
/// variable (default 1, clamped to hardware concurrency).
int thread_count();

/// Runs fn(i) for i in [0, count) on thread_count() workers in index chunks.
/// The caller owns determinism: results must be stored by index.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

} // namespace coha
