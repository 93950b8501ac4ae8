#ifndef PARETO_LENS_PARALLEL_HPP
#define PARETO_LENS_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace pareto_lens {

/// Worker cap: PARETO_LENS_THREADS when set to a positive integer, else the hardware count.
std::size_t thread_budget();

/**
 * Runs body(0) ... body(count-1) on up to thread_budget() threads. The first
 * exception thrown by any task is rethrown after all workers have joined.
 */
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace pareto_lens

#endif  // PARETO_LENS_PARALLEL_HPP
