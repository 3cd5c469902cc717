#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace mom {

/// --threads value if given, else MOM_THREADS, else hardware concurrency (>= 1).
unsigned resolve_thread_count(std::optional<unsigned> requested = std::nullopt);

/// Runs body(0..count-1) on up to `threads` workers. If any call throws,
/// the exception from the lowest index is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body);

}  // namespace mom
