#pragma once

#include <cstddef>
#include <functional>
#include <thread>

namespace dbci {

inline unsigned effective_threads(int requested) {
  if (requested > 0) return static_cast<unsigned>(requested);
  const unsigned hw = std::thread::hardware_concurrency();
  return hw != 0 ? hw : 1u;
}

/// Runs fn(i) for every i in [0, count). Each invocation must write only its
/// own output slot; with that contract the result is identical for any thread
/// count. Worker exceptions are rethrown on the calling thread.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace dbci
