#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace roc {

// 0 means "use the hardware concurrency".
inline unsigned resolveThreads(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, count) into chunks of a fixed size and calls
// body(chunk, begin, end, worker) for each; worker is in [0, workers) and
// identifies the calling thread so callers can keep per-thread scratch. The chunking never depends on the
// thread count, so callers that reduce per-chunk results in chunk order
// get identical output for any number of threads.
template <class Body>
void forEachChunk(std::size_t count, std::size_t chunkSize, unsigned threads, Body&& body) {
  if (count == 0) return;
  chunkSize = std::max<std::size_t>(chunkSize, 1);
  const std::size_t chunks = (count + chunkSize - 1) / chunkSize;
  threads = std::min<std::size_t>(resolveThreads(threads), chunks);

  auto run = [&](std::size_t c, unsigned worker) {
    std::size_t begin = c * chunkSize;
    body(c, begin, std::min(count, begin + chunkSize), worker);
  };
  if (threads <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) run(c, 0);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex errorMutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t c; (c = next.fetch_add(1)) < chunks;) {
        try {
          run(c, t);
        } catch (...) {
          std::lock_guard lock(errorMutex);
          if (!error) error = std::current_exception();
          next = chunks;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Number of distinct worker ids forEachChunk may pass.
inline unsigned workerCount(std::size_t count, std::size_t chunkSize, unsigned threads) {
  chunkSize = std::max<std::size_t>(chunkSize, 1);
  std::size_t chunks = (count + chunkSize - 1) / chunkSize;
  return static_cast<unsigned>(std::max<std::size_t>(1, std::min<std::size_t>(resolveThreads(threads), chunks)));
}

inline std::size_t chunkCount(std::size_t count, std::size_t chunkSize) {
  chunkSize = std::max<std::size_t>(chunkSize, 1);
  return (count + chunkSize - 1) / chunkSize;
}

}  // namespace roc
