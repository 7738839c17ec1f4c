#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace mvz {

inline unsigned default_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Runs body(shard) for shard in [0, shards) on up to `threads` workers.
/// Shards are claimed dynamically; callers write results into per-shard
/// slots so the merge order never depends on scheduling. The exception of
/// the lowest failing shard is rethrown.
template <class Body>
void for_each_shard(std::size_t shards, unsigned threads, Body&& body) {
  std::vector<std::exception_ptr> errors(shards);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t s = next.fetch_add(1);
      if (s >= shards) return;
      try {
        body(s);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    }
  };
  unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(shards, 1))));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace mvz
