#pragma once

#include <condition_variable>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace nsum {

// Partitions [0, total) into contiguous chunks, runs `work` on a pool of
// workers, and feeds the results to `merge` strictly in chunk order on the
// calling thread. Deterministic output regardless of scheduling; the first
// exception from any worker is rethrown after the pool drains.
template <class Result, class Work, class Merge>
void parallel_chunks(std::uint64_t total, std::uint64_t chunk_size, int workers,
                     Work work, Merge merge) {
  if (chunk_size == 0) chunk_size = 1;
  std::uint64_t chunks = total == 0 ? 0 : (total + chunk_size - 1) / chunk_size;
  if (workers < 1) workers = 1;

  if (workers == 1 || chunks <= 1) {
    for (std::uint64_t i = 0; i < chunks; ++i) {
      std::uint64_t lo = i * chunk_size;
      std::uint64_t hi = std::min(total, lo + chunk_size);
      merge(i, work(lo, hi));
    }
    return;
  }

  std::mutex mu;
  std::condition_variable cv;
  std::map<std::uint64_t, Result> ready;
  std::uint64_t next_to_claim = 0;
  std::exception_ptr error;

  auto runner = [&]() {
    while (true) {
      std::uint64_t mine;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (error || next_to_claim >= chunks) return;
        mine = next_to_claim++;
      }
      try {
        std::uint64_t lo = mine * chunk_size;
        std::uint64_t hi = std::min(total, lo + chunk_size);
        Result r = work(lo, hi);
        {
          std::lock_guard<std::mutex> lock(mu);
          ready.emplace(mine, std::move(r));
        }
        cv.notify_all();
      } catch (...) {
        {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
        }
        cv.notify_all();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  int n = static_cast<int>(std::min<std::uint64_t>(workers, chunks));
  pool.reserve(n);
  for (int i = 0; i < n; ++i) pool.emplace_back(runner);

  std::uint64_t merged = 0;
  {
    std::unique_lock<std::mutex> lock(mu);
    while (merged < chunks) {
      cv.wait(lock, [&] { return error || ready.contains(merged); });
      if (error) break;
      Result r = std::move(ready.at(merged));
      ready.erase(merged);
      lock.unlock();
      merge(merged, std::move(r));
      ++merged;
      lock.lock();
    }
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace nsum
