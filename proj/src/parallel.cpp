#include "blip/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace blip::parallel {

namespace {

std::atomic<std::size_t> g_workers{0};

std::size_t default_workers() noexcept {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

void set_worker_count(std::size_t n) noexcept { g_workers.store(n); }

std::size_t worker_count() noexcept {
  const std::size_t n = g_workers.load();
  return n == 0 ? default_workers() : n;
}

std::size_t chunk_count(std::size_t rows, std::size_t min_rows_per_worker) noexcept {
  if (rows == 0) return 0;
  const std::size_t per = std::max<std::size_t>(1, min_rows_per_worker);
  const std::size_t by_size = std::max<std::size_t>(1, rows / per);
  return std::min(worker_count(), by_size);
}

RowRange chunk_bounds(std::size_t rows, std::size_t chunks, std::size_t k) noexcept {
  const std::size_t base = rows / chunks;
  const std::size_t extra = rows % chunks;
  const std::size_t begin = k * base + std::min(k, extra);
  return {begin, begin + base + (k < extra ? 1 : 0)};
}

std::size_t for_rows(std::size_t rows,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
                     std::size_t min_rows_per_worker) {
  const std::size_t chunks = chunk_count(rows, min_rows_per_worker);
  if (chunks <= 1) {
    if (rows > 0) body(0, 0, rows);
    return chunks;
  }

  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  threads.reserve(chunks - 1);
  auto run = [&](std::size_t k) {
    try {
      const RowRange r = chunk_bounds(rows, chunks, k);
      body(k, r.begin, r.end);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  };
  for (std::size_t k = 1; k < chunks; ++k) threads.emplace_back(run, k);
  run(0);
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return chunks;
}

}  // namespace blip::parallel
