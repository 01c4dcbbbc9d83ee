#pragma once

#include <cstddef>
#include <functional>

namespace blip::parallel {

// Number of worker threads used for row-partitioned loops. Defaults to the
// hardware concurrency. Zero restores the default.
void set_worker_count(std::size_t n) noexcept;
std::size_t worker_count() noexcept;

// Split [0, rows) into contiguous chunks, at most one per worker, and run
// body(begin, end) on each. Chunks are disjoint; small workloads (fewer
// than min_rows_per_worker rows per worker) run inline. Returns the number
// of chunks used, chunk k covering chunk_bounds(rows, chunks, k).
std::size_t for_rows(std::size_t rows,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body,
                     std::size_t min_rows_per_worker = 16);

struct RowRange {
  std::size_t begin;
  std::size_t end;
};

RowRange chunk_bounds(std::size_t rows, std::size_t chunks, std::size_t k) noexcept;

// How many chunks for_rows would use for this many rows.
std::size_t chunk_count(std::size_t rows, std::size_t min_rows_per_worker = 16) noexcept;

}  // namespace blip::parallel
