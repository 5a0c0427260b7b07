#ifndef SEMIINV_PARALLEL_HPP
#define SEMIINV_PARALLEL_HPP

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace semiinv {

// Worker count for parallel element sums, from SEMIINV_WORKERS (default:
// hardware concurrency, at least 1).
inline int worker_count() {
  if (const char* env = std::getenv("SEMIINV_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? static_cast<int>(hc) : 1;
}

// Static partition of [0, count) over the workers.  Results must be written
// to per-index slots; exact reductions stay deterministic because the field
// operations are associative and commutative.
template <typename Fn>
void parallel_for(long count, Fn&& fn, int workers = 0) {
  if (workers <= 0) workers = worker_count();
  if (workers == 1 || count <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  workers = static_cast<int>(std::min<long>(workers, count));
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  long chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    long lo = w * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi] {
      try {
        for (long i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

// Chunked variant for partial-sum reductions: fn(chunk, lo, hi) runs on a
// contiguous slice; the number of chunks is returned so the caller can size
// its accumulator array before folding the partials in chunk order.
template <typename Fn>
int parallel_chunks(long count, Fn&& fn, int workers = 0) {
  if (workers <= 0) workers = worker_count();
  workers = static_cast<int>(std::max<long>(1, std::min<long>(workers, count)));
  if (workers == 1) {
    fn(0, 0L, count);
    return 1;
  }
  long chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  int chunks = 0;
  for (int w = 0; w < workers; ++w) {
    long lo = w * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    ++chunks;
    pool.emplace_back([&, w, lo, hi] {
      try {
        fn(w, lo, hi);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return chunks;
}

}  // namespace semiinv

#endif
