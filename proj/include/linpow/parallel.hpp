#ifndef LINPOW_PARALLEL_HPP
#define LINPOW_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace linpow {

namespace detail {
inline std::atomic<unsigned>& jobs_setting() {
  static std::atomic<unsigned> jobs{1};
  return jobs;
}
}  // namespace detail

/// Worker count used by the parallel loops (Hochster sums, scans).
inline unsigned default_jobs() { return detail::jobs_setting().load(); }

/// 0 selects the hardware concurrency.
inline void set_default_jobs(unsigned jobs) {
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  detail::jobs_setting().store(jobs);
}

/// Calls body(i) for every i in [0, count). Items are handed out dynamically;
/// callers write results into per-index slots and reduce afterwards, so the
/// outcome does not depend on the schedule. The first exception is rethrown.
template <class Body>
void parallel_for(std::size_t count, Body&& body, unsigned jobs = default_jobs()) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned n = std::min<std::size_t>(jobs, count);
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace linpow

#endif  // LINPOW_PARALLEL_HPP
