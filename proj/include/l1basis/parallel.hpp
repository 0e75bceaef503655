#ifndef L1BASIS_PARALLEL_HPP
#define L1BASIS_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace l1basis {

/// Runs fn(0), ..., fn(count - 1) across contiguous index ranges and returns
/// the results in index order, so any later reduction is deterministic.
template <typename Result, typename Fn>
std::vector<Result> run_trials(std::size_t count, Fn fn, unsigned workers = 0) {
  std::vector<Result> results(count);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t i = count * w / workers; i < count * (w + 1) / workers; ++i) results[i] = fn(i);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace l1basis

#endif  // L1BASIS_PARALLEL_HPP
