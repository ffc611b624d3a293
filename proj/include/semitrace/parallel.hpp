#ifndef SEMITRACE_PARALLEL_HPP_
#define SEMITRACE_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace semitrace {

  //! Evaluates fn(0), ..., fn(count - 1) on up to `jobs` threads and returns
  //! the results in index order. If any call throws, the exception of the
  //! lowest failing index is rethrown after all workers have stopped.
  template <typename Fn>
  auto parallel_map(std::size_t count, unsigned jobs, Fn&& fn)
      -> std::vector<std::invoke_result_t<Fn&, std::size_t>> {
    using Result = std::invoke_result_t<Fn&, std::size_t>;
    std::vector<std::optional<Result>> slots(count);
    std::vector<std::exception_ptr>    errors(count);
    std::atomic<std::size_t>           next{0};

    auto worker = [&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          slots[i].emplace(fn(i));
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    };

    unsigned const threads = static_cast<unsigned>(
        std::min<std::size_t>(std::max(jobs, 1u), std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(threads);
      for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
      }
    }

    std::vector<Result> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      if (errors[i]) {
        std::rethrow_exception(errors[i]);
      }
      out.push_back(std::move(*slots[i]));
    }
    return out;
  }

}  // namespace semitrace

#endif  // SEMITRACE_PARALLEL_HPP_
