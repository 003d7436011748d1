#include <omp.h>

#include <exception>
#include <mutex>

#include "marks/kernels.hpp"

namespace marks::kernels {

namespace {

// Exceptions must not escape an OpenMP region; the first one is rethrown after the loop.
class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace

std::vector<std::uint8_t> filter_elements_parallel(std::span<const Permutation> elements, const ElementPredicate& pred) {
  std::vector<std::uint8_t> flags(elements.size(), 0);
  const auto n = static_cast<std::int64_t>(elements.size());
  ExceptionSlot slot;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i)
    slot.run([&] { flags[static_cast<std::size_t>(i)] = pred(elements[static_cast<std::size_t>(i)]) ? 1 : 0; });
  slot.rethrow();
  return flags;
}

std::uint64_t count_elements_parallel(std::span<const Permutation> elements, const ElementPredicate& pred) {
  std::uint64_t count = 0;
  const auto n = static_cast<std::int64_t>(elements.size());
  ExceptionSlot slot;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (std::int64_t i = 0; i < n; ++i)
    slot.run([&] {
      if (pred(elements[static_cast<std::size_t>(i)])) ++count;
    });
  slot.rethrow();
  return count;
}

void for_each_index_parallel(std::size_t n, const std::function<void(std::size_t)>& body) {
  const auto m = static_cast<std::int64_t>(n);
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < m; ++i) slot.run([&] { body(static_cast<std::size_t>(i)); });
  slot.rethrow();
}

}  // namespace marks::kernels
