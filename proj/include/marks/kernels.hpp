#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "marks/permutation.hpp"

namespace marks {

/// Selects the serial reference loops or their OpenMP counterparts.
/// Both produce identical results; the serial path is kept as the test reference.
enum class Execution { serial, parallel };

using ElementPredicate = std::function<bool(const Permutation&)>;

namespace kernels {

/// flags[i] = pred(elements[i]).
std::vector<std::uint8_t> filter_elements_serial(std::span<const Permutation> elements, const ElementPredicate& pred);
std::vector<std::uint8_t> filter_elements_parallel(std::span<const Permutation> elements, const ElementPredicate& pred);

std::uint64_t count_elements_serial(std::span<const Permutation> elements, const ElementPredicate& pred);
std::uint64_t count_elements_parallel(std::span<const Permutation> elements, const ElementPredicate& pred);

/// Calls body(i) for i in [0, n); every index is independent and writes only its own slot.
void for_each_index_serial(std::size_t n, const std::function<void(std::size_t)>& body);
void for_each_index_parallel(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace kernels

inline std::vector<std::uint8_t> filter_elements(std::span<const Permutation> elements, const ElementPredicate& pred,
                                                 Execution exec = Execution::parallel) {
  return exec == Execution::serial ? kernels::filter_elements_serial(elements, pred)
                                   : kernels::filter_elements_parallel(elements, pred);
}

inline std::uint64_t count_elements(std::span<const Permutation> elements, const ElementPredicate& pred,
                                    Execution exec = Execution::parallel) {
  return exec == Execution::serial ? kernels::count_elements_serial(elements, pred)
                                   : kernels::count_elements_parallel(elements, pred);
}

inline void for_each_index(std::size_t n, const std::function<void(std::size_t)>& body,
                           Execution exec = Execution::parallel) {
  if (exec == Execution::serial)
    kernels::for_each_index_serial(n, body);
  else
    kernels::for_each_index_parallel(n, body);
}

}  // namespace marks
