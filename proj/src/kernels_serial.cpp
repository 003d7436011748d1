#include "marks/kernels.hpp"

namespace marks::kernels {

std::vector<std::uint8_t> filter_elements_serial(std::span<const Permutation> elements, const ElementPredicate& pred) {
  std::vector<std::uint8_t> flags(elements.size(), 0);
  for (std::size_t i = 0; i < elements.size(); ++i) flags[i] = pred(elements[i]) ? 1 : 0;
  return flags;
}

std::uint64_t count_elements_serial(std::span<const Permutation> elements, const ElementPredicate& pred) {
  std::uint64_t count = 0;
  for (const auto& g : elements)
    if (pred(g)) ++count;
  return count;
}

void for_each_index_serial(std::size_t n, const std::function<void(std::size_t)>& body) {
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace marks::kernels
