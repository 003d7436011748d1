#include "marks/coset_space.hpp"

#include "marks/error.hpp"

namespace marks {

CosetSpace::CosetSpace(const Group& ambient, const Group& subgroup) : ambient_(ambient), subgroup_(subgroup) {
  if (!subgroup.is_subgroup_of(ambient)) throw PreconditionError("coset space: subgroup is not contained in the group");
  const ElementTable& table = ambient.elements();
  const ElementTable& sub = subgroup.elements();
  constexpr std::uint32_t unseen = ~std::uint32_t{0};
  coset_of_.assign(table.size(), unseen);
  for (std::uint32_t g = 0; g < table.size(); ++g) {
    if (coset_of_[g] != unseen) continue;
    auto id = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(g);
    for (const auto& h : sub.elements()) coset_of_[table.at(h * table[g])] = id;
  }
}

std::uint32_t CosetSpace::coset_of(const Permutation& g) const { return coset_of_[ambient_.elements().at(g)]; }

std::uint32_t CosetSpace::act(std::uint32_t coset, const Permutation& x) const {
  return coset_of(rep(coset) * x);
}

Permutation CosetSpace::image_of(const Permutation& x) const {
  std::vector<Point> images(size());
  for (std::uint32_t c = 0; c < size(); ++c) images[c] = act(c, x);
  return Permutation(std::move(images));
}

}  // namespace marks
