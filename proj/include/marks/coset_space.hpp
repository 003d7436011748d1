#pragma once

#include <cstdint>
#include <vector>

#include "marks/group.hpp"

namespace marks {

/// Right cosets Hg of a subgroup H in an enumerated group G.
/// Coset 0 is H itself and its representative is the identity.
class CosetSpace {
 public:
  CosetSpace(const Group& ambient, const Group& subgroup);

  const Group& ambient() const noexcept { return ambient_; }
  const Group& subgroup() const noexcept { return subgroup_; }
  std::size_t size() const noexcept { return reps_.size(); }

  const Permutation& rep(std::size_t coset) const { return ambient_.elements()[reps_[coset]]; }
  std::uint32_t coset_of_index(std::uint32_t element_index) const { return coset_of_[element_index]; }
  std::uint32_t coset_of(const Permutation& g) const;

  /// Coset (Hg).x = H(gx).
  std::uint32_t act(std::uint32_t coset, const Permutation& x) const;

  /// Image of x as a permutation of the cosets.
  Permutation image_of(const Permutation& x) const;

 private:
  Group ambient_;
  Group subgroup_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<std::uint32_t> reps_;
};

}  // namespace marks
