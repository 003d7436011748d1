#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "marks/group_algorithms.hpp"

namespace marks {

/// X(K, t): the conjugates of K containing t, grouped into C_S(t)-orbits.
struct IncidenceProbe {
  Group K;
  Permutation t;
  std::vector<Group> members;
  std::vector<std::size_t> orbit_sizes;  // consecutive runs of `members`

  std::size_t size() const { return members.size(); }
};

IncidenceProbe x_set(const Group& S, const Group& K, const Permutation& t,
                     const std::optional<Group>& normalizer_of_K = std::nullopt);

/// |K ∩ [t]_S|, the cost estimate used when choosing a probe.
std::uint64_t class_meet_size(const Group& S, const Group& K, const Permutation& t);

/// Element of V outside A of smallest p-power order; ties go to the first in enumeration order.
std::optional<Permutation> probe_element(const Group& V, const Group& A, std::uint64_t p);

/// β_{S/K}(V) = |N_S(K):K| · #{K' in X(K,t) : V ≤ K'} for some t in V.
std::uint64_t explicit_mark(const Group& S, const Group& K, const Group& V, const Permutation& t,
                            const std::optional<Group>& normalizer_of_K = std::nullopt,
                            std::size_t* probe_size = nullptr);

}  // namespace marks
