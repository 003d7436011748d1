#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "marks/coset_space.hpp"
#include "marks/group.hpp"
#include "marks/kernels.hpp"

namespace marks {

struct ElementClass {
  Permutation representative;
  std::uint64_t size = 0;
};

/// Classes ordered by element order, then by first appearance in the element enumeration.
std::vector<ElementClass> element_conjugacy_classes(const Group& g);

/// element order -> number of elements of that order.
std::map<std::uint64_t, std::uint64_t> element_order_profile(const Group& g);

bool is_normal(const Group& ambient, const Group& subgroup);
bool is_abelian(const Group& g);

Group centralizer(const Group& g, const Permutation& x, Execution exec = Execution::parallel);
Group normalizer(const Group& g, const Group& h, Execution exec = Execution::parallel);

/// Subgroups up to this order are keyed by their full element set.
inline constexpr std::uint64_t exact_key_limit = 5000;

/// Sorted element indices of h inside the element table of `ambient`.
using SubgroupKey = std::vector<std::uint32_t>;
SubgroupKey subgroup_key(const Group& ambient, const Group& h);

struct SubgroupKeyHash {
  std::size_t operator()(const SubgroupKey& key) const noexcept;
};

/// Conjugacy invariant: multiset of (element order, fixed points) over the elements.
std::map<std::pair<std::uint64_t, std::size_t>, std::uint64_t> fixed_point_profile(const Group& h);

/// g with h^g = k, or nullopt. Hints are tried first as candidate conjugators.
std::optional<Permutation> are_conjugate_subgroups(const Group& g, const Group& h, const Group& k,
                                                   std::span<const Permutation> hints = {});

/// Action of g on the right cosets of h.
struct CosetAction {
  CosetSpace cosets;
  Group image;
  Permutation image_of(const Permutation& x) const { return cosets.image_of(x); }
};

inline constexpr std::uint64_t default_coset_degree_limit = 10'000;

CosetAction coset_action(const Group& g, const Group& h, std::uint64_t degree_limit = default_coset_degree_limit);

/// N/H as the regular action on cosets; lift maps an element of W to a coset representative in N.
struct Quotient {
  CosetSpace cosets;
  Group image;
  Permutation lift(const Permutation& w) const { return cosets.rep(w[0]); }
  Permutation project(const Permutation& n) const { return cosets.image_of(n); }
};

Quotient quotient_group(const Group& n, const Group& h, std::uint64_t degree_limit = default_coset_degree_limit);

Group normal_closure(const Group& ambient, std::span<const Permutation> seeds);
Group derived_subgroup(const Group& g);

inline constexpr std::size_t derived_series_cap = 64;

/// G = D0 > D1 > ...; stops at the first repeated term or after derived_series_cap steps.
std::vector<Group> derived_series(const Group& g);
bool is_solvable(const Group& g);

/// 1 = terms[0] < terms[1] < ... < terms.back() = G with terms[i] normal of prime index indices[i] in terms[i+1].
struct SeriesChain {
  std::vector<Group> terms;
  std::vector<std::uint64_t> indices;
};

/// Throws NotSolvableError for non-solvable input.
SeriesChain composition_series(const Group& g);

bool is_prime(std::uint64_t n);
bool is_prime_power_of(std::uint64_t n, std::uint64_t p);

}  // namespace marks
