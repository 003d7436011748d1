#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "marks/group_algorithms.hpp"

namespace marks {

/// A normal of prime index p in S, with a fixed t in S outside A.
struct ExtensionContext {
  Group S;
  Group A;
  std::uint64_t p = 0;
  Permutation t;
};

/// Validates A normal of prime index in S and picks t as the first generator of S outside A.
ExtensionContext make_extension_context(const Group& S, const Group& A);

struct BlueClassification {
  std::vector<Group> b1;
  std::vector<Group> b2_fused;
  std::size_t b2_raw_count = 0;

  /// Blue S-classes sorted by order, ties kept in A-class order.
  std::vector<Group> blue;
  std::vector<bool> in_b1;
  std::vector<Group> normalizers;                 // N_S of each blue representative
  std::vector<std::vector<std::size_t>> fused;    // A-class indices per blue class, representative first
  std::vector<std::size_t> a_to_blue;             // A-class index -> blue index
};

BlueClassification classify_blue(std::span<const Group> a_classes, const ExtensionContext& ctx);

struct RedClassInfo {
  Group K;
  Group H;                 // K ∩ A
  std::size_t h_blue = 0;  // blue index of H
  Permutation t_rep;       // element of K outside A, of p-power order
};

/// Elements t generating the red classes above H, one per N_S(H)-class of order-p subgroups
/// of N_S(H)/H outside N_A(H)/H.
std::vector<Permutation> transversal_T_H(const ExtensionContext& ctx, const Group& H);
std::vector<Permutation> transversal_T_H(const ExtensionContext& ctx, const Group& H, const Group& normalizer_of_H);

/// Red classes sorted by order, ties in order of discovery.
std::vector<RedClassInfo> red_subgroups(const BlueClassification& blue, const ExtensionContext& ctx);
std::vector<RedClassInfo> red_subgroups(std::span<const Group> a_classes, const ExtensionContext& ctx);

struct ExtensionClasses {
  BlueClassification blue;
  std::vector<RedClassInfo> red;

  std::size_t size() const { return blue.blue.size() + red.size(); }
  /// Blue classes first, then red.
  std::vector<Group> representatives() const;
};

ExtensionClasses extend_subgroup_classes(std::span<const Group> a_classes, const ExtensionContext& ctx);
std::vector<Group> subgroups_by_cyclic_extension(std::span<const Group> a_classes, const ExtensionContext& ctx);

/// Iterates the cyclic extension along a composition series from the trivial group.
std::vector<Group> all_subgroup_classes_solvable(const Group& G);

}  // namespace marks
