#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "marks/table_of_marks.hpp"

namespace marks {

/// Order cap for brute-force enumeration: MARKS_MAX_ORDER if set, else 2000.
std::uint64_t oracle_order_cap();

struct LatticeDump {
  Group group;
  std::vector<Group> subgroups;                  // every subgroup once, in discovery order
  std::vector<std::vector<std::size_t>> classes;  // member indices; first member is the representative

  std::vector<Group> representatives() const;
};

/// Layered join closure from the cyclic subgroups over a multiplication table.
/// Classes are sorted by subgroup order, ties by discovery.
LatticeDump all_subgroups_brute(const Group& G, std::uint64_t cap = oracle_order_cap());

/// Class representatives by join closure at class level: <H, x> for each class H and each x up to
/// the moves that keep the class of <H, x> (left multiplication by H, coprime powers, N(H)-conjugation).
std::vector<Group> subgroup_classes_brute(const Group& G, std::uint64_t cap = oracle_order_cap());

/// Pattern with every mark counted by fixed cosets.
SubgroupPattern pattern_from_classes(const Group& G, std::vector<Group> classes);

SubgroupPattern table_of_marks_brute(const Group& G, std::uint64_t cap = oracle_order_cap());

struct MatchReport {
  bool match = false;
  std::vector<std::size_t> perm;  // class i of the first pattern corresponds to class perm[i] of the second
  std::string reason;
};

/// Equality up to reordering classes. With a common ambient group the matched classes must be conjugate;
/// otherwise the search runs on the matrices alone.
MatchReport compare_patterns(const SubgroupPattern& a, const SubgroupPattern& b);
MatchReport compare_mark_tables(const MarkMatrix& a, const MarkMatrix& b);

}  // namespace marks
