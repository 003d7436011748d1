#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "marks/group_algorithms.hpp"

namespace marks {

/// Registry of conjugacy classes of subgroups of a fixed ambient group.
/// Small subgroups are identified by hashing their element sets over the whole class;
/// larger ones fall back to invariants plus an explicit conjugacy test.
class SubgroupClassIndex {
 public:
  explicit SubgroupClassIndex(Group ambient);

  struct Match {
    std::size_t class_id;
    Permutation conjugator;  // representative^conjugator = queried subgroup
  };

  const Group& ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return classes_.size(); }

  std::optional<Match> identify(const Group& h) const;

  /// Registers the class of h unless already known; returns (class id, newly added).
  std::pair<std::size_t, bool> insert(const Group& h);

  const Group& representative(std::size_t id) const { return classes_[id].rep; }
  std::uint64_t class_length(std::size_t id) const { return classes_[id].length; }
  const Group& normalizer(std::size_t id) const;

  /// Element-set keys of every member of a small class, in discovery order.
  const std::vector<SubgroupKey>& members(std::size_t id) const { return classes_[id].members; }
  bool keyed(std::size_t id) const { return classes_[id].keyed; }

  /// Member as a group together with a conjugator from the representative.
  Group member_group(std::size_t id, std::size_t member) const;
  Permutation member_conjugator(std::size_t id, std::size_t member) const;

 private:
  struct ClassRecord {
    Group rep;
    std::uint64_t length = 0;
    bool keyed = false;
    std::vector<SubgroupKey> members;
    std::vector<std::uint32_t> conjugators;  // element indices, parallel to members
    std::map<std::pair<std::uint64_t, std::size_t>, std::uint64_t> profile;
    mutable std::optional<Group> normalizer;
  };

  Group ambient_;
  std::vector<ClassRecord> classes_;
  std::unordered_map<SubgroupKey, std::pair<std::uint32_t, std::uint32_t>, SubgroupKeyHash> by_key_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> large_by_order_;
};

}  // namespace marks
