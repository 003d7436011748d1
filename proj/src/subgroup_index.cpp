#include "marks/subgroup_index.hpp"

#include "marks/error.hpp"

namespace marks {

SubgroupClassIndex::SubgroupClassIndex(Group ambient) : ambient_(std::move(ambient)) {}

std::optional<SubgroupClassIndex::Match> SubgroupClassIndex::identify(const Group& h) const {
  if (h.order() <= exact_key_limit) {
    auto it = by_key_.find(subgroup_key(ambient_, h));
    if (it == by_key_.end()) return std::nullopt;
    auto [cls, member] = it->second;
    return Match{cls, ambient_.elements()[classes_[cls].conjugators[member]]};
  }
  auto it = large_by_order_.find(h.order());
  if (it == large_by_order_.end()) return std::nullopt;
  auto profile = fixed_point_profile(h);
  for (std::size_t cls : it->second) {
    if (classes_[cls].profile != profile) continue;
    if (auto g = are_conjugate_subgroups(ambient_, classes_[cls].rep, h)) return Match{cls, *g};
  }
  return std::nullopt;
}

std::pair<std::size_t, bool> SubgroupClassIndex::insert(const Group& h) {
  if (!h.is_subgroup_of(ambient_)) throw PreconditionError("subgroup index: subgroup is not in the ambient group");
  if (auto m = identify(h)) return {m->class_id, false};
  const std::size_t id = classes_.size();
  ClassRecord record;
  record.rep = h;
  if (h.order() <= exact_key_limit) {
    record.keyed = true;
    const ElementTable& table = ambient_.elements();
    const auto& maps = ambient_.conjugation_maps();
    const auto& gens = ambient_.generators();
    SubgroupKey start = subgroup_key(ambient_, h);
    by_key_.emplace(start, std::pair{static_cast<std::uint32_t>(id), 0u});
    record.members.push_back(std::move(start));
    record.conjugators.push_back(table.at(Permutation(ambient_.degree())));
    for (std::size_t head = 0; head < record.members.size(); ++head) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const SubgroupKey& key = record.members[head];
        SubgroupKey next(key.size());
        for (std::size_t i = 0; i < key.size(); ++i) next[i] = maps[s][key[i]];
        std::sort(next.begin(), next.end());
        auto pos = static_cast<std::uint32_t>(record.members.size());
        if (!by_key_.emplace(next, std::pair{static_cast<std::uint32_t>(id), pos}).second) continue;
        std::uint32_t conj = table.at(table[record.conjugators[head]] * gens[s]);
        record.members.push_back(std::move(next));
        record.conjugators.push_back(conj);
      }
    }
    record.length = record.members.size();
  } else {
    record.profile = fixed_point_profile(h);
    Group n = marks::normalizer(ambient_, h);
    record.length = ambient_.order() / n.order();
    record.normalizer = std::move(n);
    large_by_order_[h.order()].push_back(id);
  }
  classes_.push_back(std::move(record));
  return {id, true};
}

const Group& SubgroupClassIndex::normalizer(std::size_t id) const {
  const ClassRecord& record = classes_[id];
  if (!record.normalizer) record.normalizer = marks::normalizer(ambient_, record.rep);
  return *record.normalizer;
}

Permutation SubgroupClassIndex::member_conjugator(std::size_t id, std::size_t member) const {
  return ambient_.elements()[classes_[id].conjugators[member]];
}

Group SubgroupClassIndex::member_group(std::size_t id, std::size_t member) const {
  return classes_[id].rep.conjugate_by(member_conjugator(id, member));
}

}  // namespace marks
