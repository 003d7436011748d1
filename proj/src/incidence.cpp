#include "marks/incidence.hpp"

#include <algorithm>
#include <unordered_set>

#include "marks/error.hpp"

namespace marks {

namespace {

// Conjugates of K under a group C, deduplicated by element set where affordable.
std::vector<Group> conjugation_orbit(const Group& S, const Group& K, const Group& C) {
  std::vector<Group> orbit{K};
  const bool keyed = K.order() <= exact_key_limit;
  std::unordered_set<SubgroupKey, SubgroupKeyHash> seen;
  if (keyed) seen.insert(subgroup_key(S, K));
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& c : C.generators()) {
      Group next = orbit[head].conjugate_by(c);
      bool fresh;
      if (keyed) {
        fresh = seen.insert(subgroup_key(S, next)).second;
      } else {
        fresh = std::none_of(orbit.begin(), orbit.end(), [&](const Group& g) { return g.same_elements(next); });
      }
      if (fresh) orbit.push_back(std::move(next));
    }
  }
  return orbit;
}

}  // namespace

IncidenceProbe x_set(const Group& S, const Group& K, const Permutation& t, const std::optional<Group>& normalizer_of_K) {
  if (!K.is_subgroup_of(S) || !S.contains(t)) throw PreconditionError("x_set: K or t is not in S");
  IncidenceProbe probe{K, t, {}, {}};
  const ElementTable& table = S.elements();
  const ConjugacyData& conj = S.conjugacy();
  const std::uint32_t t_index = table.at(t);
  const std::uint32_t t_class = conj.class_of[t_index];
  if (K.order() % t.order() != 0) return probe;

  std::vector<std::uint32_t> meet;
  for (const auto& e : K.chain().enumerate()) {
    std::uint32_t idx = table.at(e);
    if (conj.class_of[idx] == t_class) meet.push_back(idx);
  }
  if (meet.empty()) return probe;

  Group N = normalizer_of_K ? *normalizer_of_K : normalizer(S, K);
  Group C = centralizer(S, t);
  std::unordered_set<std::uint32_t> placed;
  for (std::uint32_t a : meet) {
    if (placed.count(a)) continue;
    // The N-orbit of a inside K ∩ [t]_S.
    std::vector<std::uint32_t> orbit{a};
    placed.insert(a);
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (const auto& n : N.generators()) {
        std::uint32_t b = table.at(table[orbit[head]].conjugate_by(n));
        if (placed.insert(b).second) orbit.push_back(b);
      }
    Permutation s = conj.from_rep[a].inverse() * conj.from_rep[t_index];
    if (table[a].conjugate_by(s) != t) throw InconsistencyError("x_set: conjugator does not map a to t");
    auto members = conjugation_orbit(S, K.conjugate_by(s), C);
    probe.orbit_sizes.push_back(members.size());
    for (auto& m : members) probe.members.push_back(std::move(m));
  }
  return probe;
}

std::uint64_t class_meet_size(const Group& S, const Group& K, const Permutation& t) {
  const ElementTable& table = S.elements();
  const ConjugacyData& conj = S.conjugacy();
  const std::uint32_t t_class = conj.class_of[table.at(t)];
  std::uint64_t count = 0;
  for (const auto& e : K.chain().enumerate())
    if (conj.class_of[table.at(e)] == t_class) ++count;
  return count;
}

std::optional<Permutation> probe_element(const Group& V, const Group& A, std::uint64_t p) {
  std::optional<Permutation> best;
  std::uint64_t best_order = 0;
  for (const auto& e : V.chain().enumerate()) {
    if (A.contains(e)) continue;
    std::uint64_t o = e.order();
    if (!is_prime_power_of(o, p)) continue;
    if (!best || o < best_order) {
      best = e;
      best_order = o;
    }
  }
  return best;
}

std::uint64_t explicit_mark(const Group& S, const Group& K, const Group& V, const Permutation& t,
                            const std::optional<Group>& normalizer_of_K, std::size_t* probe_size) {
  if (!V.contains(t)) throw PreconditionError("explicit_mark: t is not in V");
  if (probe_size) *probe_size = 0;
  if (K.order() % V.order() != 0) return 0;
  Group N = normalizer_of_K ? *normalizer_of_K : normalizer(S, K);
  IncidenceProbe probe = x_set(S, K, t, N);
  if (probe_size) *probe_size = probe.size();
  std::uint64_t above = 0;
  for (const auto& member : probe.members)
    if (V.is_subgroup_of(member)) ++above;
  return (N.order() / K.order()) * above;
}

}  // namespace marks
