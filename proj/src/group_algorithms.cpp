#include "marks/group_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "marks/error.hpp"

namespace marks {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_prime_power_of(std::uint64_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

namespace {

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return d;
  return n;
}

void require_subgroup(const Group& g, const Group& h, const char* what) {
  if (!h.is_subgroup_of(g)) throw PreconditionError(std::string(what) + ": subgroup is not contained in the group");
}

Group grow_by_flags(Group result, const ElementTable& table, const std::vector<std::uint8_t>& flags) {
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i] && !result.contains(table[i])) result = result.join(table[i]);
  return result;
}

}  // namespace

std::vector<ElementClass> element_conjugacy_classes(const Group& g) {
  const ConjugacyData& data = g.conjugacy();
  const ElementTable& table = g.elements();
  std::vector<ElementClass> classes;
  for (std::size_t c = 0; c < data.class_rep.size(); ++c)
    classes.push_back({table[data.class_rep[c]], data.class_size[c]});
  std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    return a.representative.order() < b.representative.order();
  });
  return classes;
}

std::map<std::uint64_t, std::uint64_t> element_order_profile(const Group& g) {
  std::map<std::uint64_t, std::uint64_t> profile;
  for (const auto& e : g.chain().enumerate()) ++profile[e.order()];
  return profile;
}

std::map<std::pair<std::uint64_t, std::size_t>, std::uint64_t> fixed_point_profile(const Group& h) {
  std::map<std::pair<std::uint64_t, std::size_t>, std::uint64_t> profile;
  for (const auto& e : h.chain().enumerate()) ++profile[{e.order(), e.fixed_point_count()}];
  return profile;
}

bool is_normal(const Group& ambient, const Group& subgroup) {
  if (!subgroup.is_subgroup_of(ambient)) return false;
  for (const auto& s : ambient.generators())
    for (const auto& h : subgroup.generators())
      if (!subgroup.contains(h.conjugate_by(s))) return false;
  return true;
}

bool is_abelian(const Group& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

Group centralizer(const Group& g, const Permutation& x, Execution exec) {
  if (!g.contains(x)) throw PreconditionError("centralizer: element is not in the group");
  const ElementTable& table = g.elements();
  auto flags = filter_elements(table.elements(), [&](const Permutation& e) { return e * x == x * e; }, exec);
  return grow_by_flags(Group(g.degree(), {x}), table, flags);
}

Group normalizer(const Group& g, const Group& h, Execution exec) {
  require_subgroup(g, h, "normalizer");
  if (is_normal(g, h)) return g;
  const ElementTable& table = g.elements();
  const auto& gens = h.generators();
  auto flags = filter_elements(
      table.elements(),
      [&](const Permutation& e) {
        return std::all_of(gens.begin(), gens.end(), [&](const auto& s) { return h.contains(s.conjugate_by(e)); });
      },
      exec);
  return grow_by_flags(h, table, flags);
}

SubgroupKey subgroup_key(const Group& ambient, const Group& h) {
  const ElementTable& table = ambient.elements();
  SubgroupKey key;
  key.reserve(h.order());
  for (const auto& e : h.chain().enumerate()) key.push_back(table.at(e));
  std::sort(key.begin(), key.end());
  return key;
}

std::size_t SubgroupKeyHash::operator()(const SubgroupKey& key) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ key.size();
  for (auto v : key) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::optional<Permutation> are_conjugate_subgroups(const Group& g, const Group& h, const Group& k,
                                                   std::span<const Permutation> hints) {
  require_subgroup(g, h, "conjugacy test");
  require_subgroup(g, k, "conjugacy test");
  if (h.order() != k.order()) return std::nullopt;
  if (h.same_elements(k)) return Permutation(g.degree());
  for (const auto& c : hints)
    if (h.conjugate_by(c).same_elements(k)) return c;

  if (h.order() <= exact_key_limit) {
    if (fixed_point_profile(h) != fixed_point_profile(k)) return std::nullopt;
    const auto& maps = g.conjugation_maps();
    const auto& gens = g.generators();
    SubgroupKey target = subgroup_key(g, k);
    SubgroupKey start = subgroup_key(g, h);
    std::unordered_set<SubgroupKey, SubgroupKeyHash> seen{start};
    std::deque<std::pair<SubgroupKey, Permutation>> queue;
    queue.emplace_back(std::move(start), Permutation(g.degree()));
    while (!queue.empty()) {
      auto [key, conj] = std::move(queue.front());
      queue.pop_front();
      for (std::size_t s = 0; s < gens.size(); ++s) {
        SubgroupKey next(key.size());
        for (std::size_t i = 0; i < key.size(); ++i) next[i] = maps[s][key[i]];
        std::sort(next.begin(), next.end());
        if (!seen.insert(next).second) continue;
        Permutation c = conj * gens[s];
        if (next == target) return c;
        queue.emplace_back(std::move(next), std::move(c));
      }
    }
    return std::nullopt;
  }

  if (element_order_profile(h) != element_order_profile(k)) return std::nullopt;
  for (const auto& e : g.elements().elements()) {
    const auto& gens = h.generators();
    if (std::all_of(gens.begin(), gens.end(), [&](const auto& s) { return k.contains(s.conjugate_by(e)); })) return e;
  }
  return std::nullopt;
}

CosetAction coset_action(const Group& g, const Group& h, std::uint64_t degree_limit) {
  require_subgroup(g, h, "coset action");
  if (g.order() / h.order() > degree_limit)
    throw CapExceededError("coset action of index " + std::to_string(g.order() / h.order()) +
                           " exceeds the degree limit " + std::to_string(degree_limit));
  CosetSpace cosets(g, h);
  std::vector<Permutation> images;
  for (const auto& s : g.generators()) images.push_back(cosets.image_of(s));
  Group image(cosets.size(), images);
  return {std::move(cosets), std::move(image)};
}

Quotient quotient_group(const Group& n, const Group& h, std::uint64_t degree_limit) {
  if (!is_normal(n, h)) throw PreconditionError("quotient: subgroup is not normal");
  auto action = coset_action(n, h, degree_limit);
  return {std::move(action.cosets), std::move(action.image)};
}

Group normal_closure(const Group& ambient, std::span<const Permutation> seeds) {
  Group closure(ambient.degree(), seeds);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& s : ambient.generators()) {
      for (const auto& x : closure.generators()) {
        Permutation c = x.conjugate_by(s);
        if (!closure.contains(c)) {
          closure = closure.join(c);
          changed = true;
          break;
        }
      }
      if (changed) break;
    }
  }
  return closure;
}

Group derived_subgroup(const Group& g) {
  std::vector<Permutation> commutators;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      commutators.push_back(gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j]);
  return normal_closure(g, commutators);
}

std::vector<Group> derived_series(const Group& g) {
  std::vector<Group> series{g};
  for (std::size_t step = 0; step < derived_series_cap; ++step) {
    Group next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const Group& g) { return derived_series(g).back().is_trivial(); }

SeriesChain composition_series(const Group& g) {
  auto derived = derived_series(g);
  if (!derived.back().is_trivial()) throw NotSolvableError("group of order " + std::to_string(g.order()) + " is not solvable");
  SeriesChain chain;
  chain.terms.push_back(Group::trivial(g.degree()));
  // Refine each abelian factor D_i / D_{i+1} from the bottom through prime steps.
  for (std::size_t i = derived.size() - 1; i-- > 0;) {
    const Group& upper = derived[i];
    while (chain.terms.back().order() < upper.order()) {
      const Group& current = chain.terms.back();
      for (const auto& x : upper.generators()) {
        if (current.contains(x)) continue;
        std::uint64_t m = 1;
        Permutation power = x;
        while (!current.contains(power)) {
          power *= x;
          ++m;
        }
        std::uint64_t q = smallest_prime_factor(m);
        Group next = current.join(x.pow(static_cast<std::int64_t>(m / q)));
        chain.indices.push_back(next.order() / current.order());
        chain.terms.push_back(std::move(next));
        break;
      }
    }
  }
  chain.terms.back() = g;
  for (auto index : chain.indices)
    if (!is_prime(index)) throw InconsistencyError("composition series refinement produced a non-prime index");
  return chain;
}

}  // namespace marks
