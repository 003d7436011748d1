#include "marks/dress.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "marks/coset_space.hpp"
#include "marks/error.hpp"
#include "marks/kernels.hpp"

namespace marks {

DressRow dress_coefficients(const SubgroupClassIndex& index, const Group& U, const std::optional<Group>& normalizer_of_U) {
  const Group& S = index.ambient();
  Group N = normalizer_of_U ? *normalizer_of_U : normalizer(S, U);
  CosetSpace cosets(N, U);
  const std::size_t w = cosets.size();

  // <U, a> depends only on the cyclic subgroup <Ua> of W, and W-conjugate cyclic
  // subgroups give S-conjugate groups, so one identification per orbit suffices.
  std::vector<std::uint32_t> cyclic_of(w, ~0u);
  std::vector<std::uint32_t> cyclic_first;
  for (std::uint32_t c = 0; c < w; ++c) {
    if (cyclic_of[c] != ~0u) continue;
    const Permutation& r = cosets.rep(c);
    std::vector<std::uint32_t> powers;
    Permutation x = r;
    std::uint32_t id = static_cast<std::uint32_t>(cyclic_first.size());
    cyclic_first.push_back(c);
    std::uint32_t k = 1;
    for (std::uint32_t cur = c;; ++k) {
      powers.push_back(cur);
      x *= r;
      cur = cosets.coset_of(x);
      if (cur == powers.front()) break;
    }
    // Generators of the cyclic subgroup are the powers coprime to its order.
    const std::uint32_t order = k;
    for (std::uint32_t e = 0; e < order; ++e)
      if (std::gcd(e + 1, order) == 1) cyclic_of[powers[e]] = id;
  }

  std::vector<std::vector<std::uint32_t>> action;
  for (const auto& s : N.generators()) {
    std::vector<std::uint32_t> map(w);
    for (std::uint32_t c = 0; c < w; ++c) map[c] = cosets.coset_of(cosets.rep(c).conjugate_by(s));
    action.push_back(std::move(map));
  }
  const std::size_t m = cyclic_first.size();
  std::vector<std::uint32_t> orbit_of(m, ~0u);
  std::vector<std::uint32_t> orbit_rep;
  for (std::uint32_t start = 0; start < m; ++start) {
    if (orbit_of[start] != ~0u) continue;
    auto id = static_cast<std::uint32_t>(orbit_rep.size());
    orbit_rep.push_back(start);
    orbit_of[start] = id;
    std::vector<std::uint32_t> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head)
      for (const auto& map : action) {
        std::uint32_t next = cyclic_of[map[cyclic_first[queue[head]]]];
        if (orbit_of[next] == ~0u) {
          orbit_of[next] = id;
          queue.push_back(next);
        }
      }
  }

  std::vector<std::size_t> orbit_class(orbit_rep.size());
  for (std::size_t o = 0; o < orbit_rep.size(); ++o) {
    Group joined = U.join(cosets.rep(cyclic_first[orbit_rep[o]]));
    auto match = index.identify(joined);
    if (!match) throw InconsistencyError("dress: subgroup of order " + std::to_string(joined.order()) + " matches no class");
    orbit_class[o] = match->class_id;
  }

  DressRow row;
  row.U = U;
  row.coeffs.assign(index.size(), 0);
  row.modulus = w;
  for (std::uint32_t c = 0; c < w; ++c) ++row.coeffs[orbit_class[orbit_of[cyclic_of[c]]]];
  return row;
}

DressRow dress_coefficients(const Group& S, std::span<const Group> classes, const Group& U) {
  return dress_coefficients(index_classes(S, classes), U);
}

std::string DressReport::describe() const {
  std::ostringstream out;
  if (ok) return "all Dress congruences hold";
  for (const auto& v : violations)
    out << "row " << v.row << " violates the congruence of U = class " << v.u_class << ": sum = " << v.residue
        << " mod " << v.modulus << "\n";
  return out.str();
}

DressReport verify_dress(const MarkMatrix& marks, std::span<const DressRow> rows) {
  DressReport report;
  for (std::size_t u = 0; u < rows.size(); ++u) {
    const DressRow& d = rows[u];
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < d.coeffs.size(); ++j)
      if (d.coeffs[j] != 0) support.push_back(j);
    for (std::size_t r = 0; r < marks.size(); ++r) {
      std::uint64_t sum = 0;
      for (auto j : support) {
        if (j > r) break;
        sum = (sum + d.coeffs[j] * marks.at(r, j)) % d.modulus;
      }
      if (sum != 0) {
        report.ok = false;
        report.violations.push_back({u, r, sum, d.modulus});
      }
    }
  }
  return report;
}

DressReport verify_dress(const SubgroupPattern& pattern) {
  const auto& classes = pattern.tom.classes;
  SubgroupClassIndex index = index_classes(pattern.group, classes);
  std::vector<DressRow> rows(classes.size());
  for_each_index(classes.size(), [&](std::size_t u) { rows[u] = dress_coefficients(index, classes[u]); });
  return verify_dress(pattern.tom.marks, rows);
}

}  // namespace marks
