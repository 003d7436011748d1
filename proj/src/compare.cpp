#include "marks/oracle.hpp"

#include <algorithm>
#include <map>

#include "marks/error.hpp"

namespace marks {

namespace {

bool cells_agree(const MarkMatrix& a, const MarkMatrix& b, std::span<const std::size_t> perm, std::size_t i,
                 std::size_t k) {
  return a.at(i, k) == b.at(perm[i], perm[k]) && a.at(k, i) == b.at(perm[k], perm[i]);
}

// Invariants of a class that any matching must preserve: first column, diagonal, and the
// sorted nonzero entries of its row and column.
std::vector<std::uint64_t> signature(const MarkMatrix& m, std::size_t i) {
  std::vector<std::uint64_t> sig{m.at(i, 0), m.at(i, i)};
  std::vector<std::uint64_t> row, col;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m.at(i, j)) row.push_back(m.at(i, j));
    if (m.at(j, i)) col.push_back(m.at(j, i));
  }
  std::sort(row.begin(), row.end());
  std::sort(col.begin(), col.end());
  sig.push_back(row.size());
  sig.insert(sig.end(), row.begin(), row.end());
  sig.push_back(col.size());
  sig.insert(sig.end(), col.begin(), col.end());
  return sig;
}

}  // namespace

MatchReport compare_mark_tables(const MarkMatrix& a, const MarkMatrix& b) {
  MatchReport report;
  const std::size_t n = a.size();
  if (b.size() != n) {
    report.reason = "class counts differ: " + std::to_string(n) + " vs " + std::to_string(b.size());
    return report;
  }
  std::vector<std::vector<std::uint64_t>> sig_a(n), sig_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    sig_a[i] = signature(a, i);
    sig_b[i] = signature(b, i);
  }
  std::vector<std::vector<std::size_t>> options(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (sig_a[i] == sig_b[j]) options[i].push_back(j);
    if (options[i].empty()) {
      report.reason = "class " + std::to_string(i) + " has no counterpart with the same row and column invariants";
      return report;
    }
  }
  // Most constrained classes first.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return options[x].size() < options[y].size(); });

  std::vector<std::size_t> perm(n, n);
  std::vector<bool> used(n, false);
  std::uint64_t nodes = 0;
  constexpr std::uint64_t node_cap = 50'000'000;
  auto search = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    if (++nodes > node_cap) throw CapExceededError("compare_mark_tables: search exceeded its node cap");
    const std::size_t i = order[depth];
    for (std::size_t j : options[i]) {
      if (used[j]) continue;
      perm[i] = j;
      bool ok = true;
      for (std::size_t d = 0; d <= depth && ok; ++d) ok = cells_agree(a, b, perm, i, order[d]);
      if (!ok) continue;
      used[j] = true;
      if (self(self, depth + 1)) return true;
      used[j] = false;
    }
    perm[i] = n;
    return false;
  };
  if (!search(search, 0)) {
    report.reason = "no class permutation makes the tables equal";
    return report;
  }
  report.match = true;
  report.perm = std::move(perm);
  return report;
}

MatchReport compare_patterns(const SubgroupPattern& a, const SubgroupPattern& b) {
  const auto& ca = a.tom.classes;
  const auto& cb = b.tom.classes;
  const bool with_groups = !ca.empty() && ca.size() == cb.size() && ca.size() == a.tom.marks.size() &&
                           a.group.degree() == b.group.degree() && a.group.same_elements(b.group);
  if (!with_groups) return compare_mark_tables(a.tom.marks, b.tom.marks);

  MatchReport report;
  const std::size_t n = ca.size();
  SubgroupClassIndex index(b.group);
  for (std::size_t j = 0; j < n; ++j) {
    auto [id, fresh] = index.insert(cb[j]);
    if (!fresh) {
      report.reason = "second pattern lists class " + std::to_string(id) + " twice";
      return report;
    }
  }
  std::vector<std::size_t> perm(n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    auto m = index.identify(ca[i]);
    if (!m || used[m->class_id]) {
      report.reason = "class " + std::to_string(i) + " of the first pattern has no conjugate in the second";
      return report;
    }
    used[m->class_id] = true;
    perm[i] = m->class_id;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a.tom.marks.at(i, k) != b.tom.marks.at(perm[i], perm[k])) {
        report.reason = "mark mismatch at (" + std::to_string(i) + ", " + std::to_string(k) + ")";
        report.perm = perm;
        return report;
      }
  report.match = true;
  report.perm = std::move(perm);
  return report;
}

}  // namespace marks
