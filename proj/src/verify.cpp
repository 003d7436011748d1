#include "marks/verify.hpp"

#include "marks/error.hpp"
#include "marks/kernels.hpp"

namespace marks {

namespace {

std::string cell_name(std::size_t i, std::size_t j) { return "(" + std::to_string(i) + ", " + std::to_string(j) + ")"; }

}  // namespace

std::vector<ColumnPair> normal_prime_index_pairs(const Group& G, std::span<const Group> classes) {
  SubgroupClassIndex index = index_classes(G, classes);
  std::vector<ColumnPair> pairs;
  for (std::size_t v = 0; v < classes.size(); ++v) {
    const Group& V = classes[v];
    const Group derived = derived_subgroup(V);
    std::uint64_t rest = V.order();
    for (std::uint64_t q = 2; q <= rest; ++q) {
      if (rest % q != 0) continue;
      while (rest % q == 0) rest /= q;
      // D = V'·V^q; any index-q subgroup above D is normal of index q.
      std::vector<Permutation> seeds(derived.generators());
      for (const auto& g : V.generators()) seeds.push_back(g.pow(static_cast<std::int64_t>(q)));
      Group u = normal_closure(V, seeds);
      if (u.order() == V.order()) continue;
      for (const auto& g : V.generators()) {
        Group bigger = u.join(g);
        if (bigger.order() < V.order()) u = std::move(bigger);
      }
      if (V.order() / u.order() != q) throw InconsistencyError("normal_prime_index_pairs: index is not q");
      auto m = index.identify(u);
      if (!m) throw InconsistencyError("normal_prime_index_pairs: subgroup matches no class");
      pairs.push_back({m->class_id, v, q});
    }
  }
  return pairs;
}

VerifyReport verify_matrix(const MarkMatrix& marks) {
  VerifyReport report;
  const std::size_t n = marks.size();
  if (n == 0) {
    report.fail("empty table");
    return report;
  }
  const std::uint64_t order = marks.at(0, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t diag = marks.at(i, i);
    if (diag == 0) {
      report.fail("zero diagonal in row " + std::to_string(i));
      continue;
    }
    for (std::size_t j = 0; j <= i; ++j)
      if (marks.at(i, j) % diag != 0) report.fail("entry " + cell_name(i, j) + " is not divisible by the diagonal");
    if (marks.at(i, 0) == 0 || order % marks.at(i, 0) != 0) report.fail("first column entry of row " + std::to_string(i) + " does not divide |G|");
  }
  for (std::size_t j = 0; j < n; ++j)
    if (marks.at(n - 1, j) != 1) report.fail("last row entry " + std::to_string(j) + " is not 1");
  return report;
}

VerifyReport verify_pattern(const SubgroupPattern& pattern, std::span<const ColumnPair> extra_pairs) {
  VerifyReport report = verify_matrix(pattern.tom.marks);
  const auto& classes = pattern.tom.classes;
  const auto& m = pattern.tom.marks;
  const Group& G = pattern.group;
  const std::size_t n = classes.size();
  if (m.size() != n) {
    report.fail("class count " + std::to_string(n) + " differs from table size " + std::to_string(m.size()));
    return report;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!classes[i].is_subgroup_of(G)) report.fail("class " + std::to_string(i) + " is not a subgroup of the group");
    const std::uint64_t k = classes[i].order();
    for (std::size_t j = 0; j <= i; ++j)
      if (m.at(i, j) != 0 && k % classes[j].order() != 0)
        report.fail("entry " + cell_name(i, j) + " is nonzero although the orders do not divide");
    if (m.at(i, 0) != G.order() / k) report.fail("first column of row " + std::to_string(i) + " is not the index");
  }
  if (!report.ok) return report;
  if (!classes.back().same_elements(G)) report.fail("last class is not the whole group");

  std::vector<std::uint64_t> normalizer_index(n);
  for_each_index(n, [&](std::size_t i) { normalizer_index[i] = normalizer(G, classes[i]).order() / classes[i].order(); });
  for (std::size_t i = 0; i < n; ++i)
    if (m.at(i, i) != normalizer_index[i]) report.fail("diagonal of row " + std::to_string(i) + " is not |N(K):K|");

  DressReport dress = verify_dress(pattern);
  for (const auto& v : dress.violations)
    report.fail("row " + std::to_string(v.row) + " violates the Dress congruence of U = class " + std::to_string(v.u_class) +
                " (sum = " + std::to_string(v.residue) + " mod " + std::to_string(v.modulus) + ")");

  auto pairs = normal_prime_index_pairs(G, classes);
  pairs.insert(pairs.end(), extra_pairs.begin(), extra_pairs.end());
  for (const auto& pr : pairs)
    for (std::size_t r = 0; r < n; ++r) {
      std::uint64_t a = m.at(r, pr.u), b = m.at(r, pr.v);
      if ((a % pr.q) != (b % pr.q))
        report.fail("row " + std::to_string(r) + ": columns " + std::to_string(pr.u) + " and " + std::to_string(pr.v) +
                    " are not congruent mod " + std::to_string(pr.q));
    }
  return report;
}

}  // namespace marks
