#include "marks/table_of_marks.hpp"

#include <algorithm>

#include "marks/coset_space.hpp"
#include "marks/error.hpp"

namespace marks {

MarkMatrix::MarkMatrix(std::size_t n) : rows_(n) {
  for (std::size_t i = 0; i < n; ++i) rows_[i].assign(i + 1, 0);
}

MarkMatrix MarkMatrix::from_rows(const std::vector<std::vector<std::uint64_t>>& rows) {
  MarkMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    if (r.size() != i + 1 && r.size() != rows.size())
      throw ParseError("mark row " + std::to_string(i) + " has " + std::to_string(r.size()) + " entries");
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j > i) {
        if (r[j] != 0) throw ParseError("mark above the diagonal in row " + std::to_string(i));
        continue;
      }
      m.rows_[i][j] = r[j];
    }
  }
  return m;
}

void MarkMatrix::set(std::size_t i, std::size_t j, std::uint64_t value) {
  if (j > i) {
    if (value != 0) throw InconsistencyError("nonzero mark above the diagonal");
    return;
  }
  rows_[i][j] = value;
}

MarkMatrix MarkMatrix::permuted(std::span<const std::size_t> perm) const {
  const std::size_t n = size();
  MarkMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t v = at(perm[i], perm[j]);
      if (j > i && v != 0) throw InconsistencyError("permutation does not keep the table lower triangular");
      if (j <= i) out.rows_[i][j] = v;
    }
  return out;
}

SubgroupPattern trivial_pattern(std::size_t degree) {
  SubgroupPattern p;
  p.group = Group::trivial(degree);
  p.tom.classes = {p.group};
  p.tom.marks = MarkMatrix::from_rows({{1}});
  return p;
}

std::vector<std::uint64_t> mark_row_by_fixed_cosets(const Group& G, const Group& K, std::span<const Group> columns) {
  std::vector<std::uint64_t> out(columns.size(), 0);
  CosetSpace cosets(G, K);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Group& H = columns[j];
    if (K.order() % H.order() != 0) continue;
    std::uint64_t fixed = 0;
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      const Permutation& g = cosets.rep(c);
      Permutation gi = g.inverse();
      bool all = std::all_of(H.generators().begin(), H.generators().end(),
                             [&](const auto& h) { return K.contains(g * h * gi); });
      if (all) ++fixed;
    }
    out[j] = fixed;
  }
  return out;
}

std::uint64_t mark_by_fixed_cosets(const Group& G, const Group& K, const Group& H) {
  if (!K.is_subgroup_of(G) || !H.is_subgroup_of(G)) throw PreconditionError("mark: subgroup is not in the group");
  std::vector<Group> cols{H};
  return mark_row_by_fixed_cosets(G, K, cols)[0];
}

SubgroupClassIndex index_classes(const Group& G, std::span<const Group> classes) {
  SubgroupClassIndex index(G);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    auto [id, fresh] = index.insert(classes[i]);
    if (!fresh)
      throw InconsistencyError("classes " + std::to_string(id) + " and " + std::to_string(i) + " are conjugate");
  }
  return index;
}

MarkCell MarkCell::candidates(std::vector<std::uint64_t> values) {
  if (values.empty()) throw InconsistencyError("empty candidate set");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return MarkCell(std::move(values));
}

std::uint64_t MarkCell::value() const {
  if (!is_decided()) throw PreconditionError("mark cell is undecided");
  return values_.front();
}

bool MarkCell::contains(std::uint64_t v) const { return std::binary_search(values_.begin(), values_.end(), v); }

bool MarkCell::clamp(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> kept;
  for (auto v : values_)
    if (v >= lo && v <= hi) kept.push_back(v);
  if (kept.empty()) throw InconsistencyError("candidate set emptied by bounds [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  bool changed = kept.size() != values_.size();
  values_ = std::move(kept);
  return changed;
}

bool MarkCell::retain(const std::vector<std::uint64_t>& keep) {
  std::vector<std::uint64_t> kept;
  for (auto v : values_)
    if (std::binary_search(keep.begin(), keep.end(), v)) kept.push_back(v);
  if (kept.empty()) throw InconsistencyError("candidate set emptied by refinement");
  bool changed = kept.size() != values_.size();
  values_ = std::move(kept);
  return changed;
}

}  // namespace marks
