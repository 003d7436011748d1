#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "marks/group.hpp"
#include "marks/subgroup_index.hpp"

namespace marks {

/// Square lower-triangular matrix of marks; row i stores columns 0..i.
class MarkMatrix {
 public:
  MarkMatrix() = default;
  explicit MarkMatrix(std::size_t n);
  /// Accepts full square rows or lower-triangular rows; entries above the diagonal must be zero.
  static MarkMatrix from_rows(const std::vector<std::vector<std::uint64_t>>& rows);

  std::size_t size() const noexcept { return rows_.size(); }
  std::uint64_t at(std::size_t i, std::size_t j) const { return j <= i ? rows_[i][j] : 0; }
  void set(std::size_t i, std::size_t j, std::uint64_t value);
  const std::vector<std::uint64_t>& row(std::size_t i) const { return rows_[i]; }
  const std::vector<std::vector<std::uint64_t>>& rows() const noexcept { return rows_; }

  /// Rows and columns reordered so that new index k is old index perm[k].
  MarkMatrix permuted(std::span<const std::size_t> perm) const;

  bool operator==(const MarkMatrix&) const = default;

 private:
  std::vector<std::vector<std::uint64_t>> rows_;
};

struct TableOfMarks {
  std::vector<Group> classes;
  MarkMatrix marks;
};

struct PatternStats {
  std::uint64_t probes = 0;
  std::uint64_t max_probe = 0;
  std::uint64_t millis = 0;
};

struct SubgroupPattern {
  Group group;
  TableOfMarks tom;
  PatternStats stats;

  std::size_t size() const { return tom.classes.size(); }
};

/// Pattern of the trivial group of the given degree: [[1]].
SubgroupPattern trivial_pattern(std::size_t degree);

/// #{Kg : Kgh = Kg for all h in H}, counted over a right transversal of K in G.
std::uint64_t mark_by_fixed_cosets(const Group& G, const Group& K, const Group& H);

/// Marks of every column group on G/K, sharing one coset enumeration.
std::vector<std::uint64_t> mark_row_by_fixed_cosets(const Group& G, const Group& K, std::span<const Group> columns);

/// Class index whose ids coincide with positions in `classes`; throws on duplicate classes.
SubgroupClassIndex index_classes(const Group& G, std::span<const Group> classes);

/// One entry of the bottom-right quarter while it is being decided.
class MarkCell {
 public:
  MarkCell() : values_{0} {}
  static MarkCell decided(std::uint64_t value) { return MarkCell(std::vector<std::uint64_t>{value}); }
  /// Values must be non-empty; they are sorted and deduplicated.
  static MarkCell candidates(std::vector<std::uint64_t> values);

  bool is_decided() const noexcept { return values_.size() == 1; }
  std::uint64_t value() const;
  std::uint64_t lower() const noexcept { return values_.front(); }
  std::uint64_t upper() const noexcept { return values_.back(); }
  const std::vector<std::uint64_t>& values() const noexcept { return values_; }
  bool contains(std::uint64_t v) const;

  /// Keeps values in [lo, hi]; returns true if something was removed.
  bool clamp(std::uint64_t lo, std::uint64_t hi);
  /// Keeps values allowed by `keep`; returns true if something was removed.
  bool retain(const std::vector<std::uint64_t>& keep);

  bool operator==(const MarkCell&) const = default;

 private:
  explicit MarkCell(std::vector<std::uint64_t> values) : values_(std::move(values)) {}
  std::vector<std::uint64_t> values_;
};

}  // namespace marks
