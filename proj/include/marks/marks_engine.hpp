#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "marks/dress.hpp"
#include "marks/subgroup_classes.hpp"
#include "marks/table_of_marks.hpp"

namespace marks {

/// Step that decided a cell.
enum class Decider { quarter, diagonal, bounds, transitivity, dress, congruence, empty_meet, element_count, probe };
const char* to_string(Decider d);

struct CellOrigin {
  std::size_t row;
  std::size_t col;
  Decider by;
};

struct EngineOptions {
  /// Dress refinement only looks at congruences with at most this many undecided cells.
  std::size_t dress_cap = 12;
  std::uint64_t dress_node_cap = 2'000'000;
  bool use_transitivity = true;
  bool use_dress = true;
  bool cyclic_columns = true;
  /// Also apply the plain congruence of every class U below K, red ones included.
  bool use_all_congruences = true;
  /// Slow debug mode: after every step each candidate set must still hold the mark counted by fixed cosets.
  bool check_soundness = false;
};

/// Top-left quarter: one row per blue S-class over the blue columns.
std::vector<std::vector<std::uint64_t>> top_left(const MarkMatrix& m_a, const BlueClassification& blue, std::uint64_t p);

/// Bottom-left quarter: each red row copies the A-row of K ∩ A at the blue columns.
std::vector<std::vector<std::uint64_t>> bottom_left(const MarkMatrix& m_a, const BlueClassification& blue,
                                                    std::span<const RedClassInfo> reds);

/// Table of marks of S from that of a normal subgroup A of prime index, one row at a time.
class CyclicExtensionEngine {
 public:
  CyclicExtensionEngine(const SubgroupPattern& pattern_a, const Group& S, EngineOptions options = {});

  const ExtensionContext& context() const noexcept { return ctx_; }
  const ExtensionClasses& classes() const noexcept { return classes_; }
  std::size_t size() const noexcept { return reps_.size(); }
  std::size_t blue_count() const noexcept { return classes_.blue.blue.size(); }
  bool is_red(std::size_t i) const noexcept { return i >= blue_count(); }
  const Group& representative(std::size_t i) const { return reps_[i]; }
  const Group& normalizer_of(std::size_t i) const { return normalizers_[i]; }
  /// Blue column of K ∩ A for a red class.
  std::size_t gamma_column(std::size_t i) const;

  const MarkCell& cell(std::size_t i, std::size_t j) const { return cells_[i][j]; }
  bool row_complete(std::size_t i) const;

  /// Upper bounds from K ∩ A, congruence mod p and divisibility by the diagonal.
  void init_row(std::size_t i);
  bool transitivity_refine(std::size_t i);
  bool dress_refine(std::size_t i);
  /// Refinement with the congruence of one blue class U (a column index).
  bool dress_refine(std::size_t i, std::size_t u);
  /// Keeps only values that occur in some solution of U's congruence mod |N(U):U|.
  bool congruence_refine(std::size_t i, std::size_t u);
  /// Undecided red columns hit by U's congruence and every assignment to them that satisfies it.
  std::pair<std::vector<std::size_t>, std::vector<std::vector<std::uint64_t>>> dress_assignments(std::size_t i,
                                                                                              std::size_t u);
  /// Decides one undecided cell of row i by counting incidences; false if the row was complete.
  /// A cell whose probe element has no conjugate in K is set to 0 without counting as a probe.
  bool probe(std::size_t i);
  void complete_row(std::size_t i);
  void run();

  const DressRow& dress_row(std::size_t u);
  SubgroupPattern pattern() const;
  const PatternStats& stats() const noexcept { return stats_; }
  const std::vector<CellOrigin>& trace() const noexcept { return trace_; }
  const SubgroupClassIndex& class_index();

 private:
  void decide(std::size_t i, std::size_t j, std::uint64_t value, Decider by);
  void note_decisions(std::size_t i, const std::vector<bool>& before, Decider by);
  std::vector<bool> decided_mask(std::size_t i) const;
  void note_open(std::size_t i, const std::vector<std::size_t>& open, Decider by);  // open cells were undecided
  void check_truth(std::size_t i);
  bool subconjugate(std::size_t u, std::size_t v) const;
  const std::vector<std::size_t>& support_of(std::size_t u);
  /// Nonzero columns below the diagonal of a completed row v; null while v is open.
  const std::vector<std::size_t>* completed_support(std::size_t v);  // classes with nonzero Dress coefficient  // u ≤ v up to conjugacy, from completed rows

  ExtensionContext ctx_;
  EngineOptions options_;
  ExtensionClasses classes_;
  std::vector<Group> reps_;
  std::vector<Group> normalizers_;
  std::vector<std::vector<MarkCell>> cells_;
  std::vector<bool> initialized_;
  std::map<std::size_t, DressRow> dress_rows_;
  std::map<std::size_t, std::vector<std::size_t>> supports_;
  std::vector<std::optional<std::vector<std::size_t>>> completed_;
  std::map<std::size_t, std::optional<Permutation>> probe_elements_;
  std::optional<SubgroupClassIndex> index_;
  std::map<std::size_t, std::vector<std::uint64_t>> truth_rows_;
  std::vector<CellOrigin> trace_;
  PatternStats stats_;
};

struct ExtensionResult {
  SubgroupPattern pattern;
  ExtensionClasses classes;
  std::vector<CellOrigin> trace;
};

ExtensionResult extend_table_of_marks(const SubgroupPattern& pattern_a, const Group& S, EngineOptions options = {});
SubgroupPattern table_of_marks_by_cyclic_extension(const SubgroupPattern& pattern_a, const Group& S,
                                                   EngineOptions options = {});

struct SolvableResult {
  SubgroupPattern pattern;
  SeriesChain series;
  std::vector<SubgroupPattern> panels;  // one per series term, trivial group first
  std::vector<ExtensionClasses> steps;  // extension data per step, aligned with panels[1..]
};

SolvableResult table_of_marks_solvable_steps(const Group& G, EngineOptions options = {});
SubgroupPattern table_of_marks_solvable(const Group& G, EngineOptions options = {});

}  // namespace marks
