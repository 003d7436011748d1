#include "marks/marks_engine.hpp"

#include <algorithm>
#include <chrono>

#include "marks/error.hpp"
#include "marks/incidence.hpp"

namespace marks {

const char* to_string(Decider d) {
  switch (d) {
    case Decider::quarter: return "quarter";
    case Decider::diagonal: return "diagonal";
    case Decider::bounds: return "bounds";
    case Decider::transitivity: return "transitivity";
    case Decider::dress: return "dress";
    case Decider::congruence: return "congruence";
    case Decider::empty_meet: return "empty_meet";
    case Decider::element_count: return "element_count";
    case Decider::probe: return "probe";
  }
  return "?";
}

std::vector<std::vector<std::uint64_t>> top_left(const MarkMatrix& m_a, const BlueClassification& blue, std::uint64_t p) {
  const std::size_t b = blue.blue.size();
  std::vector<std::vector<std::uint64_t>> rows(b, std::vector<std::uint64_t>(b, 0));
  for (std::size_t i = 0; i < b; ++i) {
    if (blue.fused[i].size() != (blue.in_b1[i] ? 1 : p)) throw InconsistencyError("top_left: fusion data does not match p");
    const std::uint64_t factor = blue.in_b1[i] ? p : 1;
    for (std::size_t j = 0; j < b; ++j) {
      std::uint64_t sum = 0;
      for (auto a : blue.fused[i]) sum += m_a.at(a, blue.fused[j][0]);
      rows[i][j] = factor * sum;
    }
  }
  return rows;
}

std::vector<std::vector<std::uint64_t>> bottom_left(const MarkMatrix& m_a, const BlueClassification& blue,
                                                    std::span<const RedClassInfo> reds) {
  const std::size_t b = blue.blue.size();
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& red : reds) {
    if (red.h_blue >= b || !blue.in_b1[red.h_blue]) throw InconsistencyError("bottom_left: K ∩ A is not a B1 class");
    std::size_t a = blue.fused[red.h_blue][0];
    std::vector<std::uint64_t> row(b);
    for (std::size_t j = 0; j < b; ++j) row[j] = m_a.at(a, blue.fused[j][0]);
    rows.push_back(std::move(row));
  }
  return rows;
}

CyclicExtensionEngine::CyclicExtensionEngine(const SubgroupPattern& pattern_a, const Group& S, EngineOptions options)
    : ctx_(make_extension_context(S, pattern_a.group)), options_(std::move(options)) {
  const auto& a_classes = pattern_a.tom.classes;
  if (pattern_a.tom.marks.size() != a_classes.size()) throw PreconditionError("pattern of A: class and mark counts differ");
  classes_ = extend_subgroup_classes(a_classes, ctx_);
  reps_ = classes_.representatives();
  const std::size_t b = blue_count();
  const std::size_t n = reps_.size();

  normalizers_ = classes_.blue.normalizers;
  normalizers_.resize(n);
  for (std::size_t i = b; i < n; ++i) normalizers_[i] = normalizer(ctx_.S, reps_[i]);

  cells_.resize(n);
  initialized_.assign(n, false);
  for (std::size_t i = 0; i < n; ++i) cells_[i].resize(i + 1);

  auto tl = top_left(pattern_a.tom.marks, classes_.blue, ctx_.p);
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) {
      if (j > i) {
        if (tl[i][j] != 0) throw InconsistencyError("top_left: nonzero mark above the diagonal");
        continue;
      }
      decide(i, j, tl[i][j], Decider::quarter);
    }
    initialized_[i] = true;
  }
  auto bl = bottom_left(pattern_a.tom.marks, classes_.blue, classes_.red);
  for (std::size_t r = 0; r < classes_.red.size(); ++r) {
    const std::size_t i = b + r;
    for (std::size_t j = 0; j < b; ++j) decide(i, j, bl[r][j], Decider::quarter);
    decide(i, i, normalizers_[i].order() / reps_[i].order(), Decider::diagonal);
  }
}

std::size_t CyclicExtensionEngine::gamma_column(std::size_t i) const {
  if (!is_red(i)) throw PreconditionError("gamma_column: class is blue");
  return classes_.red[i - blue_count()].h_blue;
}

bool CyclicExtensionEngine::row_complete(std::size_t i) const {
  return initialized_[i] && std::all_of(cells_[i].begin(), cells_[i].end(), [](const auto& c) { return c.is_decided(); });
}

void CyclicExtensionEngine::decide(std::size_t i, std::size_t j, std::uint64_t value, Decider by) {
  cells_[i][j] = MarkCell::decided(value);
  trace_.push_back({i, j, by});
}

std::vector<bool> CyclicExtensionEngine::decided_mask(std::size_t i) const {
  std::vector<bool> mask(cells_[i].size());
  for (std::size_t j = 0; j < mask.size(); ++j) mask[j] = cells_[i][j].is_decided();
  return mask;
}

void CyclicExtensionEngine::note_decisions(std::size_t i, const std::vector<bool>& before, Decider by) {
  for (std::size_t j = 0; j < before.size(); ++j)
    if (!before[j] && cells_[i][j].is_decided()) trace_.push_back({i, j, by});
  check_truth(i);
}

void CyclicExtensionEngine::note_open(std::size_t i, const std::vector<std::size_t>& open, Decider by) {
  for (auto j : open)
    if (cells_[i][j].is_decided()) trace_.push_back({i, j, by});
  check_truth(i);
}

void CyclicExtensionEngine::check_truth(std::size_t i) {
  if (!options_.check_soundness) return;
  auto it = truth_rows_.find(i);
  if (it == truth_rows_.end()) {
    std::vector<Group> cols(reps_.begin(), reps_.begin() + static_cast<std::ptrdiff_t>(i + 1));
    it = truth_rows_.emplace(i, mark_row_by_fixed_cosets(ctx_.S, reps_[i], cols)).first;
  }
  for (std::size_t j = 0; j <= i; ++j)
    if (!cells_[i][j].contains(it->second[j]))
      throw InconsistencyError("soundness: cell (" + std::to_string(i) + ", " + std::to_string(j) +
                               ") lost its true value " + std::to_string(it->second[j]));
}

void CyclicExtensionEngine::init_row(std::size_t i) {
  if (initialized_[i]) return;
  const std::size_t b = blue_count();
  const std::uint64_t p = ctx_.p;
  const std::uint64_t k_order = reps_[i].order();
  const std::uint64_t diag = cells_[i][i].value();
  auto before = decided_mask(i);
  for (std::size_t j = b; j < i; ++j) {
    const std::uint64_t v_order = reps_[j].order();
    if (k_order % v_order != 0 || v_order >= k_order) {
      cells_[i][j] = MarkCell::decided(0);
      continue;
    }
    const std::uint64_t ub = cells_[i][gamma_column(j)].value();
    std::vector<std::uint64_t> values;
    for (std::uint64_t m = ub % p; m <= ub; m += p)
      if (m % diag == 0) values.push_back(m);
    if (values.empty())
      throw InconsistencyError("init_row: no candidate for cell (" + std::to_string(i) + ", " + std::to_string(j) + ")");
    cells_[i][j] = MarkCell::candidates(std::move(values));
  }
  initialized_[i] = true;
  note_decisions(i, before, Decider::bounds);
}

const std::vector<std::size_t>* CyclicExtensionEngine::completed_support(std::size_t v) {
  if (completed_.size() != size()) completed_.resize(size());
  auto& slot = completed_[v];
  if (!slot) {
    if (!row_complete(v)) return nullptr;
    std::vector<std::size_t> support;
    for (std::size_t u = 0; u < v; ++u)
      if (cells_[v][u].value() != 0) support.push_back(u);
    slot = std::move(support);
  }
  return &*slot;
}

bool CyclicExtensionEngine::subconjugate(std::size_t u, std::size_t v) const {
  if (u == v) return true;
  if (v < u) return false;
  if (!row_complete(v)) return false;
  return cells_[v][u].value() > 0;
}

bool CyclicExtensionEngine::transitivity_refine(std::size_t i) {
  if (!options_.use_transitivity) return false;
  init_row(i);
  auto before = decided_mask(i);
  const std::uint64_t k_order = reps_[i].order();
  bool changed_any = false;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < i; ++v) {
      if (cells_[i][v].upper() == 0) continue;
      const auto* below = completed_support(v);
      if (!below) continue;
      for (auto u : *below) {
        const std::uint64_t m_vu = cells_[v][u].value();
        // u ≤ v up to conjugacy: marks decrease along inclusion.
        MarkCell& cu = cells_[i][u];
        MarkCell& cv = cells_[i][v];
        std::uint64_t lo = cv.lower();
        if (cv.lower() > 0) {
          // v ≤ K: K holds at least as many conjugates of u as v does.
          const std::uint64_t index = k_order / reps_[v].order();
          lo = std::max(lo, (m_vu + index - 1) / index);
        }
        if (cu.clamp(lo, cu.upper())) changed = true;
        if (cv.clamp(cv.lower(), cu.upper())) changed = true;
      }
    }
    changed_any = changed_any || changed;
  }
  note_decisions(i, before, Decider::transitivity);
  return changed_any;
}

const SubgroupClassIndex& CyclicExtensionEngine::class_index() {
  if (!index_) index_.emplace(index_classes(ctx_.S, reps_));
  return *index_;
}

const DressRow& CyclicExtensionEngine::dress_row(std::size_t u) {
  auto it = dress_rows_.find(u);
  if (it != dress_rows_.end()) return it->second;
  DressRow row = dress_coefficients(class_index(), reps_[u], normalizers_[u]);
  if (!is_red(u)) row.blue_part_size = row.modulus / ctx_.p;
  return dress_rows_.emplace(u, std::move(row)).first->second;
}

const std::vector<std::size_t>& CyclicExtensionEngine::support_of(std::size_t u) {
  auto it = supports_.find(u);
  if (it != supports_.end()) return it->second;
  const DressRow& d = dress_row(u);
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < d.coeffs.size(); ++j)
    if (d.coeffs[j] != 0) support.push_back(j);
  return supports_.emplace(u, std::move(support)).first->second;
}

std::pair<std::vector<std::size_t>, std::vector<std::vector<std::uint64_t>>>
CyclicExtensionEngine::dress_assignments(std::size_t i, std::size_t u) {
  if (is_red(u) || !classes_.blue.in_b1[u]) throw PreconditionError("dress_assignments: U must be a B1 blue class");
  init_row(i);
  const DressRow& d = dress_row(u);
  const std::uint64_t p = ctx_.p;
  const std::uint64_t blue_size = d.blue_part_size;
  const std::size_t b = blue_count();

  std::uint64_t blue_sum = 0;
  for (auto j : support_of(u))
    if (j < b) blue_sum += d.coeffs[j] * cells_[i][j].value();
  if (blue_sum % blue_size != 0)
    throw InconsistencyError("dress: blue orbit count is not integral in row " + std::to_string(i));
  const std::uint64_t o_b = blue_sum / blue_size;

  std::uint64_t fixed = 0;
  std::vector<std::size_t> open;
  for (auto j : support_of(u)) {
    if (j < b) continue;
    if (j > i) break;
    if (cells_[i][j].is_decided())
      fixed += d.coeffs[j] * cells_[i][j].value();
    else
      open.push_back(j);
  }

  // Red sum must be |B|·o_R with o_R ≡ -o_B (mod p) and 0 ≤ o_R ≤ (p-1)·o_B.
  const std::uint64_t max_total = blue_size * (p - 1) * o_b;
  auto admissible = [&](std::uint64_t total) {
    if (total % blue_size != 0) return false;
    std::uint64_t o_r = total / blue_size;
    return o_r <= (p - 1) * o_b && (o_r + o_b) % p == 0;
  };

  std::vector<std::vector<std::uint64_t>> found;
  if (open.size() > options_.dress_cap) return {open, found};
  std::vector<std::uint64_t> current(open.size());
  std::uint64_t nodes = 0;
  bool aborted = false;
  auto dfs = [&](auto&& self, std::size_t k, std::uint64_t sum) -> void {
    if (aborted) return;
    if (++nodes > options_.dress_node_cap) {
      aborted = true;
      return;
    }
    if (k == open.size()) {
      if (admissible(sum)) found.push_back(current);
      return;
    }
    const std::uint64_t c = d.coeffs[open[k]];
    for (auto v : cells_[i][open[k]].values()) {
      std::uint64_t next = sum + c * v;
      if (next > max_total) break;
      current[k] = v;
      self(self, k + 1, next);
    }
  };
  dfs(dfs, 0, fixed);
  if (aborted) throw CapExceededError("dress: assignment search exceeded the node cap");
  return {open, found};
}

bool CyclicExtensionEngine::dress_refine(std::size_t i, std::size_t u) {
  if (!options_.use_dress) return false;
  std::pair<std::vector<std::size_t>, std::vector<std::vector<std::uint64_t>>> result;
  try {
    result = dress_assignments(i, u);
  } catch (const CapExceededError&) {
    return false;
  }
  const auto& [open, found] = result;
  if (open.size() > options_.dress_cap) return false;
  if (found.empty()) {
    if (open.empty()) throw InconsistencyError("dress: decided row " + std::to_string(i) + " violates the congruence of class " + std::to_string(u));
    throw InconsistencyError("dress: no consistent assignment in row " + std::to_string(i) + " for class " + std::to_string(u));
  }
  bool changed = false;
  for (std::size_t k = 0; k < open.size(); ++k) {
    std::vector<std::uint64_t> keep;
    for (const auto& a : found) keep.push_back(a[k]);
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (cells_[i][open[k]].retain(keep)) changed = true;
  }
  note_open(i, open, Decider::dress);
  return changed;
}

bool CyclicExtensionEngine::congruence_refine(std::size_t i, std::size_t u) {
  init_row(i);
  const DressRow& d = dress_row(u);
  std::uint64_t fixed = 0;
  std::vector<std::size_t> open;
  for (auto j : support_of(u)) {
    if (j > i) break;
    if (cells_[i][j].is_decided())
      fixed += d.coeffs[j] * cells_[i][j].value();
    else
      open.push_back(j);
  }
  if (open.empty() || open.size() > options_.dress_cap) return false;
  std::vector<std::vector<bool>> seen(open.size());
  for (std::size_t k = 0; k < open.size(); ++k) seen[k].assign(cells_[i][open[k]].values().size(), false);
  std::vector<std::size_t> pick(open.size());
  std::uint64_t nodes = 0;
  bool aborted = false;
  bool any = false;
  auto dfs = [&](auto&& self, std::size_t k, std::uint64_t sum) -> void {
    if (aborted) return;
    if (++nodes > options_.dress_node_cap) {
      aborted = true;
      return;
    }
    if (k == open.size()) {
      if (sum % d.modulus != 0) return;
      any = true;
      for (std::size_t m = 0; m < open.size(); ++m) seen[m][pick[m]] = true;
      return;
    }
    const auto& values = cells_[i][open[k]].values();
    for (std::size_t v = 0; v < values.size(); ++v) {
      pick[k] = v;
      self(self, k + 1, (sum + d.coeffs[open[k]] * values[v]) % d.modulus);
    }
  };
  dfs(dfs, 0, fixed % d.modulus);
  if (aborted) return false;
  if (!any)
    throw InconsistencyError("congruence: no consistent assignment in row " + std::to_string(i) + " for class " +
                             std::to_string(u));
  bool changed = false;
  for (std::size_t k = 0; k < open.size(); ++k) {
    std::vector<std::uint64_t> keep;
    const auto& values = cells_[i][open[k]].values();
    for (std::size_t v = 0; v < values.size(); ++v)
      if (seen[k][v]) keep.push_back(values[v]);
    if (cells_[i][open[k]].retain(keep)) changed = true;
  }
  note_open(i, open, Decider::congruence);
  return changed;
}

bool CyclicExtensionEngine::dress_refine(std::size_t i) {
  bool changed = false;
  for (std::size_t u = 0; u < blue_count(); ++u) {
    if (!classes_.blue.in_b1[u]) continue;
    if (row_complete(i)) break;
    if (reps_[i].order() % reps_[u].order() != 0) continue;
    if (dress_refine(i, u)) changed = true;
  }
  if (!options_.use_all_congruences) return changed;
  for (std::size_t u = 0; u < i; ++u) {
    if (row_complete(i)) break;
    // with U not below K every term of the congruence is 0
    if (reps_[i].order() % reps_[u].order() != 0 || cells_[i][u].upper() == 0) continue;
    if (congruence_refine(i, u)) changed = true;
  }
  return changed;
}

bool CyclicExtensionEngine::probe(std::size_t i) {
  init_row(i);
  if (options_.cyclic_columns) {
    for (std::size_t j = blue_count(); j < i; ++j) {
      if (cells_[i][j].is_decided() || reps_[j].generators().size() != 1) continue;
      const Permutation& t = reps_[j].generators().front();
      if (t.order() != reps_[j].order()) continue;
      const std::uint64_t meet = class_meet_size(ctx_.S, reps_[i], t);
      const std::uint64_t value = centralizer(ctx_.S, t).order() * meet / reps_[i].order();
      if (!cells_[i][j].contains(value))
        throw InconsistencyError("cyclic column: value " + std::to_string(value) + " is not a candidate for cell (" +
                                 std::to_string(i) + ", " + std::to_string(j) + ")");
      decide(i, j, value, Decider::element_count);
      check_truth(i);
      return true;
    }
  }
  std::optional<std::size_t> best;
  std::uint64_t best_cost = 0;
  for (std::size_t j = blue_count(); j < i; ++j) {
    if (cells_[i][j].is_decided()) continue;
    auto it = probe_elements_.find(j);
    if (it == probe_elements_.end())
      it = probe_elements_.emplace(j, probe_element(reps_[j], ctx_.A, ctx_.p)).first;
    if (!it->second) throw InconsistencyError("probe: red class has no element of p-power order outside A");
    std::uint64_t cost = class_meet_size(ctx_.S, reps_[i], *it->second);
    if (!best || cost < best_cost) {
      best = j;
      best_cost = cost;
    }
  }
  if (!best) return false;
  const std::size_t j = *best;
  if (best_cost == 0) {
    if (!cells_[i][j].contains(0))
      throw InconsistencyError("probe: cell (" + std::to_string(i) + ", " + std::to_string(j) + ") cannot be 0");
    decide(i, j, 0, Decider::empty_meet);
    check_truth(i);
    return true;
  }
  std::size_t size = 0;
  std::uint64_t value = explicit_mark(ctx_.S, reps_[i], reps_[j], *probe_elements_[j], normalizers_[i], &size);
  if (!cells_[i][j].contains(value))
    throw InconsistencyError("probe: explicit mark " + std::to_string(value) + " is not a candidate for cell (" +
                             std::to_string(i) + ", " + std::to_string(j) + ")");
  ++stats_.probes;
  stats_.max_probe = std::max<std::uint64_t>(stats_.max_probe, size);
  decide(i, j, value, Decider::probe);
  check_truth(i);
  return true;
}

void CyclicExtensionEngine::complete_row(std::size_t i) {
  init_row(i);
  while (!row_complete(i)) {
    bool changed = true;
    while (changed && !row_complete(i)) {
      changed = transitivity_refine(i);
      if (!row_complete(i) && dress_refine(i)) changed = true;
    }
    if (!row_complete(i)) probe(i);
  }
}

void CyclicExtensionEngine::run() {
  auto start = std::chrono::steady_clock::now();
  for (std::size_t i = blue_count(); i < size(); ++i) complete_row(i);
  stats_.millis += static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
}

SubgroupPattern CyclicExtensionEngine::pattern() const {
  SubgroupPattern out;
  out.group = ctx_.S;
  out.tom.classes = reps_;
  out.tom.marks = MarkMatrix(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (!row_complete(i)) throw PreconditionError("pattern: row " + std::to_string(i) + " is incomplete");
    for (std::size_t j = 0; j <= i; ++j) out.tom.marks.set(i, j, cells_[i][j].value());
  }
  out.stats = stats_;
  return out;
}

ExtensionResult extend_table_of_marks(const SubgroupPattern& pattern_a, const Group& S, EngineOptions options) {
  auto start = std::chrono::steady_clock::now();
  CyclicExtensionEngine engine(pattern_a, S, std::move(options));
  engine.run();
  ExtensionResult result{engine.pattern(), engine.classes(), engine.trace()};
  result.pattern.stats.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return result;
}

SubgroupPattern table_of_marks_by_cyclic_extension(const SubgroupPattern& pattern_a, const Group& S, EngineOptions options) {
  return extend_table_of_marks(pattern_a, S, std::move(options)).pattern;
}

SolvableResult table_of_marks_solvable_steps(const Group& G, EngineOptions options) {
  auto start = std::chrono::steady_clock::now();
  SolvableResult result;
  result.series = composition_series(G);
  result.panels.push_back(trivial_pattern(G.degree()));
  PatternStats total;
  for (std::size_t i = 1; i < result.series.terms.size(); ++i) {
    auto step = extend_table_of_marks(result.panels.back(), result.series.terms[i], options);
    total.probes += step.pattern.stats.probes;
    total.max_probe = std::max(total.max_probe, step.pattern.stats.max_probe);
    result.panels.push_back(std::move(step.pattern));
    result.steps.push_back(std::move(step.classes));
  }
  result.pattern = result.panels.back();
  total.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  result.pattern.stats = total;
  return result;
}

SubgroupPattern table_of_marks_solvable(const Group& G, EngineOptions options) {
  return table_of_marks_solvable_steps(G, std::move(options)).pattern;
}

}  // namespace marks
