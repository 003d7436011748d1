#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "marks/permutation.hpp"

namespace marks {

/// Deterministic stabilizer chain built with Knuth's incremental Schreier-Sims.
/// Each new base point is the smallest point moved by the residue that needs it.
class StabilizerChain {
 public:
  explicit StabilizerChain(std::size_t degree);

  /// Adds g to the generated group; returns false when g was already a member.
  bool add(const Permutation& g);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  Point base_point(std::size_t level) const { return levels_[level].base; }
  std::span<const Point> orbit(std::size_t level) const { return levels_[level].orbit; }

  /// Throws CapExceededError if the order does not fit in 64 bits.
  std::uint64_t order() const;
  bool contains(const Permutation& g) const;

  /// Strips g through the chain starting at `from`; the residue is the identity iff g is a member.
  Permutation sift(Permutation g, std::size_t from = 0) const;

  /// Every element exactly once, identity first, as products u_{k-1} ... u_1 u_0 of transversal elements.
  std::vector<Permutation> enumerate() const;

 private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;  // point -> index into orbit/transversal, -1 outside
    std::vector<Permutation> transversal;
    std::vector<Permutation> transversal_inverse;
  };

  /// Residue and the level at which sifting stopped (depth() when it passed every level).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  void add_generator(std::size_t from, std::size_t to, Permutation g);
  void extend_level(std::size_t level, const Permutation& g);
  void process(std::size_t level, Permutation h);

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace marks
