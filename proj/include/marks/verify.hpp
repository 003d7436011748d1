#pragma once

#include <string>
#include <utility>
#include <vector>

#include "marks/dress.hpp"
#include "marks/table_of_marks.hpp"

namespace marks {

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> failures;

  void fail(std::string message) {
    ok = false;
    failures.push_back(std::move(message));
  }
};

/// A pair (U, V) of class indices with U normal of prime index q in V.
struct ColumnPair {
  std::size_t u;
  std::size_t v;
  std::uint64_t q;
};

/// For each class V and each prime q, one normal subgroup of index q in V (when it exists), located among the classes.
std::vector<ColumnPair> normal_prime_index_pairs(const Group& G, std::span<const Group> classes);

/// Triangularity, diagonal = normalizer index, first column = group index, last row of ones,
/// row divisibility by the diagonal, Dress congruences and column congruences.
VerifyReport verify_pattern(const SubgroupPattern& pattern, std::span<const ColumnPair> extra_pairs = {});

/// Checks that need only the matrix: last row, row divisibility by the diagonal, first entry = |G|.
VerifyReport verify_matrix(const MarkMatrix& marks);

}  // namespace marks
