#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "marks/table_of_marks.hpp"

namespace marks {

/// n(U, H_i) for every class H_i: the number of cosets Ua of U in N(U) with <U, a> conjugate to H_i.
struct DressRow {
  Group U;
  std::vector<std::uint64_t> coeffs;  // indexed like the class list
  std::uint64_t modulus = 1;          // |N(U) : U|
  std::uint64_t blue_part_size = 0;   // |N_A(U) : U| in an extension context, else 0
};

/// `index` must identify subgroups with the class positions (see index_classes).
DressRow dress_coefficients(const SubgroupClassIndex& index, const Group& U,
                            const std::optional<Group>& normalizer_of_U = std::nullopt);

/// Convenience form building the class index on the fly.
DressRow dress_coefficients(const Group& S, std::span<const Group> classes, const Group& U);

struct DressViolation {
  std::size_t u_class;
  std::size_t row;
  std::uint64_t residue;
  std::uint64_t modulus;
};

struct DressReport {
  bool ok = true;
  std::vector<DressViolation> violations;
  std::string describe() const;
};

/// Checks every row against the congruence of every class representative U.
DressReport verify_dress(const SubgroupPattern& pattern);
DressReport verify_dress(const MarkMatrix& marks, std::span<const DressRow> rows);

}  // namespace marks
