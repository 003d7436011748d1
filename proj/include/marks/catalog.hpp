#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "marks/group.hpp"

namespace marks {

struct CatalogEntry {
  std::string name;
  std::size_t degree = 1;
  std::vector<std::string> generators;  // cycle notation
  std::optional<bool> solvable_hint;
  /// Catalog name of a normal subgroup of prime index whose pattern feeds the extension.
  std::optional<std::string> base;
};

const std::vector<CatalogEntry>& catalog();

/// Case-insensitive lookup; also accepts the spellings "GL2(3)", "SL2(3)", "L2(32)" and "L2(32):5".
std::optional<CatalogEntry> find_catalog_entry(std::string_view name);

/// Throws ParseError if a generator does not parse at the stated degree.
Group build_group(const CatalogEntry& entry);

CatalogEntry cyclic_entry(std::uint64_t n);
/// Direct product of cyclic groups acting on disjoint points.
CatalogEntry abelian_entry(const std::vector<std::uint64_t>& factors);
/// Dihedral group of order n >= 6 acting on n/2 points.
CatalogEntry dihedral_entry(std::uint64_t n);
/// Dicyclic group of order n = 4m (quaternion when n is a power of 2) in its regular action.
CatalogEntry dicyclic_entry(std::uint64_t n);

/// Every abelian group (one per isomorphism type), dihedral and dicyclic group of order at most max_order,
/// followed by the solvable catalog entries of order at most max_order.
std::vector<CatalogEntry> generated_catalog(std::uint64_t max_order);

}  // namespace marks
