#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "marks/permutation.hpp"
#include "marks/stabilizer_chain.hpp"

namespace marks {

/// Every element of a group in enumeration order with an exact index lookup.
class ElementTable {
 public:
  explicit ElementTable(std::vector<Permutation> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  std::span<const Permutation> elements() const noexcept { return elements_; }
  std::optional<std::uint32_t> index_of(const Permutation& g) const;

  /// Index of a known member; throws PreconditionError otherwise.
  std::uint32_t at(const Permutation& g) const;

 private:
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
};

/// Element conjugacy data: class id per element and a conjugator from the class representative.
struct ConjugacyData {
  std::vector<std::uint32_t> class_of;    // element index -> class id
  std::vector<std::uint32_t> class_rep;   // class id -> element index
  std::vector<std::uint64_t> class_size;  // class id -> size
  std::vector<Permutation> from_rep;      // element index e: rep^from_rep[e] = e
};

/// Immutable permutation group given by generators, with an eagerly built stabilizer chain.
/// Copies share state; lazily computed tables are built once and are safe to read concurrently.
class Group {
 public:
  /// The trivial group of degree 1.
  Group();
  Group(std::size_t degree, std::span<const Permutation> generators);
  Group(std::size_t degree, std::initializer_list<Permutation> generators);

  static Group trivial(std::size_t degree);

  std::size_t degree() const noexcept;
  /// Non-redundant generators: none of them lies in the group generated by the earlier ones.
  const std::vector<Permutation>& generators() const noexcept;
  const StabilizerChain& chain() const noexcept;

  std::uint64_t order() const noexcept;
  bool contains(const Permutation& g) const;
  bool is_trivial() const noexcept { return order() == 1; }

  /// True iff every generator of this group lies in `other`.
  bool is_subgroup_of(const Group& other) const;
  /// Same element set.
  bool same_elements(const Group& other) const;

  Group conjugate_by(const Permutation& g) const;
  /// <this, extra>.
  Group join(const Permutation& extra) const;
  Group join(const Group& other) const;

  /// Enumerated elements (built on first use). Throws CapExceededError above `element_table_limit`.
  const ElementTable& elements() const;
  const ConjugacyData& conjugacy() const;
  /// maps[k][e] = index of s^-1 * e * s for the k-th generator s.
  const std::vector<std::vector<std::uint32_t>>& conjugation_maps() const;

  static constexpr std::uint64_t element_table_limit = 4'000'000;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace marks
