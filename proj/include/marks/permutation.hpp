#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace marks {

/// Points are 0-based inside the library; cycle notation is 1-based.
using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1} acting on the right: x.(gh) = (x.g).h.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Takes ownership of 0-based images; throws PreconditionError unless bijective.
  explicit Permutation(std::vector<Point> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  /// Images as 1-based points, the form used by cycle notation.
  std::vector<Point> one_based_images() const;

  bool is_identity() const noexcept;
  std::optional<Point> first_moved_point() const noexcept;
  std::size_t fixed_point_count() const noexcept;

  /// Left-to-right product: apply *this first, then rhs.
  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);

  Permutation inverse() const;
  Permutation pow(std::int64_t exponent) const;

  /// g^-1 * this * g.
  Permutation conjugate_by(const Permutation& g) const;

  /// Element order, the lcm of the cycle lengths.
  std::uint64_t order() const;

  std::size_t hash() const noexcept;

  bool operator==(const Permutation& other) const = default;
  std::strong_ordering operator<=>(const Permutation& other) const = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& g) const noexcept { return g.hash(); }
};

Permutation compose(const Permutation& g, const Permutation& h);
Permutation inverse(const Permutation& g);
Point act(Point x, const Permutation& g);

/// Parses "(1,2,3)(4,5)"; "" and "()" are the identity. Whitespace is ignored.
Permutation parse_perm(std::string_view text, std::size_t degree);

/// Disjoint-cycle notation with 1-based points; identity prints as "()".
std::string format_perm(const Permutation& g);

}  // namespace marks
