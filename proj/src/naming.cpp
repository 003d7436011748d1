#include "marks/naming.hpp"

#include <algorithm>
#include <map>
#include <vector>

#include "marks/group_algorithms.hpp"

namespace marks {
namespace {

using Profile = std::map<std::uint64_t, std::uint64_t>;

std::uint64_t count_orders(const Profile& profile, std::uint64_t order) {
  auto it = profile.find(order);
  return it == profile.end() ? 0 : it->second;
}

// Primary cyclic factors of an abelian group, read off from the number of
// elements of order dividing p^k for each k.
std::vector<std::uint64_t> abelian_invariants(std::uint64_t n, const Profile& profile) {
  std::vector<std::uint64_t> factors;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; m > 1; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    // exps[k] = log_p #{x : x^(p^k) = 1}
    std::vector<std::uint64_t> exps{0};
    for (std::uint64_t q = p;; q *= p) {
      std::uint64_t count = 0;
      for (const auto& [order, c] : profile)
        if (q % order == 0) count += c;
      std::uint64_t e = 0;
      while (count > 1) count /= p, ++e;
      exps.push_back(e);
      if (e == exps[exps.size() - 2]) break;
    }
    // number of factors of order >= p^k is exps[k] - exps[k-1]
    for (std::size_t k = 1; k + 1 < exps.size(); ++k) {
      std::uint64_t at_least_k = exps[k] - exps[k - 1];
      std::uint64_t at_least_next = exps[k + 1] - exps[k];
      std::uint64_t pk = 1;
      for (std::size_t i = 0; i < k; ++i) pk *= p;
      for (std::uint64_t i = at_least_next; i < at_least_k; ++i) factors.push_back(pk);
    }
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

std::string abelian_label(std::uint64_t n, const Profile& profile) {
  if (count_orders(profile, n) > 0) return "C" + std::to_string(n);
  auto factors = abelian_invariants(n, profile);
  if (std::all_of(factors.begin(), factors.end(), [&](auto f) { return f == factors.front(); }) &&
      is_prime(factors.front()))
    return std::to_string(factors.front()) + "^" + std::to_string(factors.size());
  std::string label;
  for (auto f : factors) label += (label.empty() ? "C" : "xC") + std::to_string(f);
  return label;
}

struct Shape {
  std::uint64_t order;
  Profile profile;
  const char* name;
};

const std::vector<Shape>& known_shapes() {
  static const std::vector<Shape> shapes{
      {12, {{1, 1}, {2, 3}, {3, 8}}, "A4"},
      {20, {{1, 1}, {2, 5}, {4, 10}, {5, 4}}, "5:4"},
      {21, {{1, 1}, {3, 14}, {7, 6}}, "7:3"},
      {24, {{1, 1}, {2, 9}, {3, 8}, {4, 6}}, "S4"},
      {24, {{1, 1}, {2, 1}, {3, 8}, {4, 6}, {6, 8}}, "SL2(3)"},
      {16, {{1, 1}, {2, 5}, {4, 6}, {8, 4}}, "SD16"},
      {36, {{1, 1}, {2, 9}, {3, 8}, {4, 18}}, "3^2:4"},
      {48, {{1, 1}, {2, 13}, {3, 8}, {4, 6}, {6, 8}, {8, 12}}, "GL2(3)"},
      {60, {{1, 1}, {2, 15}, {3, 20}, {5, 24}}, "A5"},
      {120, {{1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}}, "S5"},
      {360, {{1, 1}, {2, 45}, {3, 80}, {4, 90}, {5, 144}}, "A6"},
      {720, {{1, 1}, {2, 75}, {3, 80}, {4, 180}, {5, 144}, {6, 240}}, "S6"},
  };
  return shapes;
}

}  // namespace

std::string subgroup_label(const Group& h) {
  const std::uint64_t n = h.order();
  if (n == 1) return "1";
  const Profile profile = element_order_profile(h);
  if (is_abelian(h)) return abelian_label(n, profile);
  for (const auto& shape : known_shapes())
    if (shape.order == n && shape.profile == profile) return shape.name;
  const std::uint64_t involutions = count_orders(profile, 2);
  if (n % 2 == 0 && count_orders(profile, n / 2) > 0) {
    // cyclic subgroup of index 2 with every element outside it an involution
    if (involutions >= n / 2) return n == 6 ? "S3" : "D" + std::to_string(n);
    if (involutions == 1 && n % 4 == 0) {
      std::uint64_t m = n;
      while (m % 2 == 0) m /= 2;
      return (m == 1 ? "Q" : "Dic") + std::to_string(n);
    }
  }
  return "[" + std::to_string(n) + "]";
}

}  // namespace marks
