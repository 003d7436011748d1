#include "marks/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

#include "marks/error.hpp"
#include "marks/group_algorithms.hpp"
#include "marks/kernels.hpp"

namespace marks {

std::uint64_t oracle_order_cap() {
  if (const char* env = std::getenv("MARKS_MAX_ORDER")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 2000;
}

std::vector<Group> LatticeDump::representatives() const {
  std::vector<Group> reps;
  for (const auto& c : classes) reps.push_back(subgroups[c.front()]);
  return reps;
}

namespace {

void check_cap(const Group& G, std::uint64_t cap) {
  if (G.order() > cap)
    throw CapExceededError("group of order " + std::to_string(G.order()) + " exceeds the oracle cap " +
                           std::to_string(cap) + " (set MARKS_MAX_ORDER to raise it)");
}

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& b) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : b) h = (h ^ w) * 0x100000001b3ULL;
    return static_cast<std::size_t>(h);
  }
};

bool test(const Bits& b, std::uint32_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }
void set(Bits& b, std::uint32_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

class Lattice {
 public:
  explicit Lattice(const Group& G) : table_(G.elements()), n_(static_cast<std::uint32_t>(table_.size())) {
    words_ = (n_ + 63) / 64;
    mult_.resize(static_cast<std::size_t>(n_) * n_);
    for_each_index(n_, [&](std::size_t i) {
      for (std::uint32_t j = 0; j < n_; ++j) mult_[i * n_ + j] = table_.at(table_[i] * table_[j]);
    });
    identity_ = table_.at(Permutation(G.degree()));
  }

  struct Sub {
    Bits bits;
    std::vector<std::uint32_t> gens;
    std::uint32_t order = 0;
  };

  Sub cyclic(std::uint32_t x) const {
    Sub s{Bits(words_, 0), {x}, 0};
    std::uint32_t cur = identity_;
    do {
      set(s.bits, cur);
      ++s.order;
      cur = mult_[static_cast<std::size_t>(cur) * n_ + x];
    } while (cur != identity_);
    return s;
  }

  // <H, x>: elements of H need only be multiplied by x, new elements by every generator.
  Sub join(const Sub& h, std::uint32_t x) const {
    Sub k{h.bits, h.gens, h.order};
    k.gens.push_back(x);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t e = 0; e < n_; ++e)
      if (test(h.bits, e)) {
        std::uint32_t y = mult_[static_cast<std::size_t>(e) * n_ + x];
        if (!test(k.bits, y)) {
          set(k.bits, y);
          queue.push_back(y);
        }
      }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint32_t e = queue[head];
      for (auto g : k.gens) {
        std::uint32_t y = mult_[static_cast<std::size_t>(e) * n_ + g];
        if (!test(k.bits, y)) {
          set(k.bits, y);
          queue.push_back(y);
        }
      }
    }
    k.order = h.order + static_cast<std::uint32_t>(queue.size());
    return k;
  }

  std::uint32_t size() const { return n_; }
  const ElementTable& table() const { return table_; }

 private:
  const ElementTable& table_;
  std::uint32_t n_;
  std::size_t words_ = 0;
  std::vector<std::uint32_t> mult_;
  std::uint32_t identity_ = 0;
};

}  // namespace

LatticeDump all_subgroups_brute(const Group& G, std::uint64_t cap) {
  check_cap(G, cap);
  Lattice lattice(G);
  const std::uint32_t n = lattice.size();
  const ElementTable& table = lattice.table();

  std::vector<Lattice::Sub> subs;
  std::unordered_map<Bits, std::size_t, BitsHash> seen;
  auto add = [&](Lattice::Sub s) -> bool {
    if (!seen.emplace(s.bits, subs.size()).second) return false;
    subs.push_back(std::move(s));
    return true;
  };

  std::vector<std::uint32_t> cyclic_gens;
  for (std::uint32_t x = 0; x < n; ++x)
    if (add(lattice.cyclic(x))) cyclic_gens.push_back(x);

  std::vector<std::size_t> frontier(subs.size());
  std::iota(frontier.begin(), frontier.end(), 0);
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (std::uint32_t x : cyclic_gens) {
        if (test(subs[idx].bits, x)) continue;
        Lattice::Sub k = lattice.join(subs[idx], x);
        if (add(std::move(k))) next.push_back(subs.size() - 1);
      }
    }
    frontier = std::move(next);
  }

  // Conjugacy classes by closing each subgroup under conjugation by the generators of G.
  const auto& maps = G.conjugation_maps();
  std::vector<std::size_t> class_of(subs.size(), ~std::size_t{0});
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t start = 0; start < subs.size(); ++start) {
    if (class_of[start] != ~std::size_t{0}) continue;
    std::size_t id = classes.size();
    classes.push_back({start});
    class_of[start] = id;
    for (std::size_t head = 0; head < classes[id].size(); ++head) {
      const Bits& bits = subs[classes[id][head]].bits;
      for (const auto& map : maps) {
        Bits image(bits.size(), 0);
        for (std::uint32_t e = 0; e < n; ++e)
          if (test(bits, e)) set(image, map[e]);
        std::size_t other = seen.at(image);
        if (class_of[other] == ~std::size_t{0}) {
          class_of[other] = id;
          classes[id].push_back(other);
        }
      }
    }
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [&](const auto& x, const auto& y) { return subs[x.front()].order < subs[y.front()].order; });

  LatticeDump dump;
  dump.group = G;
  for (const auto& s : subs) {
    std::vector<Permutation> gens;
    for (auto g : s.gens) gens.push_back(table[g]);
    dump.subgroups.emplace_back(G.degree(), gens);
  }
  dump.classes = std::move(classes);
  return dump;
}

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a;
    else parent[a] = b;
  }
  std::vector<std::uint32_t> parent;
};

std::vector<std::uint64_t> primes_below(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q < n; ++q)
    if (is_prime(q)) out.push_back(q);
  return out;
}

}  // namespace

std::vector<Group> subgroup_classes_brute(const Group& G, std::uint64_t cap) {
  check_cap(G, cap);
  const ElementTable& table = G.elements();
  const std::uint32_t n = static_cast<std::uint32_t>(table.size());
  std::vector<std::uint64_t> orders(n);
  std::uint64_t exponent_bound = 1;
  for (std::uint32_t x = 0; x < n; ++x) {
    orders[x] = table[x].order();
    exponent_bound = std::max(exponent_bound, orders[x]);
  }
  const auto primes = primes_below(exponent_bound);

  // Power maps do not depend on H.
  UnionFind powers(n);
  for (std::uint32_t x = 0; x < n; ++x)
    for (auto q : primes) {
      if (q >= orders[x]) break;
      if (orders[x] % q == 0) continue;
      powers.unite(x, table.at(table[x].pow(static_cast<std::int64_t>(q))));
    }

  SubgroupClassIndex index(G);
  index.insert(Group::trivial(G.degree()));
  for (std::size_t head = 0; head < index.size(); ++head) {
    const Group H = index.representative(head);
    const Group& N = index.normalizer(head);
    UnionFind uf = powers;
    for (std::uint32_t x = 0; x < n; ++x) {
      for (const auto& h : H.generators()) uf.unite(x, table.at(h * table[x]));
      for (const auto& s : N.generators()) uf.unite(x, table.at(table[x].conjugate_by(s)));
    }
    for (std::uint32_t x = 0; x < n; ++x) {
      if (uf.find(x) != x || H.contains(table[x])) continue;
      index.insert(H.join(table[x]));
    }
  }

  std::vector<std::size_t> order(index.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return index.representative(a).order() < index.representative(b).order();
  });
  std::vector<Group> reps;
  for (auto i : order) reps.push_back(index.representative(i));
  return reps;
}

SubgroupPattern pattern_from_classes(const Group& G, std::vector<Group> classes) {
  SubgroupPattern p;
  p.group = G;
  const std::size_t n = classes.size();
  std::vector<std::vector<std::uint64_t>> rows(n);
  for_each_index(n, [&](std::size_t i) {
    rows[i] = mark_row_by_fixed_cosets(G, classes[i], std::span<const Group>(classes.data(), i + 1));
  });
  p.tom.classes = std::move(classes);
  p.tom.marks = MarkMatrix::from_rows(rows);
  return p;
}

SubgroupPattern table_of_marks_brute(const Group& G, std::uint64_t cap) {
  auto dump = all_subgroups_brute(G, cap);
  return pattern_from_classes(G, dump.representatives());
}

}  // namespace marks
