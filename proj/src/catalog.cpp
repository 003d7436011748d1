#include "marks/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "marks/error.hpp"
#include "marks/group_algorithms.hpp"

namespace marks {
namespace {

std::string cycle(std::uint64_t first, std::uint64_t length) {
  std::string text = "(";
  for (std::uint64_t i = 0; i < length; ++i) text += (i ? "," : "") + std::to_string(first + i);
  return text + ")";
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> entries;
  entries.push_back({"trivial", 1, {}, true, std::nullopt});
  for (std::uint64_t n = 2; n <= 12; ++n) entries.push_back(cyclic_entry(n));
  entries.push_back({"S3", 3, {"(1,2)", "(1,2,3)"}, true, std::nullopt});
  entries.push_back({"D8", 4, {"(1,2,3,4)", "(1,3)"}, true, std::nullopt});
  entries.push_back({"Q8", 8, {"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"}, true, std::nullopt});
  entries.push_back({"D12", 6, {"(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"}, true, std::nullopt});
  entries.push_back({"A4", 4, {"(1,2,3)", "(2,3,4)"}, true, std::nullopt});
  entries.push_back({"S4", 4, {"(1,2)", "(1,2,3,4)"}, true, std::nullopt});
  // SL2(3) and GL2(3) on the eight nonzero vectors of GF(3)^2
  entries.push_back({"SL23", 8, {"(3,4,5)(6,8,7)", "(1,4,7)(2,8,5)"}, true, std::nullopt});
  entries.push_back({"GL23", 8, {"(3,4,5)(6,8,7)", "(1,4,7)(2,8,5)", "(3,6)(4,7)(5,8)"}, true, std::nullopt});
  entries.push_back({"A5", 5, {"(1,2,3)", "(3,4,5)"}, false, std::nullopt});
  entries.push_back({"S5", 5, {"(1,2)", "(1,2,3,4,5)"}, false, "A5"});
  entries.push_back({"A6", 6, {"(1,2,3)", "(2,3,4,5,6)"}, false, std::nullopt});
  entries.push_back({"S6", 6, {"(1,2)", "(1,2,3,4,5,6)"}, false, "A6"});
  // projective line over GF(32) = GF(2)[w]/(w^5+w^2+1): x+1, wx, 1/x, and the Frobenius x^2
  const std::vector<std::string> l232{
      "(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)(13,14)(15,16)(17,18)(19,20)(21,22)(23,24)(25,26)(27,28)(29,30)(31,32)",
      "(2,3,5,9,17,6,11,21,14,27,18,8,15,29,30,32,28,20,4,7,13,25,22,16,31,26,24,12,23,10,19)",
      "(1,33)(3,19)(4,29)(5,10)(6,24)(7,15)(8,13)(9,23)(11,26)(12,17)(14,16)(18,25)(20,30)(21,31)(22,27)(28,32)"};
  entries.push_back({"L232", 33, l232, false, std::nullopt});
  auto l232_5 = l232;
  l232_5.push_back("(3,5,17,14,28)(4,6,18,13,27)(7,21,30,23,26)(8,22,29,24,25)(9,11,15,31,20)(10,12,16,32,19)");
  entries.push_back({"L232:5", 33, l232_5, false, "L232"});
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

std::optional<CatalogEntry> find_catalog_entry(std::string_view name) {
  std::string key = lower(name);
  static const std::vector<std::pair<std::string, std::string>> aliases{
      {"gl2(3)", "gl23"}, {"sl2(3)", "sl23"}, {"l2(32)", "l232"}, {"l2(32):5", "l232:5"}, {"1", "trivial"}};
  for (const auto& [from, to] : aliases)
    if (key == from) key = to;
  for (const auto& entry : catalog())
    if (lower(entry.name) == key) return entry;
  return std::nullopt;
}

Group build_group(const CatalogEntry& entry) {
  std::vector<Permutation> gens;
  for (const auto& text : entry.generators) gens.push_back(parse_perm(text, entry.degree));
  return Group(entry.degree, gens);
}

CatalogEntry cyclic_entry(std::uint64_t n) {
  if (n < 2) return {"trivial", 1, {}, true, std::nullopt};
  return {"C" + std::to_string(n), n, {cycle(1, n)}, true, std::nullopt};
}

CatalogEntry abelian_entry(const std::vector<std::uint64_t>& factors) {
  CatalogEntry entry;
  entry.solvable_hint = true;
  std::uint64_t next = 1;
  for (auto f : factors) {
    if (f < 2) continue;
    entry.name += (entry.name.empty() ? "C" : "xC") + std::to_string(f);
    entry.generators.push_back(cycle(next, f));
    next += f;
  }
  if (entry.name.empty()) return cyclic_entry(1);
  entry.degree = next - 1;
  return entry;
}

CatalogEntry dihedral_entry(std::uint64_t n) {
  if (n < 6 || n % 2 != 0) throw PreconditionError("dihedral group order must be even and at least 6");
  const std::uint64_t m = n / 2;
  std::string reflection;
  for (std::uint64_t i = 1; i < m + 1 - i; ++i)
    reflection += "(" + std::to_string(i) + "," + std::to_string(m + 1 - i) + ")";
  return {"D" + std::to_string(n), m, {cycle(1, m), reflection}, true, std::nullopt};
}

CatalogEntry dicyclic_entry(std::uint64_t n) {
  if (n < 8 || n % 4 != 0) throw PreconditionError("dicyclic group order must be a multiple of 4 and at least 8");
  const std::uint64_t m = n / 4;
  // element a^k x^e is point 1 + k + 2m e; right multiplication by a and by x
  auto point = [&](std::uint64_t k, std::uint64_t e) { return 1 + k % (2 * m) + 2 * m * e; };
  std::vector<std::vector<std::uint64_t>> images(2, std::vector<std::uint64_t>(n + 1));
  for (std::uint64_t e = 0; e < 2; ++e)
    for (std::uint64_t k = 0; k < 2 * m; ++k) {
      // a^k x a = a^(k-1) x
      images[0][point(k, e)] = e == 0 ? point(k + 1, 0) : point(k + 2 * m - 1, 1);
      // a^k x x = a^(k+m)
      images[1][point(k, e)] = e == 0 ? point(k, 1) : point(k + m, 0);
    }
  CatalogEntry entry;
  std::uint64_t odd = m;
  while (odd % 2 == 0) odd /= 2;
  entry.name = (odd == 1 ? "Q" : "Dic") + std::to_string(n);
  entry.degree = n;
  entry.solvable_hint = true;
  for (const auto& img : images) {
    std::vector<Point> zero_based;
    for (std::uint64_t i = 1; i <= n; ++i) zero_based.push_back(static_cast<Point>(img[i] - 1));
    entry.generators.push_back(format_perm(Permutation(zero_based)));
  }
  return entry;
}

std::vector<CatalogEntry> generated_catalog(std::uint64_t max_order) {
  std::vector<CatalogEntry> entries;
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    // partitions of each prime exponent give the abelian types
    std::vector<std::vector<std::uint64_t>> types{{}};
    std::uint64_t m = n;
    for (std::uint64_t p = 2; m > 1; ++p) {
      std::uint64_t e = 0;
      while (m % p == 0) m /= p, ++e;
      if (e == 0) continue;
      std::vector<std::vector<std::uint64_t>> parts;
      std::vector<std::uint64_t> current;
      std::function<void(std::uint64_t, std::uint64_t)> rec = [&](std::uint64_t left, std::uint64_t max_part) {
        if (left == 0) {
          parts.push_back(current);
          return;
        }
        for (std::uint64_t k = std::min(left, max_part); k >= 1; --k) {
          current.push_back(k);
          rec(left - k, k);
          current.pop_back();
        }
      };
      rec(e, e);
      std::vector<std::vector<std::uint64_t>> next;
      for (const auto& t : types)
        for (const auto& part : parts) {
          auto combined = t;
          for (auto k : part) {
            std::uint64_t q = 1;
            for (std::uint64_t i = 0; i < k; ++i) q *= p;
            combined.push_back(q);
          }
          next.push_back(std::move(combined));
        }
      types = std::move(next);
    }
    for (const auto& t : types) entries.push_back(abelian_entry(t));
    if (n >= 6 && n % 2 == 0) entries.push_back(dihedral_entry(n));
    if (n >= 8 && n % 4 == 0) entries.push_back(dicyclic_entry(n));
  }
  for (const auto& entry : catalog()) {
    if (entry.solvable_hint != true) continue;
    if (build_group(entry).order() <= max_order) entries.push_back(entry);
  }
  return entries;
}

}  // namespace marks
