#include "marks/subgroup_classes.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "marks/coset_space.hpp"
#include "marks/error.hpp"

namespace marks {

namespace {

bool inside(const Group& g, const Group& a) {
  return std::all_of(g.generators().begin(), g.generators().end(), [&](const auto& x) { return a.contains(x); });
}

// r^m where |r| = p^a * m with p not dividing m.
Permutation p_part(const Permutation& r, std::uint64_t p) {
  std::uint64_t m = r.order();
  while (m % p == 0) m /= p;
  return r.pow(static_cast<std::int64_t>(m));
}

}  // namespace

ExtensionContext make_extension_context(const Group& S, const Group& A) {
  if (!A.is_subgroup_of(S)) throw PreconditionError("extension: A is not a subgroup of S");
  if (S.order() % A.order() != 0) throw InconsistencyError("extension: |A| does not divide |S|");
  std::uint64_t p = S.order() / A.order();
  if (!is_prime(p)) throw PreconditionError("extension: index " + std::to_string(p) + " is not prime");
  if (!is_normal(S, A)) throw PreconditionError("extension: A is not normal in S");
  for (const auto& g : S.generators())
    if (!A.contains(g)) return {S, A, p, g};
  throw InconsistencyError("extension: no generator of S lies outside A");
}

BlueClassification classify_blue(std::span<const Group> a_classes, const ExtensionContext& ctx) {
  const std::size_t n = a_classes.size();
  for (const auto& h : a_classes)
    if (!h.is_subgroup_of(ctx.A)) throw PreconditionError("classify_blue: class representative is not inside A");

  std::vector<std::vector<std::size_t>> fused;
  std::vector<bool> in_b1;
  std::vector<Group> normalizers;
  std::vector<std::size_t> a_to_group(n, n);
  BlueClassification out;
  for (std::size_t i = 0; i < n; ++i) {
    if (a_to_group[i] != n) continue;
    const Group& h = a_classes[i];
    Group norm = normalizer(ctx.S, h);
    const std::size_t id = fused.size();
    a_to_group[i] = id;
    if (!inside(norm, ctx.A)) {
      fused.push_back({i});
      in_b1.push_back(true);
      out.b1.push_back(h);
    } else {
      std::vector<std::size_t> members{i};
      Permutation tj = ctx.t;
      for (std::uint64_t j = 1; j < ctx.p; ++j, tj *= ctx.t) {
        Group conj = h.conjugate_by(tj);
        bool found = false;
        for (std::size_t k = i + 1; k < n && !found; ++k) {
          if (a_to_group[k] != n || a_classes[k].order() != h.order()) continue;
          if (are_conjugate_subgroups(ctx.A, a_classes[k], conj)) {
            a_to_group[k] = id;
            members.push_back(k);
            found = true;
          }
        }
        if (!found) throw InconsistencyError("classify_blue: fused A-class not found among the representatives");
      }
      out.b2_raw_count += members.size();
      fused.push_back(std::move(members));
      in_b1.push_back(false);
      out.b2_fused.push_back(h);
    }
    normalizers.push_back(std::move(norm));
  }

  std::vector<std::size_t> order(fused.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a_classes[fused[x][0]].order() < a_classes[fused[y][0]].order();
  });
  out.a_to_blue.assign(n, 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    std::size_t g = order[pos];
    out.blue.push_back(a_classes[fused[g][0]]);
    out.in_b1.push_back(in_b1[g]);
    out.normalizers.push_back(normalizers[g]);
    for (auto a : fused[g]) out.a_to_blue[a] = pos;
    out.fused.push_back(fused[g]);
  }
  return out;
}

std::vector<Permutation> transversal_T_H(const ExtensionContext& ctx, const Group& H) {
  if (!H.is_subgroup_of(ctx.A)) throw PreconditionError("transversal_T_H: H is not inside A");
  return transversal_T_H(ctx, H, normalizer(ctx.S, H));
}

std::vector<Permutation> transversal_T_H(const ExtensionContext& ctx, const Group& H, const Group& N) {
  if (!H.is_subgroup_of(ctx.A)) throw PreconditionError("transversal_T_H: H is not inside A");
  if (inside(N, ctx.A)) return {};
  const std::uint64_t p = ctx.p;
  CosetSpace cosets(N, H);
  const std::size_t w = cosets.size();

  // Order-p subgroups of W = N/H outside N_A(H)/H, keyed by their sorted coset ids.
  std::vector<std::vector<std::uint32_t>> subgroups;
  std::vector<std::uint32_t> subgroup_of(w, ~0u);
  for (std::uint32_t c = 0; c < w; ++c) {
    if (subgroup_of[c] != ~0u) continue;
    const Permutation& r = cosets.rep(c);
    if (ctx.A.contains(r)) continue;
    if (!H.contains(r.pow(static_cast<std::int64_t>(p)))) continue;
    std::vector<std::uint32_t> key;
    Permutation power(r.degree());
    for (std::uint64_t i = 0; i < p; ++i, power *= r) key.push_back(cosets.coset_of(power));
    std::sort(key.begin(), key.end());
    auto id = static_cast<std::uint32_t>(subgroups.size());
    for (auto k : key)
      if (k != 0) subgroup_of[k] = id;
    subgroups.push_back(std::move(key));
  }
  if (subgroups.empty()) return {};

  std::vector<std::vector<std::uint32_t>> action;
  for (const auto& s : N.generators()) {
    std::vector<std::uint32_t> map(w);
    for (std::uint32_t c = 0; c < w; ++c) map[c] = cosets.coset_of(cosets.rep(c).conjugate_by(s));
    action.push_back(std::move(map));
  }

  std::vector<Permutation> result;
  std::vector<bool> seen(subgroups.size(), false);
  for (std::size_t start = 0; start < subgroups.size(); ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    std::vector<std::size_t> queue{start};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      // Any nontrivial coset of the subgroup determines it.
      std::uint32_t c = subgroups[queue[head]][1];
      for (const auto& map : action) {
        std::uint32_t next = subgroup_of[map[c]];
        if (!seen[next]) {
          seen[next] = true;
          queue.push_back(next);
        }
      }
    }
    result.push_back(p_part(cosets.rep(subgroups[start][1]), p));
  }
  return result;
}

std::vector<RedClassInfo> red_subgroups(const BlueClassification& blue, const ExtensionContext& ctx) {
  std::vector<RedClassInfo> reds;
  for (std::size_t i = 0; i < blue.blue.size(); ++i) {
    if (!blue.in_b1[i]) continue;
    const Group& h = blue.blue[i];
    for (auto& t : transversal_T_H(ctx, h, blue.normalizers[i])) reds.push_back({h.join(t), h, i, t});
  }
  std::stable_sort(reds.begin(), reds.end(), [](const auto& x, const auto& y) { return x.K.order() < y.K.order(); });
  return reds;
}

std::vector<RedClassInfo> red_subgroups(std::span<const Group> a_classes, const ExtensionContext& ctx) {
  return red_subgroups(classify_blue(a_classes, ctx), ctx);
}

std::vector<Group> ExtensionClasses::representatives() const {
  std::vector<Group> out(blue.blue.begin(), blue.blue.end());
  for (const auto& r : red) out.push_back(r.K);
  return out;
}

ExtensionClasses extend_subgroup_classes(std::span<const Group> a_classes, const ExtensionContext& ctx) {
  ExtensionClasses out;
  out.blue = classify_blue(a_classes, ctx);
  out.red = red_subgroups(out.blue, ctx);
  return out;
}

std::vector<Group> subgroups_by_cyclic_extension(std::span<const Group> a_classes, const ExtensionContext& ctx) {
  return extend_subgroup_classes(a_classes, ctx).representatives();
}

std::vector<Group> all_subgroup_classes_solvable(const Group& G) {
  SeriesChain series = composition_series(G);
  std::vector<Group> classes{series.terms.front()};
  for (std::size_t i = 1; i < series.terms.size(); ++i) {
    auto ctx = make_extension_context(series.terms[i], series.terms[i - 1]);
    classes = subgroups_by_cyclic_extension(classes, ctx);
  }
  return classes;
}

}  // namespace marks
