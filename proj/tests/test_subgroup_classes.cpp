#include <catch_amalgamated.hpp>

#include <algorithm>

#include "marks/error.hpp"
#include "marks/oracle.hpp"
#include "marks/subgroup_classes.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace marks;

namespace {

std::vector<std::pair<std::uint64_t, std::uint64_t>> shapes(const Group& g, std::span<const Group> classes) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& h : classes) out.emplace_back(h.order(), g.order() / normalizer(g, h).order());
  std::sort(out.begin(), out.end());
  return out;
}

ExtensionContext context(const char* s, const char* a) {
  return make_extension_context(fixtures::group(s), fixtures::group(a));
}

}  // namespace

TEST_CASE("extension context validation") {
  CHECK(context("S5", "A5").p == 2);
  CHECK_FALSE(context("S5", "A5").A.contains(context("S5", "A5").t));
  CHECK_THROWS_AS(make_extension_context(fixtures::group("S5"), fixtures::group("S5")), PreconditionError);
  // A4 in S5 is not normal
  Group s5 = fixtures::group("S5");
  CHECK_THROWS_AS(make_extension_context(s5, Group(5, {parse_perm("(1,2,3)", 5), parse_perm("(2,3,4)", 5)})),
                  PreconditionError);
}

TEST_CASE("every blue class either keeps its class or fuses p classes") {
  for (auto [s, a] : {std::pair{"S4", "A4"}, std::pair{"S5", "A5"}, std::pair{"GL23", "SL23"}}) {
    CAPTURE(s);
    auto ctx = context(s, a);
    for (const auto& h : all_subgroups_brute(ctx.A).representatives()) {
      const std::uint64_t n_s = normalizer(ctx.S, h).order(), n_a = normalizer(ctx.A, h).order();
      const std::uint64_t len_s = ctx.S.order() / n_s, len_a = ctx.A.order() / n_a;
      CHECK(((n_s == ctx.p * n_a) != (len_s == ctx.p * len_a)));
    }
  }
}

TEST_CASE("fused classes are conjugate in S but not in A") {
  auto ctx = context("GL23", "SL23");
  auto a_classes = all_subgroup_classes_solvable(ctx.A);
  auto blue = classify_blue(a_classes, ctx);
  CHECK(blue.b2_fused.size() * ctx.p == blue.b2_raw_count);
  for (std::size_t i = 0; i < blue.blue.size(); ++i) {
    if (blue.in_b1[i]) continue;
    REQUIRE(blue.fused[i].size() == ctx.p);
    const Group& first = a_classes[blue.fused[i][0]];
    for (std::size_t k = 1; k < blue.fused[i].size(); ++k) {
      const Group& other = a_classes[blue.fused[i][k]];
      CHECK(are_conjugate_subgroups(ctx.S, first, other).has_value());
      CHECK_FALSE(are_conjugate_subgroups(ctx.A, first, other).has_value());
    }
  }
}

TEST_CASE("transversals T_H") {
  auto s5 = context("S5", "A5");
  auto t = transversal_T_H(s5, Group::trivial(5));
  REQUIRE(t.size() == 1);
  CHECK(t[0].order() == 2);
  CHECK(transversal_T_H(s5, s5.A).size() == 1);
  auto s4 = context("S4", "A4");
  CHECK(transversal_T_H(s4, Group(4, {parse_perm("(1,2)(3,4)", 4)})).size() == 2);
}

TEST_CASE("red classes") {
  auto s5 = context("S5", "A5");
  auto reds = red_subgroups(all_subgroups_brute(s5.A).representatives(), s5);
  std::vector<std::uint64_t> orders;
  for (const auto& r : reds) orders.push_back(r.K.order());
  CHECK(orders == std::vector<std::uint64_t>{2, 4, 4, 6, 6, 8, 12, 20, 24, 120});
  for (const auto& r : reds) {
    CHECK(r.K.order() == r.H.order() * s5.p);
    CHECK(r.H.is_subgroup_of(s5.A));
    CHECK(r.H.is_subgroup_of(r.K));
    CHECK(r.K.contains(r.t_rep));
    CHECK_FALSE(s5.A.contains(r.t_rep));
  }
  auto s4 = context("S4", "A4");
  CHECK(red_subgroups(all_subgroup_classes_solvable(s4.A), s4).size() == 6);
  Group c2 = fixtures::group("C2");
  auto ctx = make_extension_context(c2, Group::trivial(2));
  auto c2_reds = red_subgroups(std::vector<Group>{Group::trivial(2)}, ctx);
  REQUIRE(c2_reds.size() == 1);
  CHECK(c2_reds[0].K.same_elements(c2));
}

TEST_CASE("class counts by cyclic extension") {
  auto s5 = context("S5", "A5");
  CHECK(subgroups_by_cyclic_extension(all_subgroups_brute(s5.A).representatives(), s5).size() == 19);
  CHECK(all_subgroup_classes_solvable(fixtures::group("S4")).size() == 11);
  CHECK(all_subgroup_classes_solvable(fixtures::group("GL23")).size() == 16);
  CHECK(all_subgroup_classes_solvable(fixtures::group("trivial")).size() == 1);
  CHECK_THROWS_AS(all_subgroup_classes_solvable(fixtures::group("A5")), NotSolvableError);
}

TEST_CASE("blue and red classes are never conjugate") {
  auto s5 = context("S5", "A5");
  auto ext = extend_subgroup_classes(all_subgroups_brute(s5.A).representatives(), s5);
  for (const auto& b : ext.blue.blue)
    for (const auto& r : ext.red)
      if (b.order() == r.K.order()) CHECK_FALSE(are_conjugate_subgroups(s5.S, b, r.K).has_value());
}

TEST_CASE("solvable classes agree with explicit enumeration") {
  for (const auto& entry : generated_catalog(24)) {
    Group g = build_group(entry);
    CAPTURE(entry.name);
    auto classes = all_subgroup_classes_solvable(g);
    CHECK(shapes(g, classes) == naive::class_shapes(g));
  }
}
