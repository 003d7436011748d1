#include <catch_amalgamated.hpp>

#include <cstdlib>

#include "marks/error.hpp"
#include "marks/oracle.hpp"
#include "marks/verify.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace marks;

TEST_CASE("subgroup lattices by join closure") {
  Group s4 = fixtures::group("S4");
  auto dump = all_subgroups_brute(s4);
  CHECK(dump.subgroups.size() == naive::all_subgroups(s4).size());
  CHECK(dump.subgroups.size() == 30);
  CHECK(dump.classes.size() == 11);
  CHECK(all_subgroups_brute(fixtures::group("C6")).subgroups.size() == 4);
  auto a5 = all_subgroups_brute(fixtures::group("A5"));
  CHECK(a5.subgroups.size() == 59);
  CHECK(a5.classes.size() == 9);
}

TEST_CASE("class equation and closure") {
  for (const char* name : {"S4", "GL23", "A5", "D12"}) {
    CAPTURE(name);
    Group g = fixtures::group(name);
    auto dump = all_subgroups_brute(g);
    std::size_t total = 0;
    for (const auto& cls : dump.classes) {
      total += cls.size();
      CHECK(cls.size() * normalizer(g, dump.subgroups[cls[0]]).order() == g.order());
    }
    CHECK(total == dump.subgroups.size());
  }
  Group s4 = fixtures::group("S4");
  auto dump = all_subgroups_brute(s4);
  for (const auto& h : dump.subgroups)
    for (const auto& x : s4.elements().elements()) {
      Group joined = h.join(x);
      bool known = false;
      for (const auto& k : dump.subgroups) known = known || k.same_elements(joined);
      CHECK(known);
    }
}

TEST_CASE("classes are sorted by order") {
  auto reps = all_subgroups_brute(fixtures::group("S5")).representatives();
  for (std::size_t i = 1; i < reps.size(); ++i) CHECK(reps[i - 1].order() <= reps[i].order());
}

TEST_CASE("class-level closure agrees with the full lattice") {
  for (const char* name : {"S4", "GL23", "A5", "S5", "Q8", "A6"}) {
    CAPTURE(name);
    Group g = fixtures::group(name);
    auto full = pattern_from_classes(g, all_subgroups_brute(g).representatives());
    auto classes = pattern_from_classes(g, subgroup_classes_brute(g));
    CHECK(compare_patterns(full, classes).match);
  }
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(all_subgroups_brute(fixtures::group("S6"), 100), CapExceededError);
  ::setenv("MARKS_MAX_ORDER", "50", 1);
  CHECK(oracle_order_cap() == 50);
  ::unsetenv("MARKS_MAX_ORDER");
  CHECK(oracle_order_cap() == 2000);
}

TEST_CASE("oracle tables") {
  CHECK(table_of_marks_brute(fixtures::group("A5")).tom.marks == MarkMatrix::from_rows(fixtures::a5_marks));
  CHECK(table_of_marks_brute(fixtures::group("trivial")).tom.marks == MarkMatrix::from_rows({{1}}));
  for (const char* name : {"S4", "GL23", "S5", "A5"}) {
    CAPTURE(name);
    auto report = verify_pattern(table_of_marks_brute(fixtures::group(name)));
    CHECK(report.ok);
  }
}

TEST_CASE("pattern comparison") {
  auto s5 = table_of_marks_brute(fixtures::group("S5"));
  auto self = compare_patterns(s5, s5);
  REQUIRE(self.match);
  for (std::size_t i = 0; i < self.perm.size(); ++i) CHECK(self.perm[i] == i);
  auto published = MarkMatrix::from_rows(fixtures::s5_marks);
  auto m = compare_mark_tables(published, s5.tom.marks);
  REQUIRE(m.match);
  CHECK(s5.tom.marks.permuted(m.perm) == published);
  // D8 and C2 x C4 both have eight classes of subgroups
  auto d8 = table_of_marks_brute(fixtures::group("D8"));
  auto c2c4 = table_of_marks_brute(build_group(abelian_entry({2, 4})));
  REQUIRE(d8.size() == c2c4.size());
  auto mismatch = compare_patterns(d8, c2c4);
  CHECK_FALSE(mismatch.match);
  CHECK_FALSE(mismatch.reason.empty());
}
