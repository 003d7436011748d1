#include <catch_amalgamated.hpp>

#include "marks/error.hpp"
#include "marks/incidence.hpp"
#include "marks/marks_engine.hpp"
#include "marks/oracle.hpp"
#include "marks/verify.hpp"
#include "support/fixtures.hpp"
#include "support/naive.hpp"

using namespace marks;

namespace {

const SubgroupPattern& a5_pattern() {
  static const SubgroupPattern p = table_of_marks_brute(fixtures::group("A5"));
  return p;
}

std::size_t find_class(const CyclicExtensionEngine& e, bool red, std::uint64_t order, bool cyclic = false) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    const Group& h = e.representative(i);
    if (e.is_red(i) != red || h.order() != order) continue;
    bool is_cyclic = false;
    for (const auto& g : h.elements().elements()) is_cyclic = is_cyclic || g.order() == order;
    if (!cyclic || is_cyclic) return i;
  }
  FAIL("class not found");
  return 0;
}

}  // namespace

TEST_CASE("marks by fixed cosets") {
  Group a5 = fixtures::group("A5");
  Group d10(5, {parse_perm("(1,2,3,4,5)", 5), parse_perm("(2,5)(3,4)", 5)});
  Group c5(5, {parse_perm("(1,2,3,4,5)", 5)});
  CHECK(mark_by_fixed_cosets(a5, d10, c5) == 1);
  CHECK(mark_by_fixed_cosets(a5, a5, c5) == 1);
  CHECK(mark_by_fixed_cosets(a5, Group::trivial(5), Group::trivial(5)) == 60);
  Group s4 = fixtures::group("S4");
  auto classes = all_subgroups_brute(s4).representatives();
  for (const auto& k : classes)
    for (const auto& h : classes) CHECK(mark_by_fixed_cosets(s4, k, h) == naive::mark(s4, k, h));
}

TEST_CASE("mark matrix storage") {
  auto m = MarkMatrix::from_rows({{2, 0}, {1, 1}});
  CHECK(m == MarkMatrix::from_rows({{2}, {1, 1}}));
  CHECK(m.at(0, 1) == 0);
  CHECK_THROWS(MarkMatrix::from_rows({{2, 1}, {1, 1}}));
  auto c = MarkCell::candidates({4, 0, 2, 2});
  CHECK(c.values() == std::vector<std::uint64_t>{0, 2, 4});
  CHECK(c.clamp(1, 4));
  CHECK(c.values() == std::vector<std::uint64_t>{2, 4});
  CHECK_THROWS_AS(c.retain({0}), InconsistencyError);
}

TEST_CASE("quarters of S5 over A5") {
  CyclicExtensionEngine e(a5_pattern(), fixtures::group("S5"));
  REQUIRE(e.blue_count() == 9);
  REQUIRE(e.size() == 19);
  // B2 is empty, so the top left quarter doubles the table of A5
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j <= i; ++j) CHECK(e.cell(i, j).value() == 2 * a5_pattern().tom.marks.at(i, j));
  const std::size_t c2 = find_class(e, true, 2);
  const std::vector<std::uint64_t> regular{60, 0, 0, 0, 0, 0, 0, 0, 0};
  for (std::size_t j = 0; j < 9; ++j) CHECK(e.cell(c2, j).value() == regular[j]);
  const std::size_t d12 = find_class(e, true, 12);
  const std::vector<std::uint64_t> s3_row{10, 2, 1, 0, 0, 1, 0, 0, 0};
  for (std::size_t j = 0; j < 9; ++j) CHECK(e.cell(d12, j).value() == s3_row[j]);
  CHECK(e.cell(d12, d12).value() == 1);
}

TEST_CASE("initial candidates") {
  CyclicExtensionEngine e(a5_pattern(), fixtures::group("S5"));
  const std::size_t d12 = find_class(e, true, 12);
  const std::size_t c4 = find_class(e, true, 4, true);
  e.init_row(d12);
  CHECK(e.cell(d12, c4).values() == std::vector<std::uint64_t>{0, 2});
  // 8 does not divide 12
  CHECK(e.cell(d12, find_class(e, true, 8)).value() == 0);
  // the only candidate of a cell with upper bound 1 and p = 2 is 1
  const std::size_t s4 = find_class(e, true, 24);
  e.init_row(s4);
  CHECK(e.cell(s4, c4).value() == 1);
}

TEST_CASE("Dress coefficients of S5") {
  Group s5 = fixtures::group("S5");
  CyclicExtensionEngine e(a5_pattern(), s5);
  std::vector<Group> classes;
  for (std::size_t i = 0; i < e.size(); ++i) classes.push_back(e.representative(i));
  auto one = dress_coefficients(s5, classes, classes[0]);
  CHECK(one.coeffs == fixtures::s5_dress_trivial);
  CHECK(one.modulus == 120);
  auto c2 = dress_coefficients(s5, classes, classes[1]);
  CHECK(c2.coeffs == fixtures::s5_dress_c2);
  CHECK(c2.modulus == 4);
  auto top = dress_coefficients(s5, classes, classes.back());
  CHECK(top.modulus == 1);
  CHECK(top.coeffs.back() == 1);
  for (const auto& u : classes) {
    auto row = dress_coefficients(s5, classes, u);
    std::uint64_t sum = 0;
    for (auto c : row.coeffs) sum += c;
    CHECK(sum == row.modulus);
  }
}

TEST_CASE("Dress verification") {
  SubgroupPattern p = table_of_marks_by_cyclic_extension(a5_pattern(), fixtures::group("S5"));
  CHECK(p.tom.marks == MarkMatrix::from_rows(fixtures::s5_marks));
  CHECK(verify_dress(p).ok);
  // 0 -> 1 in row D12, column C4 breaks the congruence of U = C2 mod 4
  auto rows = fixtures::s5_marks;
  rows[15][10] = 1;
  p.tom.marks = MarkMatrix::from_rows(rows);
  auto report = verify_dress(p);
  CHECK_FALSE(report.ok);
  bool c2_violation = false;
  for (const auto& v : report.violations) c2_violation = c2_violation || (v.u_class == 1 && v.row == 15 && v.modulus == 4);
  CHECK(c2_violation);
  CHECK(verify_dress(trivial_pattern(3)).ok);
}

TEST_CASE("Dress refinement leaves the symmetric pair for D12") {
  CyclicExtensionEngine e(a5_pattern(), fixtures::group("S5"));
  const std::size_t d12 = find_class(e, true, 12);
  const std::size_t c4 = find_class(e, true, 4, true);
  const std::size_t v4 = c4 + 1;
  REQUIRE(e.representative(v4).order() == 4);
  for (std::size_t i = e.blue_count(); i < d12; ++i) e.complete_row(i);
  e.init_row(d12);
  e.dress_refine(d12, 1);
  CHECK(e.cell(d12, c4).values() == std::vector<std::uint64_t>{0, 2});
  CHECK(e.cell(d12, v4).values() == std::vector<std::uint64_t>{0, 2});
  auto [open, found] = e.dress_assignments(d12, 1);
  REQUIRE(!found.empty());
  for (const auto& a : found) {
    std::uint64_t sum = 0;
    for (std::size_t k = 0; k < open.size(); ++k)
      if (open[k] == c4 || open[k] == v4) sum += a[k];
    CHECK(sum == 2);
  }
  e.complete_row(d12);
  CHECK(e.cell(d12, c4).value() == 0);
  CHECK(e.cell(d12, v4).value() == 2);
}

TEST_CASE("incidence probes") {
  Group s5 = fixtures::group("S5");
  Group c2(5, {parse_perm("(1,2)", 5)});
  auto x = x_set(s5, c2, parse_perm("(1,2)", 5));
  REQUIRE(x.size() == 1);
  CHECK(x.members[0].same_elements(c2));
  Group s4 = fixtures::group("S4");
  Group d8(4, {parse_perm("(1,2,3,4)", 4), parse_perm("(1,3)", 4)});
  CHECK(x_set(s4, d8, parse_perm("(1,3)", 4)).size() == 1);
  Group s4_in_s5(5, {parse_perm("(1,2)", 5), parse_perm("(1,2,3,4)", 5)});
  CHECK(x_set(s5, s4_in_s5, parse_perm("(1,2,3,4,5)", 5)).size() == 0);
  for (const auto& m : x_set(s5, s4_in_s5, parse_perm("(1,2)", 5)).members) CHECK(m.contains(parse_perm("(1,2)", 5)));

  Group d8_5(5, {parse_perm("(1,2,3,4)", 5), parse_perm("(1,3)", 5)});
  Group c4(5, {parse_perm("(1,2,3,4)", 5)});
  CHECK(explicit_mark(s5, d8_5, c4, parse_perm("(1,2,3,4)", 5)) == 1);
  Group d12(5, {parse_perm("(1,2,3)", 5), parse_perm("(1,2)", 5), parse_perm("(4,5)", 5)});
  Group v4(5, {parse_perm("(1,2)", 5), parse_perm("(4,5)", 5)});
  CHECK(explicit_mark(s5, d12, v4, parse_perm("(1,2)", 5)) == 2);
  CHECK(explicit_mark(s5, d12, Group(5, {parse_perm("(1,2,3,4,5)", 5)}), parse_perm("(1,2,3,4,5)", 5)) == 0);
}

TEST_CASE("extension statistics") {
  auto result = extend_table_of_marks(a5_pattern(), fixtures::group("S5"));
  CHECK(result.pattern.stats.probes == 0);
  CHECK(result.pattern.stats.max_probe == 0);
  auto c2 = table_of_marks_by_cyclic_extension(trivial_pattern(3), fixtures::group("C3"));
  CHECK(c2.tom.marks == MarkMatrix::from_rows({{3}, {1, 1}}));
}

TEST_CASE("solvable driver") {
  auto steps = table_of_marks_solvable_steps(fixtures::group("GL23"));
  REQUIRE(steps.panels.size() == fixtures::gl23_panels.size());
  for (std::size_t k = 0; k < steps.panels.size(); ++k)
    CHECK(steps.panels[k].tom.marks == MarkMatrix::from_rows(fixtures::gl23_panels[k]));
  Group s4 = fixtures::group("S4");
  CHECK(compare_patterns(table_of_marks_solvable(s4), table_of_marks_brute(s4)).match);
  CHECK(table_of_marks_solvable(fixtures::group("trivial")).tom.marks == MarkMatrix::from_rows({{1}}));
  CHECK_THROWS_AS(table_of_marks_solvable(fixtures::group("A5")), NotSolvableError);
}

TEST_CASE("propagation never discards the true mark") {
  EngineOptions options;
  options.check_soundness = true;
  for (const char* name : {"S4", "D12", "Q8", "SL23", "GL23", "C12"}) {
    CAPTURE(name);
    CHECK_NOTHROW(table_of_marks_solvable(fixtures::group(name), options));
  }
  CHECK_NOTHROW(table_of_marks_by_cyclic_extension(a5_pattern(), fixtures::group("S5"), options));
}

TEST_CASE("engine options do not change the table") {
  Group gl = fixtures::group("GL23");
  auto reference = table_of_marks_solvable(gl).tom.marks;
  for (int mask = 0; mask < 8; ++mask) {
    EngineOptions o;
    o.use_transitivity = mask & 1;
    o.use_dress = mask & 2;
    o.use_all_congruences = mask & 4;
    CHECK(table_of_marks_solvable(gl, o).tom.marks == reference);
  }
}

TEST_CASE("verification of emitted tables") {
  auto p = table_of_marks_by_cyclic_extension(a5_pattern(), fixtures::group("S5"));
  CHECK(verify_pattern(p).ok);
  CHECK(verify_pattern(trivial_pattern(1)).ok);
  auto rows = fixtures::s5_marks;
  rows[1][0] = 30;
  p.tom.marks = MarkMatrix::from_rows(rows);
  CHECK_FALSE(verify_pattern(p).ok);
  CHECK(verify_matrix(MarkMatrix::from_rows({{1}})).ok);
}
