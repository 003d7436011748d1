// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "marks/catalog.hpp"
#include "marks/marks_engine.hpp"
#include "marks/oracle.hpp"
#include "marks/verify.hpp"
#include "support/fixtures.hpp"

using namespace marks;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

bool report(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  std::cout << "criterion " << number << ": " << (o.pass ? "PASS" : "FAIL") << " - " << title << " -"
            << o.detail.str() << std::endl;
  return o.pass;
}

std::size_t find_red(const CyclicExtensionEngine& e, std::uint64_t order, bool cyclic) {
  for (std::size_t i = e.blue_count(); i < e.size(); ++i) {
    const Group& h = e.representative(i);
    if (h.order() != order) continue;
    bool has_generator = false;
    for (const auto& g : h.elements().elements()) has_generator = has_generator || g.order() == order;
    if (has_generator == cyclic) return i;
  }
  throw std::runtime_error("red class not found");
}

}  // namespace

int main() {
  bool all = true;
  const Group a5 = fixtures::group("A5");
  const Group s5 = fixtures::group("S5");

  all &= report(1, "oracle table of marks of A5", [&](Outcome& o) {
    auto start = Clock::now();
    auto p = table_of_marks_brute(a5);
    double t = seconds_since(start);
    o.require(p.tom.marks == MarkMatrix::from_rows(fixtures::a5_marks), "9x9 table differs from the published one");
    o.require(t < 5, "runtime >= 5 s");
    o.detail << " exact 9x9 match, " << t << " s";
  });

  all &= report(2, "extension A5 -> S5", [&](Outcome& o) {
    auto base = table_of_marks_brute(a5);
    auto start = Clock::now();
    auto p = table_of_marks_by_cyclic_extension(base, s5);
    double t = seconds_since(start);
    auto m = compare_mark_tables(MarkMatrix::from_rows(fixtures::s5_marks), p.tom.marks);
    o.require(m.match, "table differs from the published 19x19 table: " + m.reason);
    o.require(compare_patterns(p, table_of_marks_brute(s5)).match, "differs from the oracle pattern");
    o.require(p.stats.probes == 0, "probe count is not 0");
    o.require(t < 10, "runtime >= 10 s");
    o.detail << " 19 classes, probes " << p.stats.probes << ", " << t << " s";
  });

  all &= report(3, "solvable driver on GL2(3)", [&](Outcome& o) {
    auto start = Clock::now();
    auto steps = table_of_marks_solvable_steps(fixtures::group("GL23"));
    double t = seconds_since(start);
    o.require(steps.series.indices == std::vector<std::uint64_t>{2, 2, 2, 3, 2}, "series indices are not 2,2,2,3,2");
    o.require(steps.panels.size() == fixtures::gl23_panels.size(), "wrong number of panels");
    std::size_t matched = 0;
    for (std::size_t k = 0; k < std::min(steps.panels.size(), fixtures::gl23_panels.size()); ++k)
      if (steps.panels[k].tom.marks == MarkMatrix::from_rows(fixtures::gl23_panels[k])) ++matched;
    o.require(matched == fixtures::gl23_panels.size(), "a panel differs");
    o.require(t < 10, "runtime >= 10 s");
    o.detail << " " << matched << "/6 panels exact, " << t << " s";
  });

  all &= report(4, "class counts S4, L2(32), L2(32):5, A6, S6", [&](Outcome& o) {
    auto s4 = all_subgroup_classes_solvable(fixtures::group("S4")).size();
    o.require(s4 == 11, "S4");
    Group l = fixtures::group("L232");
    auto start = Clock::now();
    auto l_pattern = pattern_from_classes(l, subgroup_classes_brute(l, l.order()));
    auto l5 = table_of_marks_by_cyclic_extension(l_pattern, fixtures::group("L232:5"));
    double t_l = seconds_since(start);
    o.require(l_pattern.size() == 24, "L2(32)");
    o.require(l5.size() == 30, "L2(32):5");
    o.require(verify_pattern(l5).ok, "L2(32):5 table fails verification");
    Group a6 = fixtures::group("A6");
    Group s6 = fixtures::group("S6");
    start = Clock::now();
    auto a6_pattern = table_of_marks_brute(a6);
    auto s6_pattern = table_of_marks_by_cyclic_extension(a6_pattern, s6);
    double t_s6 = seconds_since(start);
    o.require(a6_pattern.size() == 22, "A6");
    o.require(s6_pattern.size() == 56, "S6");
    o.require(compare_patterns(s6_pattern, table_of_marks_brute(s6, 720)).match, "S6 table differs from the oracle");
    o.require(s6_pattern.stats.probes == 2 && s6_pattern.stats.max_probe == 4, "S6 probe statistics are not 2 / 4");
    o.require(t_s6 < 300, "S6 runtime >= 5 min");
    o.detail << " S4 " << s4 << ", L2(32) " << l_pattern.size() << ", L2(32):5 " << l5.size() << " (" << t_l
             << " s), A6 " << a6_pattern.size() << ", S6 " << s6_pattern.size() << " with probes "
             << s6_pattern.stats.probes << " max " << s6_pattern.stats.max_probe << " (" << t_s6 << " s)";
  });

  all &= report(5, "Dress worked example, row S5/D12", [&](Outcome& o) {
    CyclicExtensionEngine e(table_of_marks_brute(a5), s5);
    const std::size_t d12 = find_red(e, 12, false);
    const std::size_t c4 = find_red(e, 4, true);
    const std::size_t v4 = find_red(e, 4, false);
    const std::size_t c2 = 1;
    o.require(e.representative(c2).order() == 2 && !e.is_red(c2), "column 1 is not the blue C2");
    for (std::size_t i = e.blue_count(); i < d12; ++i) e.complete_row(i);
    e.init_row(d12);
    e.dress_refine(d12, c2);
    o.require(e.cell(d12, c4).values() == std::vector<std::uint64_t>{0, 2}, "C4 candidates are not {0,2}");
    o.require(e.cell(d12, v4).values() == std::vector<std::uint64_t>{0, 2}, "2^2 candidates are not {0,2}");
    auto [open, found] = e.dress_assignments(d12, c2);
    bool sums = !found.empty();
    for (const auto& a : found) {
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < open.size(); ++k)
        if (open[k] == c4 || open[k] == v4) s += a[k];
      sums = sums && s == 2;
    }
    o.require(sums, "some consistent assignment has y11 + y12 != 2");
    e.complete_row(d12);
    o.require(e.cell(d12, c4).value() == 0 && e.cell(d12, v4).value() == 2, "final values are not (0, 2)");
    o.detail << " candidates {0,2} x {0,2}, " << found.size() << " assignments all with y11+y12=2, final (0,2)";
  });

  all &= report(6, "property suite over solvable groups of order <= 100", [&](Outcome& o) {
    auto start = Clock::now();
    std::size_t groups = 0, failures = 0;
    for (const auto& entry : generated_catalog(100)) {
      Group g = build_group(entry);
      auto steps = table_of_marks_solvable_steps(g);
      const auto& pattern = steps.pattern;
      std::vector<ColumnPair> pairs;
      if (!steps.steps.empty()) {
        const auto& last = steps.steps.back();
        const std::size_t b = last.blue.blue.size();
        const std::uint64_t p = steps.series.indices.back();
        for (std::size_t r = 0; r < last.red.size(); ++r) pairs.push_back({last.red[r].h_blue, b + r, p});
      }
      auto report = verify_pattern(pattern, pairs);
      auto oracle = table_of_marks_brute(g, std::max<std::uint64_t>(oracle_order_cap(), g.order()));
      auto match = compare_patterns(pattern, oracle);
      ++groups;
      if (!report.ok || !match.match) {
        ++failures;
        o.detail << " " << entry.name << (report.ok ? "" : " (verify: " + report.failures[0] + ")")
                 << (match.match ? "" : " (oracle: " + match.reason + ")");
      }
    }
    double t = seconds_since(start);
    o.require(failures == 0, std::to_string(failures) + " groups failed");
    o.require(t < 600, "suite runtime >= 10 min");
    o.detail << " " << groups << " groups, " << failures << " failures, " << t << " s";
  });

  all &= report(7, "Dress coefficients of S5 for U = 1 and U = C2", [&](Outcome& o) {
    CyclicExtensionEngine e(table_of_marks_brute(a5), s5);
    std::vector<Group> classes;
    for (std::size_t i = 0; i < e.size(); ++i) classes.push_back(e.representative(i));
    auto one = dress_coefficients(s5, classes, classes[0]);
    auto c2 = dress_coefficients(s5, classes, classes[1]);
    o.require(one.coeffs == fixtures::s5_dress_trivial && one.modulus == 120, "row U = 1");
    o.require(c2.coeffs == fixtures::s5_dress_c2 && c2.modulus == 4, "row U = C2");
    o.detail << " moduli " << one.modulus << " and " << c2.modulus;
  });

  return all ? 0 : 1;
}
