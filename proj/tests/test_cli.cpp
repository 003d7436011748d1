#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "marks/catalog.hpp"
#include "marks/group_algorithms.hpp"
#include "marks/naming.hpp"
#include "marks/oracle.hpp"
#include "marks/pattern_document.hpp"
#include "support/fixtures.hpp"

using namespace marks;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "marks");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("marks_test_" + name);
  std::ofstream(path) << content;
  return path;
}

std::filesystem::path golden(const char* name) { return std::filesystem::path(MARKS_GOLDEN_DIR) / name; }

const std::string& a5_json() {
  static const std::string text = run({"tom", "A5", "--via", "oracle", "--format", "json", "--no-timing"}).out;
  return text;
}

}  // namespace

TEST_CASE("subgroups command") {
  auto s4 = run({"subgroups", "S4"});
  CHECK(s4.code == 0);
  CHECK(lines(s4.out) == 11);
  CHECK(lines(run({"subgroups", "GL23"}).out) == 16);
  auto inline_group = run({"subgroups", "--gens", "(1,2,3)", "3"});
  CHECK(inline_group.code == 0);
  CHECK(inline_group.out == "1 1 1 3 1\n2 3 1 3 C3\n");
  CHECK(run({"subgroups", "nosuchgroup"}).code == 2);
  auto s5 = run({"subgroups", "S5"});
  CHECK(s5.code == 3);
  CHECK(s5.err.find("not solvable") != std::string::npos);
  auto base = temp_file("A5.json", a5_json());
  CHECK(lines(run({"subgroups", "S5", "--base", base.string()}).out) == 19);
  CHECK(lines(run({"subgroups", "A5", "--via", "oracle"}).out) == 9);
}

TEST_CASE("tom text output matches the golden tables") {
  auto a5 = run({"tom", "A5", "--via", "oracle", "--no-timing"});
  CHECK(a5.code == 0);
  CHECK(a5.out == slurp(golden("A5.txt")));
  auto base = temp_file("A5.json", a5_json());
  auto s5 = run({"tom", "S5", "--via", "extension", "--base", base.string(), "--no-timing"});
  CHECK(s5.code == 0);
  CHECK(s5.out == slurp(golden("S5.txt")));
}

TEST_CASE("tom through the solvable driver and json output") {
  auto gl = run({"tom", "GL23", "--format", "json"});
  REQUIRE(gl.code == 0);
  auto doc = parse_json(gl.out);
  CHECK(doc.group == "GL23");
  CHECK(doc.classes.size() == 16);
  CHECK(MarkMatrix::from_rows(doc.marks) == MarkMatrix::from_rows(fixtures::gl23_panels.back()));
}

TEST_CASE("invalid base patterns are rejected") {
  auto wrong = temp_file("A4.json", run({"tom", "A4", "--format", "json"}).out);
  CHECK(run({"tom", "S5", "--base", wrong.string()}).code == 4);
  auto doc = parse_json(a5_json());
  doc.marks[4][0] = 13;
  auto corrupt = temp_file("A5bad.json", to_json(doc));
  CHECK(run({"tom", "S5", "--base", corrupt.string()}).code == 4);
  CHECK(run({"tom", "S5", "--base", "/nonexistent/file.json"}).code == 2);
  CHECK(run({"tom", "S5"}).code == 3);
}

TEST_CASE("verify command") {
  auto base = temp_file("A5.json", a5_json());
  auto s5_json = run({"tom", "S5", "--base", base.string(), "--format", "json", "--no-timing"}).out;
  auto good = temp_file("S5.json", s5_json);
  CHECK(run({"verify", good.string()}).code == 0);
  auto doc = parse_json(s5_json);
  doc.marks[15][10] = 1;
  auto bad = temp_file("S5bad.json", to_json(doc));
  auto report = run({"verify", bad.string()});
  CHECK(report.code == 4);
  CHECK(report.out.find("U = class 1 (sum = 1 mod 4)") != std::string::npos);
  auto trivial = temp_file("trivial.txt", run({"tom", "trivial"}).out);
  CHECK(run({"verify", trivial.string()}).code == 0);
  auto garbage = temp_file("garbage.json", "{ not json");
  CHECK(run({"verify", garbage.string()}).code == 2);
  CHECK(run({"verify", golden("S5.txt").string()}).code == 0);
}

TEST_CASE("bench command") {
  auto out = run({"bench", "C2", "S5", "S6", "--no-timing"});
  CHECK(out.code == 0);
  CHECK(out.out ==
        "group,classes_in,classes_out,probes,max_probe,millis\n"
        "1->C2,1,2,0,0,0\n"
        "A5->S5,9,19,0,0,0\n"
        "A6->S6,22,56,2,4,0\n");
}

TEST_CASE("documents round trip") {
  auto base = temp_file("A5.json", a5_json());
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"tom", "S5", "--base", base.string(), "--format", "json"}, {"tom", "GL23", "--format", "json"}}) {
    auto doc = parse_json(run(args).out);
    CHECK(parse_json(to_json(doc)) == doc);
    CHECK(parse_text(to_text(doc)) == doc);
    CHECK(parse_document(to_text(doc)) == doc);
    auto pattern = to_pattern(doc);
    CHECK(make_document(pattern, doc.group) == doc);
  }
}

TEST_CASE("output is deterministic") {
  auto first = run({"tom", "GL23", "--format", "json", "--no-timing"}).out;
  CHECK(run({"tom", "GL23", "--format", "json", "--no-timing"}).out == first);
}

TEST_CASE("json keys follow the schema") {
  auto text = a5_json();
  for (const char* key : {"\"group\"", "\"degree\"", "\"classes\"", "\"order\"", "\"length\"", "\"normalizer\"",
                          "\"generators\"", "\"marks\"", "\"stats\"", "\"probes\"", "\"max_probe\"", "\"millis\""})
    CHECK(text.find(key) != std::string::npos);
}

TEST_CASE("class labels") {
  auto base = temp_file("A5.json", a5_json());
  auto doc = parse_json(run({"tom", "S5", "--base", base.string(), "--format", "json"}).out);
  auto labels = class_labels(doc);
  REQUIRE(labels.size() == fixtures::s5_labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) CHECK(labels[i] == fixtures::s5_labels[i]);
  CHECK(subgroup_label(fixtures::group("Q8")) == "Q8");
  CHECK(subgroup_label(build_group(abelian_entry({2, 4}))) == "C2xC4");
  CHECK(subgroup_label(build_group(abelian_entry({2, 2, 2}))) == "2^3");
  CHECK(subgroup_label(fixtures::group("GL23")) == "GL2(3)");
}

TEST_CASE("catalog") {
  for (const auto& entry : catalog()) CHECK_NOTHROW(build_group(entry));
  CHECK(find_catalog_entry("gl2(3)")->name == "GL23");
  CHECK_FALSE(find_catalog_entry("S7").has_value());
  CHECK(build_group(dihedral_entry(10)).order() == 10);
  CHECK(build_group(dicyclic_entry(8)).order() == 8);
  CHECK(subgroup_label(build_group(dicyclic_entry(12))) == "Dic12");
  CHECK(subgroup_label(build_group(dicyclic_entry(16))) == "Q16");
  std::size_t abelian_16 = 0;
  for (const auto& e : generated_catalog(16))
    if (build_group(e).order() == 16 && is_abelian(build_group(e))) ++abelian_16;
  // partitions of 4, plus no catalog entry of order 16
  CHECK(abelian_16 == 5);
  auto listing = run({"catalog"});
  CHECK(listing.code == 0);
  CHECK(lines(listing.out) == catalog().size());
}
