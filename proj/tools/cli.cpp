#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "marks/catalog.hpp"
#include "marks/error.hpp"
#include "marks/group_algorithms.hpp"
#include "marks/marks_engine.hpp"
#include "marks/naming.hpp"
#include "marks/oracle.hpp"
#include "marks/pattern_document.hpp"
#include "marks/verify.hpp"

namespace marks::cli {
namespace {

struct Failure {
  ExitCode code;
  std::string message;
};

struct NamedGroup {
  std::string name;
  Group group;
  std::optional<CatalogEntry> entry;
};

NamedGroup resolve_group(const std::string& spec, const std::vector<std::string>& gens) {
  if (!gens.empty()) {
    std::size_t degree = 0;
    try {
      degree = std::stoul(spec);
    } catch (const std::exception&) {
      throw Failure{input_error, "with --gens the positional argument is the degree, got \"" + spec + "\""};
    }
    CatalogEntry entry{"G", degree, gens, std::nullopt, std::nullopt};
    return {"G", build_group(entry), std::nullopt};
  }
  auto entry = find_catalog_entry(spec);
  if (!entry) throw Failure{input_error, "unknown group \"" + spec + "\" (see `marks catalog`)"};
  return {entry->name, build_group(*entry), entry};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{input_error, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Base pattern for an extension: must describe a normal subgroup of prime index and pass verification.
SubgroupPattern load_base(const std::string& path, const Group& S) {
  SubgroupPattern base = to_pattern(parse_document(read_file(path)));
  if (base.group.degree() != S.degree() || !base.group.is_subgroup_of(S) || S.order() % base.group.order() != 0 ||
      !is_prime(S.order() / base.group.order()) || !is_normal(S, base.group))
    throw Failure{validation_failure, "base pattern " + path + " is not a normal subgroup of prime index"};
  VerifyReport report = verify_pattern(base);
  if (!report.ok) throw Failure{validation_failure, "base pattern " + path + " fails verification: " + report.failures[0]};
  return base;
}

std::vector<Group> classes_for(const NamedGroup& g, const std::string& via, const std::string& base_path) {
  if (via == "oracle") return all_subgroups_brute(g.group).representatives();
  if (!base_path.empty()) {
    auto base = load_base(base_path, g.group);
    return subgroups_by_cyclic_extension(base.tom.classes, make_extension_context(g.group, base.group));
  }
  if (!is_solvable(g.group))
    throw Failure{unsupported, g.name + " is not solvable; pass --base with the pattern of a normal subgroup of prime index, or --via oracle"};
  return all_subgroup_classes_solvable(g.group);
}

SubgroupPattern pattern_for(const NamedGroup& g, const std::string& via, const std::string& base_path) {
  auto start = std::chrono::steady_clock::now();
  SubgroupPattern pattern;
  if (via == "oracle") {
    pattern = table_of_marks_brute(g.group);
  } else if (!base_path.empty()) {
    pattern = table_of_marks_by_cyclic_extension(load_base(base_path, g.group), g.group);
  } else {
    if (!is_solvable(g.group))
      throw Failure{unsupported,
                    g.name + " is not solvable; pass --base with the pattern of a normal subgroup of prime index, or --via oracle"};
    pattern = table_of_marks_solvable(g.group);
  }
  pattern.stats.millis = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return pattern;
}

// Base of a catalog group for benchmarking: the catalog base, else the penultimate term of a composition series.
std::pair<SubgroupPattern, std::string> bench_base(const CatalogEntry& entry, const Group& S) {
  if (entry.base) {
    Group A = build_group(*find_catalog_entry(*entry.base));
    std::uint64_t cap = std::max(oracle_order_cap(), A.order());
    if (A.order() <= oracle_order_cap()) return {table_of_marks_brute(A, cap), *entry.base};
    return {pattern_from_classes(A, subgroup_classes_brute(A, cap)), *entry.base};
  }
  auto series = composition_series(S);
  const Group& A = series.terms[series.terms.size() - 2];
  return {table_of_marks_solvable(A), subgroup_label(A)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subgroup patterns and tables of marks of finite permutation groups"};
  app.require_subcommand(1);

  std::string group_spec, via = "extension", base_path, format = "text", output, verify_path;
  std::vector<std::string> gens, bench_names;
  bool no_timing = false;

  auto* subgroups = app.add_subcommand("subgroups", "List conjugacy classes of subgroups");
  subgroups->add_option("group", group_spec, "Catalog name, or the degree when --gens is given")->required();
  subgroups->add_option("--gens", gens, "Generators in cycle notation; repeat for each generator")->allow_extra_args(false);
  subgroups->add_option("--via", via, "extension or oracle")->check(CLI::IsMember({"extension", "oracle"}));
  subgroups->add_option("--base", base_path, "Pattern file of a normal subgroup of prime index");

  auto* tom = app.add_subcommand("tom", "Compute the table of marks");
  tom->add_option("group", group_spec, "Catalog name, or the degree when --gens is given")->required();
  tom->add_option("--gens", gens, "Generators in cycle notation; repeat for each generator")->allow_extra_args(false);
  tom->add_option("--via", via, "extension or oracle")->check(CLI::IsMember({"extension", "oracle"}));
  tom->add_option("--base", base_path, "Pattern file of a normal subgroup of prime index");
  tom->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  tom->add_option("-o,--output", output, "Write to a file instead of standard output");
  tom->add_flag("--no-timing", no_timing, "Report 0 milliseconds so output is reproducible");

  auto* verify = app.add_subcommand("verify", "Check a pattern file against the invariants of tables of marks");
  verify->add_option("file", verify_path, "Pattern file (JSON or text)")->required();

  auto* bench = app.add_subcommand("bench", "CSV of extension statistics for catalog groups");
  bench->add_option("groups", bench_names, "Catalog names")->required();
  bench->add_flag("--no-timing", no_timing, "Report 0 milliseconds");

  auto* list = app.add_subcommand("catalog", "List catalog groups");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return input_error;
  }

  try {
    if (*subgroups) {
      NamedGroup g = resolve_group(group_spec, gens);
      auto classes = classes_for(g, via, base_path);
      for (std::size_t i = 0; i < classes.size(); ++i) {
        std::uint64_t n_order = normalizer(g.group, classes[i]).order();
        out << i + 1 << ' ' << classes[i].order() << ' ' << g.group.order() / n_order << ' ' << n_order << ' '
            << subgroup_label(classes[i]) << '\n';
      }
    } else if (*tom) {
      NamedGroup g = resolve_group(group_spec, gens);
      SubgroupPattern pattern = pattern_for(g, via, base_path);
      if (no_timing) pattern.stats.millis = 0;
      PatternDocument doc = make_document(pattern, g.name);
      std::string text = format == "json" ? to_json(doc) : to_text(doc);
      if (output.empty()) {
        out << text;
      } else {
        std::ofstream file(output);
        if (!(file << text)) throw Failure{input_error, "cannot write " + output};
      }
    } else if (*verify) {
      SubgroupPattern pattern;
      PatternDocument doc;
      try {
        doc = parse_document(read_file(verify_path));
        pattern = to_pattern(doc);
      } catch (const Error& e) {
        throw Failure{input_error, e.what()};
      }
      VerifyReport report = verify_pattern(pattern);
      const std::uint64_t g_order = pattern.group.order();
      for (std::size_t i = 0; i < doc.classes.size(); ++i) {
        const auto& c = doc.classes[i];
        if (c.normalizer != pattern.tom.marks.at(i, i) * c.order || c.length * c.normalizer != g_order)
          report.fail("class " + std::to_string(i + 1) + ": stored length/normalizer disagree with the table");
      }
      if (report.ok) {
        out << "ok: " << pattern.size() << " classes pass every check\n";
        return ok;
      }
      for (const auto& f : report.failures) out << "FAIL " << f << '\n';
      return validation_failure;
    } else if (*bench) {
      out << "group,classes_in,classes_out,probes,max_probe,millis\n";
      for (const auto& name : bench_names) {
        auto entry = find_catalog_entry(name);
        if (!entry) throw Failure{input_error, "unknown group \"" + name + "\""};
        Group S = build_group(*entry);
        if (S.order() == 1) throw Failure{unsupported, "the trivial group is not a cyclic extension"};
        auto [base, base_name] = bench_base(*entry, S);
        auto start = std::chrono::steady_clock::now();
        SubgroupPattern pattern = table_of_marks_by_cyclic_extension(base, S);
        auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        out << base_name << "->" << entry->name << ',' << base.size() << ',' << pattern.size() << ','
            << pattern.stats.probes << ',' << pattern.stats.max_probe << ',' << (no_timing ? 0 : millis.count())
            << '\n';
      }
    } else if (*list) {
      for (const auto& entry : catalog()) {
        out << entry.name << " degree " << entry.degree << " order " << build_group(entry).order();
        if (entry.base) out << " base " << *entry.base;
        out << '\n';
      }
    }
  } catch (const Failure& f) {
    err << f.message << '\n';
    return f.code;
  } catch (const NotSolvableError& e) {
    err << e.what() << '\n';
    return unsupported;
  } catch (const CapExceededError& e) {
    err << e.what() << " (raise MARKS_MAX_ORDER or use --via extension)\n";
    return unsupported;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return input_error;
  } catch (const PreconditionError& e) {
    err << e.what() << '\n';
    return validation_failure;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return validation_failure;
  }
  return ok;
}

}  // namespace marks::cli
