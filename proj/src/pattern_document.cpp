#include "marks/pattern_document.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "marks/error.hpp"
#include "marks/naming.hpp"

namespace marks {
namespace {

using Json = nlohmann::ordered_json;

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

std::uint64_t parse_count(std::string_view word, std::string_view what) {
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || end != word.data() + word.size())
    throw ParseError("expected a non-negative integer for " + std::string(what) + ", got \"" + std::string(word) + "\"");
  return value;
}

std::uint64_t json_count(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned())
    throw ParseError(std::string("missing or non-integer field \"") + key + "\"");
  return j.at(key).get<std::uint64_t>();
}

}  // namespace

bool PatternDocument::operator==(const PatternDocument& other) const {
  return group == other.group && degree == other.degree && classes == other.classes && marks == other.marks &&
         stats.probes == other.stats.probes && stats.max_probe == other.stats.max_probe &&
         stats.millis == other.stats.millis;
}

PatternDocument make_document(const SubgroupPattern& pattern, std::string group_name) {
  PatternDocument doc;
  doc.group = std::move(group_name);
  doc.degree = pattern.group.degree();
  const std::uint64_t g_order = pattern.group.order();
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const Group& h = pattern.tom.classes[i];
    ClassDescriptor c;
    c.order = h.order();
    c.normalizer = pattern.tom.marks.at(i, i) * c.order;
    c.length = g_order / c.normalizer;
    for (const auto& g : h.generators()) c.generators.push_back(format_perm(g));
    doc.classes.push_back(std::move(c));
  }
  doc.marks = pattern.tom.marks.rows();
  doc.stats = pattern.stats;
  return doc;
}

SubgroupPattern to_pattern(const PatternDocument& doc) {
  if (doc.classes.empty()) throw ParseError("pattern has no classes");
  if (doc.marks.size() != doc.classes.size()) throw ParseError("number of mark rows differs from number of classes");
  for (std::size_t i = 0; i < doc.marks.size(); ++i)
    if (doc.marks[i].size() != i + 1)
      throw ParseError("mark row " + std::to_string(i + 1) + " should have " + std::to_string(i + 1) + " entries");
  if (doc.degree < 1) throw ParseError("degree must be positive");
  std::vector<Group> classes;
  for (std::size_t i = 0; i < doc.classes.size(); ++i) {
    std::vector<Permutation> gens;
    for (const auto& text : doc.classes[i].generators) gens.push_back(parse_perm(text, doc.degree));
    Group h(doc.degree, gens);
    if (h.order() != doc.classes[i].order)
      throw ParseError("class " + std::to_string(i + 1) + " generates a group of order " + std::to_string(h.order()) +
                       ", not " + std::to_string(doc.classes[i].order));
    classes.push_back(std::move(h));
  }
  SubgroupPattern pattern;
  pattern.group = classes.back();
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (!classes[i].is_subgroup_of(pattern.group))
      throw ParseError("class " + std::to_string(i + 1) + " does not lie in the last class");
  pattern.tom.classes = std::move(classes);
  pattern.tom.marks = MarkMatrix::from_rows(doc.marks);
  pattern.stats = doc.stats;
  return pattern;
}

std::string to_json(const PatternDocument& doc) {
  Json j;
  j["group"] = doc.group;
  j["degree"] = doc.degree;
  j["classes"] = Json::array();
  for (const auto& c : doc.classes)
    j["classes"].push_back(
        {{"order", c.order}, {"length", c.length}, {"normalizer", c.normalizer}, {"generators", c.generators}});
  j["marks"] = doc.marks;
  j["stats"] = {{"probes", doc.stats.probes}, {"max_probe", doc.stats.max_probe}, {"millis", doc.stats.millis}};
  return j.dump(1) + "\n";
}

PatternDocument parse_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    PatternDocument doc;
    doc.group = j.at("group").get<std::string>();
    doc.degree = json_count(j, "degree");
    for (const auto& c : j.at("classes")) {
      ClassDescriptor d;
      d.order = json_count(c, "order");
      d.length = json_count(c, "length");
      d.normalizer = json_count(c, "normalizer");
      d.generators = c.at("generators").get<std::vector<std::string>>();
      doc.classes.push_back(std::move(d));
    }
    doc.marks = j.at("marks").get<std::vector<std::vector<std::uint64_t>>>();
    const Json& stats = j.at("stats");
    doc.stats.probes = json_count(stats, "probes");
    doc.stats.max_probe = json_count(stats, "max_probe");
    doc.stats.millis = json_count(stats, "millis");
    return doc;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed pattern document: ") + e.what());
  }
}

std::vector<std::string> class_labels(const PatternDocument& doc) {
  std::vector<std::string> labels;
  for (const auto& c : doc.classes) {
    std::vector<Permutation> gens;
    for (const auto& text : c.generators) gens.push_back(parse_perm(text, doc.degree));
    labels.push_back(subgroup_label(Group(doc.degree, gens)));
  }
  return labels;
}

std::string to_text(const PatternDocument& doc) {
  const std::size_t n = doc.classes.size();
  const auto labels = class_labels(doc);
  std::vector<std::string> row_labels;
  std::size_t label_width = 0;
  for (const auto& l : labels) {
    row_labels.push_back(doc.group + "/" + l);
    label_width = std::max(label_width, row_labels.back().size());
  }
  auto cell = [&](std::size_t i, std::size_t j) {
    return doc.marks[i][j] == 0 ? std::string(".") : std::to_string(doc.marks[i][j]);
  };
  std::vector<std::size_t> widths(n);
  for (std::size_t j = 0; j < n; ++j) {
    widths[j] = labels[j].size();
    for (std::size_t i = j; i < n; ++i) widths[j] = std::max(widths[j], cell(i, j).size());
  }
  std::ostringstream out;
  auto pad_left = [&](const std::string& s, std::size_t w) { out << std::string(w - s.size(), ' ') << s; };
  for (std::size_t i = 0; i < n; ++i) {
    out << row_labels[i] << std::string(label_width - row_labels[i].size(), ' ');
    for (std::size_t j = 0; j <= i; ++j) {
      out << ' ';
      pad_left(cell(i, j), widths[j]);
    }
    out << '\n';
  }
  out << std::string(label_width, ' ');
  for (std::size_t j = 0; j < n; ++j) {
    out << ' ';
    pad_left(labels[j], widths[j]);
  }
  out << '\n';
  out << "stats: probes " << doc.stats.probes << ", max_probe " << doc.stats.max_probe << ", millis "
      << doc.stats.millis << '\n';
  out << "degree " << doc.degree << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    const auto& c = doc.classes[i];
    out << "class " << i + 1 << ": order " << c.order << ", length " << c.length << ", normalizer " << c.normalizer
        << ", generators";
    for (const auto& g : c.generators) out << ' ' << g;
    out << '\n';
  }
  return out.str();
}

PatternDocument parse_text(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::istringstream in{std::string(text)};
    for (std::string line; std::getline(in, line);) lines.push_back(line);
  }
  PatternDocument doc;
  std::size_t k = 0;
  for (; k < lines.size() && !lines[k].empty() && lines[k][0] != ' '; ++k) {
    auto words = split_words(lines[k]);
    const std::size_t slash = words[0].find('/');
    if (slash == std::string::npos) throw ParseError("row " + std::to_string(k + 1) + " has no G/H label");
    std::string group = words[0].substr(0, slash);
    if (k == 0) doc.group = group;
    else if (group != doc.group) throw ParseError("row " + std::to_string(k + 1) + " names a different group");
    if (words.size() != k + 2)
      throw ParseError("row " + std::to_string(k + 1) + " should have " + std::to_string(k + 1) + " entries");
    std::vector<std::uint64_t> row;
    for (std::size_t j = 1; j < words.size(); ++j) row.push_back(words[j] == "." ? 0 : parse_count(words[j], "a mark"));
    doc.marks.push_back(std::move(row));
  }
  if (doc.marks.empty()) throw ParseError("no table rows");
  const std::size_t n = doc.marks.size();
  auto expect = [&](std::string_view prefix) -> std::vector<std::string> {
    if (k >= lines.size() || !lines[k].starts_with(prefix))
      throw ParseError("expected a line starting with \"" + std::string(prefix) + "\"");
    return split_words(std::string_view(lines[k++]).substr(prefix.size()));
  };
  if (k >= lines.size() || split_words(lines[k]).size() != n) throw ParseError("missing column label line");
  ++k;
  auto strip_comma = [](std::string w) {
    if (!w.empty() && w.back() == ',') w.pop_back();
    return w;
  };
  auto stats = expect("stats:");
  if (stats.size() != 6 || stats[0] != "probes" || stats[2] != "max_probe" || stats[4] != "millis")
    throw ParseError("malformed stats line");
  doc.stats.probes = parse_count(strip_comma(stats[1]), "probes");
  doc.stats.max_probe = parse_count(strip_comma(stats[3]), "max_probe");
  doc.stats.millis = parse_count(stats[5], "millis");
  auto degree = expect("degree");
  if (degree.size() != 1) throw ParseError("malformed degree line");
  doc.degree = parse_count(degree[0], "degree");
  for (std::size_t i = 0; i < n; ++i) {
    auto words = expect("class " + std::to_string(i + 1) + ":");
    if (words.size() < 7 || words[0] != "order" || words[2] != "length" || words[4] != "normalizer" ||
        words[6] != "generators")
      throw ParseError("malformed line for class " + std::to_string(i + 1));
    ClassDescriptor c;
    c.order = parse_count(strip_comma(words[1]), "order");
    c.length = parse_count(strip_comma(words[3]), "length");
    c.normalizer = parse_count(strip_comma(words[5]), "normalizer");
    c.generators.assign(words.begin() + 7, words.end());
    doc.classes.push_back(std::move(c));
  }
  return doc;
}

PatternDocument parse_document(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

}  // namespace marks
