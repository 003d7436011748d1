#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "marks/table_of_marks.hpp"

namespace marks {

struct ClassDescriptor {
  std::uint64_t order = 1;
  std::uint64_t length = 1;
  std::uint64_t normalizer = 1;  // |N_G(H)|
  std::vector<std::string> generators;

  bool operator==(const ClassDescriptor&) const = default;
};

/// Serializable form of a subgroup pattern. The ambient group is the last class.
struct PatternDocument {
  std::string group;
  std::size_t degree = 1;
  std::vector<ClassDescriptor> classes;
  std::vector<std::vector<std::uint64_t>> marks;  // row i has i+1 entries
  PatternStats stats;

  bool operator==(const PatternDocument& other) const;
};

PatternDocument make_document(const SubgroupPattern& pattern, std::string group_name);

/// Rebuilds groups from the generators. Throws ParseError when the document is malformed:
/// bad generators, ragged rows, a class whose generators do not give its stated order,
/// or classes that do not lie in the last one.
SubgroupPattern to_pattern(const PatternDocument& doc);

std::string to_json(const PatternDocument& doc);
PatternDocument parse_json(std::string_view text);

/// Triangle in the layout of printed tables (rows G/H, zeros as "."), then statistics and class data.
std::string to_text(const PatternDocument& doc);
PatternDocument parse_text(std::string_view text);

/// JSON if the first non-space character is '{', text otherwise.
PatternDocument parse_document(std::string_view text);

/// Labels of the classes, from their generators.
std::vector<std::string> class_labels(const PatternDocument& doc);

}  // namespace marks
