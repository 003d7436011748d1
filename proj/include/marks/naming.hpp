#pragma once

#include <string>

#include "marks/group.hpp"

namespace marks {

/// Short structural label: "1", "C6", "2^2", "C2xC4", "S3", "D10", "Q8", "A4", "5:4", ...
/// Groups without a known shape get "[n]" with n the order.
std::string subgroup_label(const Group& h);

}  // namespace marks
