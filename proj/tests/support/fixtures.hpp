#pragma once

// Published tables used as ground truth.

#include <cstdint>
#include <vector>

#include "marks/catalog.hpp"
#include "marks/table_of_marks.hpp"

namespace marks::fixtures {

using Rows = std::vector<std::vector<std::uint64_t>>;

inline Group group(const char* name) { return build_group(*find_catalog_entry(name)); }

// Table of marks of A5, classes 1, C2, C3, 2^2, C5, S3, D10, A4, A5.
inline const Rows a5_marks{
    {60},
    {30, 2},
    {20, 0, 2},
    {15, 3, 0, 3},
    {12, 0, 0, 0, 2},
    {10, 2, 1, 0, 0, 1},
    {6, 2, 0, 0, 1, 0, 1},
    {5, 1, 2, 1, 0, 0, 0, 1},
    {1, 1, 1, 1, 1, 1, 1, 1, 1},
};

// Table of marks of S5 with blue classes 1, C2, C3, 2^2, C5, S3, D10, A4, A5
// followed by red classes C2, C4, 2^2, S3, C6, D8, D12, 5:4, S4, S5.
inline const Rows s5_marks{
    {120},
    {60, 4},
    {40, 0, 4},
    {30, 6, 0, 6},
    {24, 0, 0, 0, 4},
    {20, 4, 2, 0, 0, 2},
    {12, 4, 0, 0, 2, 0, 2},
    {10, 2, 4, 2, 0, 0, 0, 2},
    {2, 2, 2, 2, 2, 2, 2, 2, 2},
    {60, 0, 0, 0, 0, 0, 0, 0, 0, 6},
    {30, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2},
    {30, 2, 0, 0, 0, 0, 0, 0, 0, 6, 0, 2},
    {20, 0, 2, 0, 0, 0, 0, 0, 0, 6, 0, 0, 2},
    {20, 0, 2, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 2},
    {15, 3, 0, 3, 0, 0, 0, 0, 0, 3, 1, 1, 0, 0, 1},
    {10, 2, 1, 0, 0, 1, 0, 0, 0, 4, 0, 2, 1, 1, 0, 1},
    {6, 2, 0, 0, 1, 0, 1, 0, 0, 0, 2, 0, 0, 0, 0, 0, 1},
    {5, 1, 2, 1, 0, 0, 0, 1, 0, 3, 1, 1, 2, 0, 1, 0, 0, 1},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
};

inline const std::vector<const char*> s5_labels{"1",  "C2", "C3", "2^2", "C5", "S3",  "D10", "A4", "A5", "C2",
                                                "C4", "2^2", "S3", "C6",  "D8", "D12", "5:4", "S4", "S5"};

// Dress coefficients of S5 for U = 1 and U = C2, in the class order of s5_marks.
inline const std::vector<std::uint64_t> s5_dress_trivial{1, 15, 20, 0, 24, 0, 0, 0, 0, 10,
                                                         30, 0, 0, 20, 0, 0, 0, 0, 0};
inline const std::vector<std::uint64_t> s5_dress_c2{0, 1, 0, 1, 0, 0, 0, 0, 0, 0,
                                                    1, 1, 0, 0, 0, 0, 0, 0, 0};

// Tables along 1 < 2 < 4 < Q8 < SL2(3) < GL2(3).
inline const std::vector<Rows> gl23_panels{
    {{1}},
    {{2}, {1, 1}},
    {{4}, {2, 2}, {1, 1, 1}},
    {{8}, {4, 4}, {2, 2, 2}, {2, 2, 0, 2}, {2, 2, 0, 0, 2}, {1, 1, 1, 1, 1, 1}},
    {{24}, {12, 12}, {6, 6, 2}, {3, 3, 3, 3}, {8, 0, 0, 0, 2}, {4, 4, 0, 0, 1, 1}, {1, 1, 1, 1, 1, 1, 1}},
    {
        {48},
        {24, 24},
        {16, 0, 4},
        {12, 12, 0, 4},
        {8, 8, 2, 0, 2},
        {6, 6, 0, 6, 0, 6},
        {2, 2, 2, 2, 2, 2, 2},
        {24, 0, 0, 0, 0, 0, 0, 2},
        {12, 12, 0, 0, 0, 0, 0, 2, 2},
        {8, 0, 2, 0, 0, 0, 0, 2, 0, 2},
        {8, 0, 2, 0, 0, 0, 0, 2, 0, 0, 2},
        {6, 6, 0, 2, 0, 0, 0, 2, 2, 0, 0, 2},
        {6, 6, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2},
        {4, 4, 1, 0, 1, 0, 0, 2, 2, 1, 1, 0, 0, 1},
        {3, 3, 0, 3, 0, 3, 0, 1, 1, 0, 0, 1, 1, 0, 1},
        {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    },
};

}  // namespace marks::fixtures
