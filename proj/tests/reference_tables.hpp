#pragma once

// Reference tables as printed, cell for cell. A handful of printed cells are
// wrong; each one is listed in kMisprints together with the identity it
// breaks, and the tests assert the corrected value instead.

#include <string>
#include <string_view>
#include <vector>

namespace reference {

using Grid = std::vector<std::vector<long>>;

struct Misprint {
  std::string_view table;
  std::size_t row;
  std::size_t column;
  long printed;
  long corrected;
  std::string_view reason;
};

// ---- S_N restricted to Young subgroups: rows are patterns, columns irreps [N]..[1^N] ----

inline const std::vector<std::string> kS3Patterns = {"(3)_B", "(21)_B", "(3)_F", "(21)_F", "(111)"};
inline const std::vector<int> kS3Components = {1, 2, 1, 2, 3};
inline const Grid kS3Subgroup = {
    {1, 0, 0}, {1, 1, 0}, {0, 0, 1}, {0, 1, 1}, {1, 2, 1},
};

inline const std::vector<std::string> kS4Patterns = {"(4)_B", "(31)_B", "(22)_B", "(211)_B", "(4)_F",
                                                     "(31)_F", "(22)_F", "(211)_F", "(1111)"};
inline const std::vector<int> kS4Components = {1, 2, 2, 3, 1, 2, 2, 3, 4};
inline const Grid kS4Subgroup = {
    {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 1, 1, 0, 0}, {1, 2, 2, 1, 0}, {0, 0, 0, 0, 1},
    {0, 0, 0, 1, 1}, {0, 0, 1, 1, 1}, {0, 1, 2, 2, 1}, {1, 3, 2, 3, 1},
};

inline const std::vector<std::string> kS5Patterns = {"(5)_B", "(41)_B", "(32)_B", "(311)_B", "(221)_B",
                                                     "(2111)_B", "(5)_F", "(41)_F", "(32)_F", "(311)_F",
                                                     "(221)_F", "(2111)_F", "(11111)"};
inline const std::vector<int> kS5ComponentsPrinted = {1, 2, 2, 2, 3, 4, 1, 2, 2, 2, 3, 4, 5};
inline const Grid kS5Subgroup = {
    {1, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0}, {1, 1, 1, 0, 0, 0, 0}, {1, 2, 1, 1, 0, 0, 0},
    {1, 2, 2, 1, 1, 0, 0}, {1, 3, 3, 3, 2, 1, 0}, {0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 1, 1},
    {0, 0, 0, 0, 1, 1, 1}, {0, 0, 0, 1, 2, 1, 1}, {0, 0, 1, 1, 2, 2, 1}, {0, 1, 2, 3, 3, 3, 1},
    {1, 4, 5, 6, 5, 4, 1},
};

// ---- lambda reductions: row = lambda, columns irreps [N]..[1^N] ----

inline const Grid kN3Lambda = {{1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {1, 0, 1}};

inline const Grid kN4Lambda = {
    {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {1, 1, 0, 1, 0}, {1, 1, 1, 1, 0},
    {0, 2, 1, 1, 0}, {1, 2, 1, 1, 1}, {1, 2, 1, 2, 0}, {1, 2, 2, 2, 0}, {1, 3, 1, 3, 1},
    {1, 3, 2, 2, 1}, {1, 3, 2, 3, 0}, {2, 3, 2, 3, 1}, {1, 4, 2, 3, 1},
};
// lambda -> lambda + 12 adds this pattern.
inline const std::vector<long> kN4Period = {1, 3, 2, 3, 1};

inline const Grid kN5Lambda = {
    {1, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 0}, {1, 1, 1, 1, 0, 0, 0},
    {1, 2, 1, 1, 1, 0, 0}, {1, 2, 2, 2, 1, 0, 0}, {1, 3, 3, 2, 1, 1, 0}, {1, 4, 3, 3, 2, 1, 0},
    {2, 4, 4, 4, 3, 1, 0}, {2, 5, 5, 5, 3, 2, 0}, {2, 6, 6, 6, 4, 2, 1}, {2, 7, 7, 7, 5, 3, 0},
    {3, 8, 8, 8, 6, 4, 0}, {3, 9, 9, 10, 7, 4, 1},
};

// ---- symmetrized state counts: rows follow the subgroup pattern lists, columns lambda (or X) ----

inline const Grid kN3ComponentsByLambda = {
    {1, 0, 0, 1, 0, 0, 1}, {1, 1, 1, 1, 1, 1, 1}, {0, 0, 0, 1, 0, 0, 1}, {0, 1, 1, 1, 1, 1, 1}, {1, 2, 2, 2, 2, 2, 2},
};

inline const Grid kN3ComponentsByShell = {
    {1, 1, 2, 3, 4, 5, 7}, {1, 2, 4, 6, 9, 12, 16}, {0, 0, 0, 1, 1, 2, 3}, {0, 1, 2, 4, 6, 9, 12}, {1, 3, 6, 10, 15, 21, 28},
};

inline const Grid kN4ComponentsByLambda = {
    {1, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 2},
    {1, 1, 1, 2, 2, 2, 3, 3, 3, 4, 4, 4, 5},
    {1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6, 6, 7},
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1},
    {0, 0, 0, 1, 1, 1, 2, 3, 3, 3, 3, 3, 4},
    {0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5, 6},
    {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12},
    {1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25},
};

inline const Grid kN5ComponentsByLambda = {
    {1, 0, 0, 1, 1, 1, 1, 1, 2, 2, 2},
    {1, 1, 1, 2, 3, 3, 4, 5, 6, 7, 8},
    {1, 1, 2, 3, 4, 5, 7, 8, 10, 12, 14},
    {1, 2, 3, 5, 7, 9, 12, 15, 18, 22, 26},
    {1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36},
    {1, 3, 6, 10, 15, 21, 28, 36, 45, 55, 66},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 1, 1, 1, 2, 3},
    {0, 0, 0, 0, 1, 1, 2, 3, 4, 5, 7},
    {0, 0, 0, 1, 2, 3, 5, 7, 9, 12, 15},
    {0, 0, 1, 2, 4, 6, 9, 12, 16, 20, 25},
    {0, 1, 3, 6, 10, 15, 21, 28, 36, 45, 55},
    {1, 4, 9, 16, 25, 36, 49, 64, 81, 100, 121},
};

// ---- hard-core sector states: rows [p]+ for [N]..[1^N] then [p]-, columns {even, odd} ----

inline const Grid kN3Sectors = {{0, 1}, {1, 1}, {1, 0}, {1, 0}, {1, 1}, {0, 1}};
inline const Grid kN4Sectors = {{1, 0}, {1, 2}, {2, 0}, {1, 2}, {1, 0}, {0, 1}, {2, 1}, {0, 2}, {2, 1}, {0, 1}};
inline const Grid kN5Sectors = {{1, 0}, {2, 2}, {3, 2}, {2, 4}, {3, 2}, {2, 2}, {1, 0},
                                {0, 1}, {2, 2}, {2, 3}, {4, 2}, {2, 3}, {2, 2}, {0, 1}};

// ---- S_N x Z_2 character tables, classes identity-first then the i-coset in the same order ----
// The last two rows are the sector representation for even and odd lambda.

inline const Grid kS3Z2Characters = {
    {1, 1, 1, 1, 1, 1},   {2, 0, -1, 2, 0, -1},   {1, -1, 1, 1, -1, 1},  {1, 1, 1, -1, -1, -1},
    {2, 0, -1, -2, 0, 1}, {1, -1, 1, -1, 1, -1},  {6, 0, 0, 0, -2, 0},   {6, 0, 0, 0, 2, 0},
};

inline const Grid kS4Z2Characters = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {3, 1, -1, 0, -1, 3, 1, -1, 0, -1},
    {2, 0, 2, -1, 0, 2, 0, 2, -1, 0},
    {3, -1, -1, 0, 1, 3, -1, -1, 0, 1},
    {1, -1, 1, 1, -1, 1, -1, 1, 1, -1},
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {3, 1, -1, 0, -1, -3, -1, 1, 0, 1},
    {2, 0, 2, -1, 0, -2, 0, -2, 1, 0},
    {3, -1, -1, 0, 1, -3, 1, 1, 0, -1},
    {1, -1, 1, 1, -1, -1, 1, -1, -1, 1},
    {24, 0, 0, 0, 0, 0, 0, 8, 0, 0},
    {24, 0, 0, 0, 0, 0, 0, -8, 0, 0},
};
// Row labels as printed; the last irrep row reads [1^4]+ although its values are [1^4]-.
inline const std::vector<std::string> kS4Z2RowLabelsPrinted = {"[4]+", "[31]+", "[2^2]+", "[21^2]+", "[1^4]+",
                                                               "[4]-", "[31]-", "[2^2]-", "[21^2]-", "[1^4]+"};
// Printed i-coset column headers run [4]..[1^4], opposite to the order of the values beneath them.
inline const std::vector<std::string> kS4Z2CosetHeadersPrinted = {"i[4]", "i[31]", "i[2^2]", "i[21^2]", "i[1^4]"};

// ---- spin-1/2 space of four particles: multiplicities of [4], [31], [2^2], [21^2], [1^4] ----
inline const std::vector<long> kN4SpinHalf = {5, 3, 1, 0, 0};

inline const std::vector<Misprint> kMisprints = {
    {"s4_subgroup", 3, 2, 2, 1, "(211)_B row must fill 4!/2! = 12 states: 1*1 + 2*3 + m*2 + 1*3 = 12 forces m = 1"},
    {"s4_subgroup", 7, 2, 2, 1, "(211)_F row must fill 12 states, and duality with (211)_B gives m = 1"},
    {"s5_subgroup", 9, 4, 2, 1, "(311)_F must be (311)_B with conjugate columns: [2^21] pairs with [32] = 1"},
    {"s5_subgroup", 9, 5, 1, 2, "(311)_F must be (311)_B with conjugate columns: [21^3] pairs with [41] = 2"},
    {"n4_lambda", 9, 3, 3, 2, "lambda = 9 must span 2*9+1 = 19 states; the printed row spans 22"},
    {"n4_components_lambda", 5, 7, 3, 2, "(31)_F at lambda = 7 is [21^2] + [1^4] copies = 2 + 0"},
    {"n4_components_lambda", 5, 8, 3, 2, "(31)_F at lambda = 8 is [21^2] + [1^4] copies = 2 + 0"},
    {"s4z2_characters", 5, 5, 1, -1, "[4]- is odd under inversion; row orthogonality with [4]+ fails otherwise"},
    {"s4z2_characters", 5, 6, 1, -1, "[4]- is odd under inversion; row orthogonality with [4]+ fails otherwise"},
    {"s4z2_characters", 5, 7, 1, -1, "[4]- is odd under inversion; row orthogonality with [4]+ fails otherwise"},
    {"s4z2_characters", 5, 8, 1, -1, "[4]- is odd under inversion; row orthogonality with [4]+ fails otherwise"},
    {"s4z2_characters", 5, 9, 1, -1, "[4]- is odd under inversion; row orthogonality with [4]+ fails otherwise"},
    {"s5_components_printed", 3, 0, 2, 3, "(311) has three components"},
    {"s5_components_printed", 9, 0, 2, 3, "(311) has three components"},
};

inline const Grid* grid(std::string_view table) {
  if (table == "s4_subgroup") return &kS4Subgroup;
  if (table == "s5_subgroup") return &kS5Subgroup;
  if (table == "n4_lambda") return &kN4Lambda;
  if (table == "n4_components_lambda") return &kN4ComponentsByLambda;
  if (table == "s4z2_characters") return &kS4Z2Characters;
  return nullptr;
}

// The printed grid with every listed misprint replaced by its corrected value.
inline Grid corrected(std::string_view table, Grid g) {
  for (const auto& m : kMisprints)
    if (m.table == table) g[m.row][m.column] = m.corrected;
  return g;
}

inline std::vector<int> corrected_s5_components() {
  std::vector<int> c = kS5ComponentsPrinted;
  for (const auto& m : kMisprints)
    if (m.table == "s5_components_printed") c[m.row] = static_cast<int>(m.corrected);
  return c;
}

}  // namespace reference
