#pragma once

#include <array>
#include "asdlab/arith.hpp"

namespace asdlab::golden {

// reference eigenvalue table: (p, canonically modified c)
struct Table1Row { u64 p; i64 c; };
inline constexpr std::array<Table1Row, 18> TABLE1{{
    {5, 7},   {7, 5},   {11, -5},  {13, 20},  {17, -8},  {19, -6},
    {23, 2},  {29, 10}, {31, 31},  {37, -10}, {41, -50}, {43, -10},
    {47, -50}, {53, -47}, {59, 20}, {61, -64}, {67, -50}, {71, 0},
}};

// reference characteristic polynomials of the new part for n = 6:
// T^4 + c3 T^3 + c2 T^2 + c1 T + p^4. Rows with repeated = true are
// (T^2 + lin T + p^2)^2; others split as (T^2 - b T - p^2)(T^2 + b T - p^2)
// with b = beta_coef * sqrt(beta_d).
struct Table2Row {
    u64 p;
    i64 c3, c2, c1;
    bool repeated;
    i64 lin;        // repeated rows
    int beta_d;     // -1 or -3
    i64 beta_coef;
};
inline constexpr std::array<Table2Row, 9> TABLE2{{
    {5,  0, -1,     0, false, 0,  -1, 7},
    {7,  0, -23,    0, false, 0,  -3, 5},
    {11, 0, -167,   0, false, 0,  -3, 5},
    {13, 40, 738, 6760, true, 20, 0, 0},
    {17, 0, -514,   0, false, 0,  -1, 8},
    {19, 0, -614,   0, false, 0,  -3, 6},
    {23, 0, -1046,  0, false, 0,  -3, 2},
    {37, 20, 2838, 27380, true, 10, 0, 0},
    {53, 0, -3409,  0, false, 0,  -1, 47},
}};

// level 108 weight 3 newform coefficients a(n) = x + y sqrt(-3), u = 7 - 10 sqrt(-3)
struct GtildeRow { u64 n; i64 x, y; };
inline constexpr std::array<GtildeRow, 18> GTILDE{{
    {1, 1, 0},    {2, -1, -1},  {4, -2, 2},   {5, 7, 0},    {7, 0, 5},
    {8, 8, 0},    {10, -7, -7}, {11, 0, -5},  {13, 20, 0},  {14, 15, -5},
    {16, -8, -8}, {17, -8, 0},  {19, 0, -6},  {20, -14, 14}, {22, -15, 5},
    {23, 0, 2},   {37, -10, 0}, {53, -47, 0},
}};

} // namespace asdlab::golden
