#ifndef WCIDP_CATALOG_DATA_HPP
#define WCIDP_CATALOG_DATA_HPP

// The 45 infinite series, one row per series, exactly as tabulated:
// parameters, the seven formulas (a0..a4; d1, d2), the amplitude, and the
// side conditions. Each condition carries an evaluable expression and the
// text shown to users. Positivity of the parameters and a0 < a1, b0 < b1
// are added for every row by the catalog loader.

#include <array>
#include <initializer_list>
#include <utility>

namespace wcidp::data {

struct ConstraintRow {
    const char* expr;
    const char* display;
};

struct FamilyRow {
    int id;
    const char* params;  // comma separated
    std::array<const char*, 7> formulas;
    const char* amplitude;
    std::initializer_list<ConstraintRow> constraints;
};

// clang-format off
inline const FamilyRow kFamilies[] = {
    {1, "a0,a1,nu",
     {"a0", "a1", "(nu*a0-1)*a1", "nu*a0*a1-(a0+a1)/2", "(nu*a1-1)*a0",
      "nu*a0*a1", "2*nu*a0*a1-a0-a1"},
     "(a0+a1)/2",
     {{"a0%2==1", "a0 odd"}, {"a1%2==1", "a1 odd"},
      {"gcd(a0,a1)==1", "gcd(a0, a1) = 1"},
      {"gcd(nu*a0-1,(a1-a0)/2)==1", "gcd(nu*a0 - 1, (a1 - a0)/2) = 1"},
      {"nu>=max(1,3-a0)", "nu >= max(1, 3 - a0)"}}},
    {2, "a0,a1,nu",
     {"a0", "a1", "((nu*a0-1)/2)*a1", "((nu*a1-1)/2)*a0", "((nu*a0+1)/2)*a1-a0",
      "((nu*a0+1)/2)*a1", "(nu*a1-1)*a0"},
     "(a0+a1)/2",
     {{"nu%2==1", "nu odd"}, {"a0%2==1", "a0 odd"}, {"a1%2==1", "a1 odd"},
      {"gcd(a0,a1)==1", "gcd(a0, a1) = 1"},
      {"gcd((nu*a0-1)/2,(a1-a0)/2)==1", "gcd((nu*a0 - 1)/2, (a1 - a0)/2) = 1"},
      {"nu>=max(1,4-a0)", "nu >= max(1, 4 - a0)"}}},
    {3, "b0,b1,nu",
     {"2*b0", "2*b1", "(nu*b0-1)*b1+b0", "nu*b0*b1", "(nu*b0+1)*b1-b0",
      "(nu*b0+1)*b1+b0", "2*nu*b0*b1"},
     "b0+b1",
     {{"nu%2==1", "nu odd"}, {"b0%2==1", "b0 odd"}, {"b1%2==1", "b1 odd"},
      {"gcd(b0,b1)==1", "gcd(b0, b1) = 1"},
      {"gcd(nu,b1-b0)==1", "gcd(nu, b1 - b0) = 1"},
      {"nu>=max(1,4-b0)", "nu >= max(1, 4 - b0)"}}},
    {4, "a0,a1,nu",
     {"a0", "a1", "nu*a0*a1+(a0-a1)/2", "nu*a0*a1", "nu*a0*a1+(a1-a0)/2",
      "nu*a0*a1+(a0+a1)/2", "2*nu*a0*a1"},
     "(a0+a1)/2",
     {{"a0%2==1", "a0 odd"}, {"a1%2==1", "a1 odd"},
      {"gcd(a0,a1)==1", "gcd(a0, a1) = 1"},
      {"gcd(nu,(a1-a0)/2)==1", "gcd(nu, (a1 - a0)/2) = 1"},
      {"nu>=max(1,3-a0)", "nu >= max(1, 3 - a0)"}}},
    {5, "a0,a1,nu",
     {"a0", "a1", "((nu*a1+1)/2)*a0-a1", "((nu*a0-1)/2)*a1", "((nu*a1-1)/2)*a0",
      "((nu*a1+1)/2)*a0", "(nu*a0-1)*a1"},
     "(a0+a1)/2",
     {{"nu%2==1", "nu odd"}, {"a0%2==1", "a0 odd"}, {"a1%2==1", "a1 odd"},
      {"gcd(a0,a1)==1", "gcd(a0, a1) = 1"},
      {"gcd((nu*a0-1)/2,(a1-a0)/2)==1", "gcd((nu*a0 - 1)/2, (a1 - a0)/2) = 1"},
      {"nu>=max(1,6-a0)", "nu >= max(1, 6 - a0)"}}},
    {6, "a0,a1,nu",
     {"a0", "a1", "2*a1-a0", "(nu*a0-1)*(2*a1-a0)", "nu*a0*(2*a1-a0)-a1",
      "(nu*a0-1)*(2*a1-a0)+a1", "nu*a0*(2*a1-a0)"},
     "a1",
     {{"a0%2==1", "a0 odd"},
      {"gcd(a0,a1)==1", "gcd(a0, a1) = 1"},
      {"gcd(nu*a0-1,a1-a0)==1", "gcd(nu*a0 - 1, a1 - a0) = 1"},
      {"nu>=max(1,3-a0)", "nu >= max(1, 3 - a0)"}}},
    {7, "a0,a1,nu",
     {"a0", "a1", "2*a1-a0", "((nu*a0-1)/2)*(2*a1-a0)-a1", "((nu*a0-1)/2)*(2*a1-a0)-a0",
      "((nu*a0-1)/2)*(2*a1-a0)", "((nu*a0+1)/2)*(2*a1-a0)-a1"},
     "a1",
     {{"nu%2==1", "nu odd"}, {"a0%2==1", "a0 odd"},
      {"gcd(a0,a1)==1", "gcd(a0, a1) = 1"},
      {"gcd((nu*a0-3)/2,a1-a0)==1", "gcd((nu*a0 - 3)/2, a1 - a0) = 1"},
      {"nu>=max(1,6-a0)", "nu >= max(1, 6 - a0)"}}},
    {8, "a0,a1,nu",
     {"a0", "a1", "2*a1-a0", "((nu*a0-1)/2)*(2*a1-a0)", "((nu*a0-1)/2)*(2*a1-a0)+a1-a0",
      "((nu*a0-1)/2)*(2*a1-a0)+a1", "((nu*a0+1)/2)*(2*a1-a0)"},
     "a1",
     {{"nu%2==1", "nu odd"}, {"a0%2==1", "a0 odd"},
      {"gcd(a0,a1)==1", "gcd(a0, a1) = 1"},
      {"gcd((nu*a0-1)/2,a1-a0)==1", "gcd((nu*a0 - 1)/2, a1 - a0) = 1"},
      {"nu>=max(1,4-a0)", "nu >= max(1, 4 - a0)"}}},
    {9, "a0,a1,nu",
     {"a0", "a1", "2*a1-a0", "nu*a0*(2*a1-a0)-a1", "nu*a0*(2*a1-a0)-a0",
      "nu*a0*(2*a1-a0)", "(nu*a0+1)*(2*a1-a0)-a1"},
     "a1",
     {{"a0%2==1", "a0 odd"},
      {"gcd(a0,a1)==1", "gcd(a0, a1) = 1"},
      {"gcd(nu*a0-1,a1-a0)==1", "gcd(nu*a0 - 1, a1 - a0) = 1"},
      {"nu>=max(1,3-a0)", "nu >= max(1, 3 - a0)"}}},
    {10, "b0,b1,nu",
     {"2*b0", "2*b1", "(2*nu*b0-1)*b1", "(2*nu*b1-1)*b0", "2*(2*nu*b0*b1-b0-b1)",
      "2*(2*nu*b0-1)*b1", "2*(2*nu*b1-1)*b0"},
     "b0+b1",
     {{"b0%2==1", "b0 odd"}, {"b1%2==1", "b1 odd"},
      {"gcd(b0,b1)==1", "gcd(b0, b1) = 1"},
      {"nu>=max(1,3-b0)", "nu >= max(1, 3 - b0)"}}},
    {11, "a0,a1,nu",
     {"a0", "a1", "((nu*a0-1)/2)*a1", "((nu*a1-1)/2)*a0", "nu*a0*a1-a0-a1",
      "(nu*a0-1)*a1", "(nu*a1-1)*a0"},
     "(a0+a1)/2",
     {{"nu%2==1", "nu odd"}, {"a0%2==1", "a0 odd"}, {"a1%2==1", "a1 odd"},
      {"gcd(a0,a1)==1", "gcd(a0, a1) = 1"},
      {"nu>=max(1,4-a0)", "nu >= max(1, 4 - a0)"}}},
    {12, "a0,a1,nu",
     {"a0", "a1", "(nu*a0-1)*a1", "nu*a0*a1-(a0+a1)/2", "2*nu*a0*a1-a0-2*a1",
      "2*(nu*a0-1)*a1", "2*nu*a0*a1-a0-a1"},
     "(a0+a1)/2",
     {{"a0%2==1", "a0 odd"}, {"a1%2==1", "a1 odd"},
      {"gcd(a0,a1)==1", "gcd(a0, a1) = 1"},
      {"nu>=max(1,3-a0)", "nu >= max(1, 3 - a0)"}}},
    {13, "a0,a1,nu",
     {"a0", "a1", "(nu*a0-1)*a1+(a1-a0)/2", "(nu*a1-1)*a0", "2*nu*a0*a1-2*a0-a1",
      "2*nu*a0*a1-a0-a1", "2*(nu*a1-1)*a0"},
     "(a0+a1)/2",
     {{"a0%2==1", "a0 odd"}, {"a1%2==1", "a1 odd"},
      {"gcd(a0,a1)==1", "gcd(a0, a1) = 1"},
      {"nu>=max(1,3-a0)", "nu >= max(1, 3 - a0)"}}},
    {14, "a0,a1,nu",
     {"a0", "a1", "((nu*a1-1)/2)*a0-a1", "((nu*a0-1)/2)*a1-a0", "nu*a0*a1-2*(a0+a1)",
      "nu*a0*a1-a0-2*a1", "nu*a0*a1-2*a0-a1"},
     "(a0+a1)/2",
     {{"nu%2==1", "nu odd"}, {"a0%2==1", "a0 odd"}, {"a1%2==1", "a1 odd"},
      {"gcd(a0,a1)==1", "gcd(a0, a1) = 1"},
      {"nu>=max(1,6-a0)", "nu >= max(1, 6 - a0)"}}},
    {15, "t", {"1", "1", "t", "t", "2*t-1", "2*t", "2*t"}, "1", {}},
    {16, "t", {"1", "2", "2*t+1", "2*t+1", "4*t+1", "4*t+2", "4*t+3"}, "1", {}},
    {17, "t", {"1", "t", "2*t-1", "2*t-1", "3*t-2", "3*t-1", "4*t-2"}, "t", {}},
    {18, "t", {"1", "4*t-2", "6*t-3", "9*t-5", "12*t-7", "12*t-6", "18*t-10"}, "t", {}},
    {19, "t", {"1", "2*t-1", "2*t-1", "3*t-2", "4*t-3", "4*t-2", "6*t-4"}, "t", {}},
    {20, "t", {"1", "6*t-1", "8*t-2", "12*t-3", "18*t-5", "18*t-4", "24*t-6"}, "2*t", {}},
    {21, "t", {"2", "2", "2*t+1", "2*t+1", "4*t", "4*t+2", "4*t+2"}, "2", {}},
    {22, "t", {"2", "3", "3*t", "3*t+1", "3*t+1", "3*t+3", "6*t+2"}, "2", {}},
    {23, "t", {"2", "3", "3*t+1", "3*t+2", "6*t+1", "6*t+3", "6*t+4"}, "2", {}},
    {24, "t", {"2", "4", "2*t+3", "2*t+3", "4*t+4", "4*t+6", "4*t+8"}, "2", {}},
    {25, "t", {"2", "2*t+1", "2*t+1", "4*t+1", "6*t+1", "6*t+3", "8*t+2"}, "1", {}},
    {26, "t", {"3", "t+2", "2*t+1", "2*t+1", "3*t", "3*t+3", "4*t+2"}, "t+2",
     {{"t%3!=1", "t ≢ 1 (mod 3)"}}},
    {27, "t", {"3", "3*t", "3*t+1", "3*t+1", "3*t+2", "6*t+2", "6*t+3"}, "2", {}},
    {28, "t", {"3", "t+2", "t+3", "t+3", "2*t+3", "2*t+6", "3*t+6"}, "2",
     {{"t%3!=0", "3 ∤ t"}}},
    {29, "t", {"3", "3*t+1", "3*t+2", "6*t+1", "9*t", "9*t+3", "12*t+2"}, "2", {}},
    {30, "t", {"3", "2*t+1", "2*t+1", "3*t", "4*t-1", "4*t+2", "6*t"}, "t+2",
     {{"t%3!=1", "t ≢ 1 (mod 3)"}}},
    {31, "t", {"4", "6", "6*t+5", "6*t+7", "12*t+8", "12*t+12", "12*t+14"}, "4", {}},
    {32, "t", {"4", "6", "6*t+3", "6*t+5", "6*t+5", "6*t+9", "12*t+10"}, "4", {}},
    {33, "t", {"4", "2*t+3", "2*t+5", "4*t+6", "6*t+7", "6*t+11", "8*t+12"}, "2", {}},
    {34, "t", {"4", "2*t+3", "2*t+3", "2*t+5", "4*t+4", "4*t+8", "6*t+9"}, "2", {}},
    {35, "t", {"4", "2*t+3", "2*t+3", "4*t+4", "6*t+5", "6*t+9", "8*t+8"}, "2", {}},
    {36, "t", {"4", "2*t+3", "4*t+6", "6*t+7", "8*t+8", "8*t+12", "12*t+14"}, "2", {}},
    {37, "t", {"4", "4*t+1", "4*t+2", "4*t+3", "4*t+3", "8*t+4", "8*t+6"}, "3", {}},
    {38, "t", {"6", "6*t+1", "6*t+3", "6*t+4", "6*t+5", "12*t+6", "12*t+8"}, "5", {}},
    {39, "t", {"6", "6*t+3", "6*t+5", "6*t+5", "6*t+7", "12*t+10", "12*t+12"}, "4", {}},
    {40, "t", {"6", "6*t+3", "6*t+5", "6*t+5", "12*t+4", "12*t+10", "18*t+9"}, "4", {}},
    {41, "t", {"7", "4*t+6", "6*t+9", "9*t+10", "12*t+11", "12*t+18", "18*t+20"}, "t+5",
     {{"t%7!=2", "t ≢ 2 (mod 7)"}}},
    {42, "t", {"8", "4*t+5", "4*t+7", "4*t+9", "4*t+11", "8*t+16", "8*t+18"}, "6", {}},
    {43, "t", {"8", "4*t+5", "4*t+7", "4*t+9", "8*t+6", "8*t+14", "12*t+15"}, "6", {}},
    {44, "t", {"9", "3*t+8", "3*t+11", "6*t+13", "9*t+15", "9*t+24", "12*t+26"}, "6", {}},
    {45, "t", {"9", "3*t+8", "3*t+11", "3*t+14", "6*t+13", "6*t+22", "9*t+27"}, "6", {}},
};
// clang-format on

}  // namespace wcidp::data

#endif  // WCIDP_CATALOG_DATA_HPP
