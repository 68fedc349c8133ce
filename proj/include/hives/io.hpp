#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hives/tableau.hpp"
#include "hives/triangle.hpp"

namespace hives {

// Hive text format: line 1 = n; then the n+1 rows top to bottom,
// space-separated integers, row k holding k+1 of them.
TriangleArray parse_triangle(std::istream& in);
TriangleArray parse_triangle_file(const std::string& path);
std::string triangle_to_file_string(const TriangleArray& p);
// Display form: just the rows.
std::string triangle_to_string(const TriangleArray& p);

// GT text format: triangle rows top-down, row i holding i integers.
GTPattern parse_gt(std::istream& in);
GTPattern parse_gt_file(const std::string& path);

// Tableau text format: one row per line, space-separated letters, top row
// first; skew tableaux carry an "inner:" header line.
SkewTableau parse_tableau(std::istream& in);
SkewTableau parse_tableau_file(const std::string& path);

std::vector<int> parse_weight_arg(const std::string& s);

}  // namespace hives
