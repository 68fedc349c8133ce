#pragma once

#include <vector>

#include "hives/weights.hpp"

namespace hives {

// A point of the triangle {(x,y,z) : x+y+z = n, x,y,z >= 0}.
struct TrianglePoint {
  int x = 0, y = 0, z = 0;
  bool operator==(const TrianglePoint&) const = default;
};

// Total integer labelling of the size-n triangle.  Row k (from the top,
// 0-indexed) holds the points with x+y = k, z = n-k, ordered by increasing y;
// the top row is the single point (0,0,n).
class TriangleArray {
 public:
  TriangleArray() = default;
  explicit TriangleArray(int n) : n_(n), values_((n + 1) * (n + 2) / 2, 0) {}

  static TriangleArray from_rows(const std::vector<std::vector<int>>& rows);

  int n() const { return n_; }
  int size() const { return static_cast<int>(values_.size()); }

  int at(int x, int y, int z) const { return values_[index(x, y, z)]; }
  int& at(int x, int y, int z) { return values_[index(x, y, z)]; }
  int at(const TrianglePoint& p) const { return at(p.x, p.y, p.z); }
  int& at(const TrianglePoint& p) { return at(p.x, p.y, p.z); }

  std::vector<std::vector<int>> rows() const;

  bool operator==(const TriangleArray&) const = default;

 private:
  int index(int x, int y, int z) const;

  int n_ = 0;
  std::vector<int> values_;
};

// The three rhombus inequality families.  check_hive requires all three,
// check_quasi_hive only the two horizontal ones.
bool check_hive(const TriangleArray& p);
bool check_quasi_hive(const TriangleArray& p);

struct Boundary {
  DominantWeight lambda;  // bottom edge, left to right
  DominantWeight mu;      // upper-left edge, top down
  DominantWeight nu;      // upper-right edge, top down
  bool operator==(const Boundary&) const = default;
};

// Raw edge differences; weakly decreasing whenever p is (at least) a
// quasi-hive on the boundary rhombi.
Boundary boundary(const TriangleArray& p);

// Subtract the top value everywhere, so the representative takes the value 0
// at (0,0,n).  Idempotent.
TriangleArray normalize(const TriangleArray& p);

// A hive: normalized representative of a class of triangle labellings
// satisfying the hive condition.
class Hive {
 public:
  explicit Hive(const TriangleArray& p);

  const TriangleArray& array() const { return arr_; }
  int n() const { return arr_.n(); }
  int at(int x, int y, int z) const { return arr_.at(x, y, z); }
  Boundary bdry() const { return boundary(arr_); }

  bool operator==(const Hive&) const = default;

 private:
  TriangleArray arr_;
};

// All normalized hives with boundary (lambda, mu, nu); empty unless
// |lambda| + |mu| = |nu|.  The cardinality is the LR coefficient c_{lm}^n.
std::vector<Hive> enumerate_hives(const DominantWeight& lambda,
                                  const DominantWeight& mu,
                                  const DominantWeight& nu);

}  // namespace hives
