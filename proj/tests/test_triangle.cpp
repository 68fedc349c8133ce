#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "hives/triangle.hpp"

using namespace hives;

namespace {

TriangleArray tri(const std::vector<std::vector<int>>& rows) {
  return TriangleArray::from_rows(rows);
}

const std::vector<std::vector<int>> kM = {{0}, {2, 3}, {4, 5, 6}, {5, 7, 8, 8}};
const std::vector<std::vector<int>> kN = {{0}, {1, 2}, {1, 3, 4}, {1, 3, 4, 5}};

// Independent per-rhombus scan: enumerate the four-point sets of every unit
// rhombus directly from coordinates, without the library's family walker.
bool scan_all_rhombi(const TriangleArray& p, bool vertical_too) {
  int n = p.n();
  for (int x = 0; x <= n; ++x)
    for (int y = 0; x + y <= n; ++y) {
      int z = n - x - y;
      if (x >= 1 && z >= 1 &&
          p.at(x, y, z) + p.at(x, y + 1, z - 1) <
              p.at(x + 1, y, z - 1) + p.at(x - 1, y + 1, z))
        return false;
      if (y >= 1 && z >= 1 &&
          p.at(x, y, z) + p.at(x + 1, y, z - 1) <
              p.at(x, y + 1, z - 1) + p.at(x + 1, y - 1, z))
        return false;
      if (vertical_too && y >= 1 && z >= 1 &&
          p.at(x, y, z) + p.at(x + 1, y - 1, z) <
              p.at(x + 1, y, z - 1) + p.at(x, y - 1, z + 1))
        return false;
    }
  return true;
}

}  // namespace

TEST_CASE("rows round trip") {
  TriangleArray m = tri(kM);
  CHECK(m.rows() == kM);
  CHECK(m.at(0, 0, 3) == 0);
  CHECK(m.at(3, 0, 0) == 5);
  CHECK(m.at(0, 3, 0) == 8);
  CHECK(m.at(1, 1, 1) == 5);
  CHECK_THROWS(tri({{0}, {1, 2, 3}}));
}

TEST_CASE("check_hive on the worked examples") {
  CHECK(check_hive(tri(kM)));
  CHECK(check_hive(tri(kN)));
  // n <= 1: no rhombi exist
  CHECK(check_hive(tri({{7}})));
  CHECK(check_hive(tri({{0}, {5, -3}})));
}

TEST_CASE("check_hive agrees with a direct scan") {
  TriangleArray a = tri({{0}, {1, 1}, {1, 3, 1}});
  CHECK(check_hive(a) == scan_all_rhombi(a, true));
  CHECK(check_quasi_hive(a) == scan_all_rhombi(a, false));
  CHECK(!check_hive(a));
  CHECK(check_quasi_hive(a));
}

TEST_CASE("quasi-hive examples from the stage arrays") {
  TriangleArray q2 = tri({{0}, {2, 3}, {4, 5, 6}, {4, 7, 8, 8}});
  TriangleArray q1 = tri({{0}, {2, 3}, {3, 5, 6}, {3, 6, 8, 8}});
  CHECK(check_quasi_hive(q2));
  CHECK(check_quasi_hive(q1));
  // hives are quasi-hives
  CHECK(check_quasi_hive(tri(kM)));
  CHECK(check_quasi_hive(tri(kN)));
}

TEST_CASE("brute force finds arrays violating only the vertical family") {
  bool found = false;
  int vals[6];
  for (vals[0] = 0; vals[0] < 1; ++vals[0])
    for (vals[1] = 0; vals[1] <= 3 && !found; ++vals[1])
      for (vals[2] = 0; vals[2] <= 3 && !found; ++vals[2])
        for (vals[3] = 0; vals[3] <= 3 && !found; ++vals[3])
          for (vals[4] = 0; vals[4] <= 3 && !found; ++vals[4])
            for (vals[5] = 0; vals[5] <= 3 && !found; ++vals[5]) {
              TriangleArray p = tri({{vals[0]},
                                     {vals[1], vals[2]},
                                     {vals[3], vals[4], vals[5]}});
              // hive implies quasi-hive on every array
              if (check_hive(p)) CHECK(check_quasi_hive(p));
              if (check_quasi_hive(p) && !check_hive(p)) {
                found = true;
                CHECK(scan_all_rhombi(p, false));
                CHECK(!scan_all_rhombi(p, true));
              }
            }
  CHECK(found);
}

TEST_CASE("boundary of the worked examples") {
  Boundary bm = boundary(tri(kM));
  CHECK(bm.lambda == DominantWeight{2, 1, 0});
  CHECK(bm.mu == DominantWeight{2, 2, 1});
  CHECK(bm.nu == DominantWeight{3, 3, 2});
  Boundary bn = boundary(tri(kN));
  CHECK(bn.lambda == DominantWeight{2, 1, 1});
  CHECK(bn.mu == DominantWeight{1, 0, 0});
  CHECK(bn.nu == DominantWeight{2, 2, 1});
  Boundary bz = boundary(tri({{0}, {0, 0}, {0, 0, 0}}));
  CHECK(bz.lambda == DominantWeight{0, 0});
  CHECK(bz.mu == DominantWeight{0, 0});
  CHECK(bz.nu == DominantWeight{0, 0});
}

TEST_CASE("normalize") {
  TriangleArray m = tri(kM);
  CHECK(normalize(m) == m);
  auto rows = kM;
  for (auto& r : rows)
    for (auto& v : r) v += 5;
  CHECK(normalize(tri(rows)) == m);
  // the Yang-Baxter counterexample hive N has top entry 1
  TriangleArray yb = tri({{1}, {3, 2}, {3, 3, 2}, {2, 2, 2, 0}});
  TriangleArray expected = tri({{0}, {2, 1}, {2, 2, 1}, {1, 1, 1, -1}});
  CHECK(normalize(yb) == expected);
  CHECK(normalize(normalize(yb)) == normalize(yb));
}

TEST_CASE("enumerate_hives smallest cases") {
  auto hs = enumerate_hives({1, 0}, {1, 0}, {1, 1});
  REQUIRE(hs.size() == 1);
  CHECK(hs[0].array() == tri({{0}, {1, 1}, {1, 2, 2}}));

  CHECK(enumerate_hives({2, 1, 0}, {2, 1, 0}, {3, 2, 1}).size() == 2);

  auto set = enumerate_hives({2, 1, 0}, {2, 2, 1}, {3, 3, 2});
  bool contains_m = std::any_of(set.begin(), set.end(), [&](const Hive& h) {
    return h.array() == tri(kM);
  });
  CHECK(contains_m);
}

TEST_CASE("enumerate_hives invariants") {
  // weight conservation forces emptiness
  CHECK(enumerate_hives({1, 0}, {1, 0}, {3, 0}).empty());
  // members pass check_hive, carry the requested boundary, no duplicates
  auto hs = enumerate_hives({2, 1, 0}, {2, 2, 1}, {3, 3, 2});
  for (size_t a = 0; a < hs.size(); ++a) {
    CHECK(check_hive(hs[a].array()));
    Boundary b = hs[a].bdry();
    CHECK(b.lambda == DominantWeight{2, 1, 0});
    CHECK(b.mu == DominantWeight{2, 2, 1});
    CHECK(b.nu == DominantWeight{3, 3, 2});
    for (size_t c = a + 1; c < hs.size(); ++c) CHECK(!(hs[a] == hs[c]));
  }
  // negative entries are supported
  auto neg = enumerate_hives({1, 0, -1}, {0, 0, -2}, {1, 0, -3});
  for (const auto& h : neg) CHECK(check_hive(h.array()));
  // degenerate n = 0
  auto empty = enumerate_hives({}, {}, {});
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].bdry().lambda.empty());
}

TEST_CASE("boundary sequences of hives are weakly decreasing") {
  for (const auto& h : enumerate_hives({2, 1, 0}, {2, 1, 0}, {3, 2, 1})) {
    Boundary b = h.bdry();
    CHECK(is_weakly_decreasing(b.lambda));
    CHECK(is_weakly_decreasing(b.mu));
    CHECK(is_weakly_decreasing(b.nu));
    // corner values: bottom-right = |nu|
    CHECK(h.at(0, 3, 0) == weight_sum(b.nu));
  }
}

TEST_CASE("Hive constructor rejects non-hives") {
  CHECK_THROWS(Hive(tri({{0}, {1, 1}, {1, 3, 1}})));
}
