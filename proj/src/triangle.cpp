#include "hives/triangle.hpp"

#include <stdexcept>
#include <string>

namespace hives {

int TriangleArray::index(int x, int y, int z) const {
  if (x < 0 || y < 0 || z < 0 || x + y + z != n_)
    throw std::invalid_argument("TriangleArray: point (" + std::to_string(x) +
                                "," + std::to_string(y) + "," +
                                std::to_string(z) + ") not in triangle of size " +
                                std::to_string(n_));
  int k = x + y;  // row from the top
  return k * (k + 1) / 2 + y;
}

TriangleArray TriangleArray::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw std::invalid_argument("TriangleArray: no rows");
  int n = static_cast<int>(rows.size()) - 1;
  TriangleArray p(n);
  for (int k = 0; k <= n; ++k) {
    if (static_cast<int>(rows[k].size()) != k + 1)
      throw std::invalid_argument("TriangleArray: row " + std::to_string(k) +
                                  " must have " + std::to_string(k + 1) +
                                  " entries");
    for (int y = 0; y <= k; ++y) p.at(k - y, y, n - k) = rows[k][y];
  }
  return p;
}

std::vector<std::vector<int>> TriangleArray::rows() const {
  std::vector<std::vector<int>> out(n_ + 1);
  for (int k = 0; k <= n_; ++k) {
    out[k].resize(k + 1);
    for (int y = 0; y <= k; ++y) out[k][y] = at(k - y, y, n_ - k);
  }
  return out;
}

namespace {

// Walk one rhombus family over the whole triangle.  Each family is given by
// the obtuse pair and the acute pair as offsets of (x,y,z).
template <typename F>
bool all_rhombi_hold(const TriangleArray& p, int family, F&& ok) {
  int n = p.n();
  for (int x = 0; x <= n; ++x)
    for (int y = 0; x + y <= n; ++y) {
      int z = n - x - y;
      switch (family) {
        case 1:  // P(x,y,z)+P(x,y+1,z-1) >= P(x+1,y,z-1)+P(x-1,y+1,z)
          if (x >= 1 && z >= 1 &&
              !ok(p.at(x, y, z) + p.at(x, y + 1, z - 1),
                  p.at(x + 1, y, z - 1) + p.at(x - 1, y + 1, z)))
            return false;
          break;
        case 2:  // P(x,y,z)+P(x+1,y,z-1) >= P(x,y+1,z-1)+P(x+1,y-1,z)
          if (y >= 1 && z >= 1 &&
              !ok(p.at(x, y, z) + p.at(x + 1, y, z - 1),
                  p.at(x, y + 1, z - 1) + p.at(x + 1, y - 1, z)))
            return false;
          break;
        case 3:  // P(x,y,z)+P(x+1,y-1,z) >= P(x+1,y,z-1)+P(x,y-1,z+1)
          if (y >= 1 && z >= 1 &&
              !ok(p.at(x, y, z) + p.at(x + 1, y - 1, z),
                  p.at(x + 1, y, z - 1) + p.at(x, y - 1, z + 1)))
            return false;
          break;
      }
    }
  return true;
}

bool ge(int a, int b) { return a >= b; }

}  // namespace

bool check_hive(const TriangleArray& p) {
  return all_rhombi_hold(p, 1, ge) && all_rhombi_hold(p, 2, ge) &&
         all_rhombi_hold(p, 3, ge);
}

bool check_quasi_hive(const TriangleArray& p) {
  return all_rhombi_hold(p, 1, ge) && all_rhombi_hold(p, 2, ge);
}

Boundary boundary(const TriangleArray& p) {
  int n = p.n();
  Boundary b;
  for (int k = 1; k <= n; ++k) {
    b.lambda.push_back(p.at(n - k, k, 0) - p.at(n - k + 1, k - 1, 0));
    b.mu.push_back(p.at(k, 0, n - k) - p.at(k - 1, 0, n - k + 1));
    b.nu.push_back(p.at(0, k, n - k) - p.at(0, k - 1, n - k + 1));
  }
  return b;
}

TriangleArray normalize(const TriangleArray& p) {
  TriangleArray q(p.n());
  int top = p.at(0, 0, p.n());
  auto rows = p.rows();
  for (int k = 0; k <= p.n(); ++k)
    for (int y = 0; y <= k; ++y) q.at(k - y, y, p.n() - k) = rows[k][y] - top;
  return q;
}

Hive::Hive(const TriangleArray& p) : arr_(normalize(p)) {
  if (!check_hive(arr_)) throw std::invalid_argument("Hive: hive condition fails");
}

namespace {

// Depth-first assignment of interior values, row by row, with local pruning
// bounds; complete assignments are filtered by the full hive condition.
void search_interior(TriangleArray& p, int n, int k, int y,
                     std::vector<Hive>& out) {
  if (k > n - 1) {
    if (check_hive(p)) out.push_back(Hive(p));
    return;
  }
  if (y > k - 1) {
    search_interior(p, n, k + 1, 1, out);
    return;
  }
  int x = k - y, z = n - k;
  // lower bound from family (i) at (x, y-1, z+1)
  int lo = p.at(x + 1, y - 1, z) + p.at(x - 1, y, z + 1) - p.at(x, y - 1, z + 1);
  // upper bound from the vertical rhombus below (x-1, y, z+1)
  int hi = p.at(x - 1, y, z + 1) + p.at(x, y - 1, z + 1) -
           p.at(x - 1, y - 1, z + 2);
  if (y >= 2)
    hi = std::min(hi, p.at(x, y - 1, z + 1) + p.at(x + 1, y - 1, z) -
                          p.at(x + 1, y - 2, z + 1));
  for (int v = lo; v <= hi; ++v) {
    p.at(x, y, z) = v;
    search_interior(p, n, k, y + 1, out);
  }
}

}  // namespace

std::vector<Hive> enumerate_hives(const DominantWeight& lambda,
                                  const DominantWeight& mu,
                                  const DominantWeight& nu) {
  if (!is_weakly_decreasing(lambda) || !is_weakly_decreasing(mu) ||
      !is_weakly_decreasing(nu))
    throw std::invalid_argument("enumerate_hives: weights must be dominant");
  size_t n = lambda.size();
  if (mu.size() != n || nu.size() != n)
    throw std::invalid_argument("enumerate_hives: weights must share length");
  std::vector<Hive> out;
  if (weight_sum(lambda) + weight_sum(mu) != weight_sum(nu)) return out;
  int ni = static_cast<int>(n);
  if (ni == 0) {
    out.push_back(Hive(TriangleArray(0)));
    return out;
  }
  TriangleArray p(ni);
  // Boundary values are forced by prefix sums.
  int acc = 0;
  for (int k = 1; k <= ni; ++k) {
    acc += mu[k - 1];
    p.at(k, 0, ni - k) = acc;
  }
  acc = 0;
  for (int k = 1; k <= ni; ++k) {
    acc += nu[k - 1];
    p.at(0, k, ni - k) = acc;
  }
  acc = weight_sum(mu);
  for (int j = 1; j <= ni; ++j) {
    acc += lambda[j - 1];
    p.at(ni - j, j, 0) = acc;
  }
  search_interior(p, ni, 2, 1, out);
  return out;
}

}  // namespace hives
