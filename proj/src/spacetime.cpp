#include "hives/spacetime.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace hives {

std::string point_to_string(const LatticePoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," +
         std::to_string(p.t) + ")";
}

int SpacetimeState::at(const LatticePoint& p) const {
  auto it = values_.find(p);
  if (it == values_.end())
    throw std::runtime_error("SpacetimeState: missing value at " +
                             point_to_string(p));
  return it->second;
}

void SpacetimeState::set(const LatticePoint& p, int v) {
  if (p.x < 0 || p.x > n_ || p.y < 0 || p.y > n_ || (p.x + p.y + p.t) % 2 != 0)
    throw std::invalid_argument("SpacetimeState: " + point_to_string(p) +
                                " not on the even lattice");
  values_[p] = v;
}

namespace {

// The layer-(t-1) part of the local rule at (x,y): the max/sum the recurrence
// subtracts the opposite value from.
int layer_term(const SpacetimeState& f, int x, int y, int t, int n) {
  auto v = [&](int a, int b) { return f.at(LatticePoint{a, b, t}); };
  bool x_in = 0 < x && x < n, y_in = 0 < y && y < n;
  if (x_in && y_in)
    return std::max(v(x + 1, y) + v(x - 1, y), v(x, y + 1) + v(x, y - 1));
  if (x_in)  // y = 0 or n
    return v(x + 1, y) + v(x - 1, y);
  if (y_in)  // x = 0 or n
    return v(x, y + 1) + v(x, y - 1);
  // four vertical edges
  int a = (x == 0) ? v(x + 1, y) : v(x - 1, y);
  int b = (y == 0) ? v(x, y + 1) : v(x, y - 1);
  return a + b;
}

}  // namespace

int step_value(const SpacetimeState& f, const LatticePoint& p) {
  return layer_term(f, p.x, p.y, p.t - 1, f.n()) -
         f.at(LatticePoint{p.x, p.y, p.t - 2});
}

int step_value_backward(const SpacetimeState& f, const LatticePoint& p) {
  return layer_term(f, p.x, p.y, p.t + 1, f.n()) -
         f.at(LatticePoint{p.x, p.y, p.t + 2});
}

SpacetimeState evolve(const SpacetimeState& f,
                      std::vector<LatticePoint> targets) {
  SpacetimeState g = f;
  std::sort(targets.begin(), targets.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return a.t < b.t; });
  for (const auto& p : targets) {
    if (g.has(p)) continue;
    g.set(p, step_value(g, p));
  }
  return g;
}

SpacetimeState evolve_backward(const SpacetimeState& f,
                               std::vector<LatticePoint> targets) {
  SpacetimeState g = f;
  std::sort(targets.begin(), targets.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return a.t > b.t; });
  for (const auto& p : targets) {
    if (g.has(p)) continue;
    g.set(p, step_value_backward(g, p));
  }
  return g;
}

TriangleArray read_section_raw(const SpacetimeState& f, int n,
                               const SectionEmbedding& e) {
  TriangleArray out(n);
  for (int x = 0; x <= n; ++x)
    for (int y = 0; x + y <= n; ++y) out.at(x, y, n - x - y) = f.at(e(x, y, n - x - y));
  return out;
}

TriangleArray read_section(const SpacetimeState& f, int n,
                           const SectionEmbedding& e) {
  return normalize(read_section_raw(f, n, e));
}

namespace {

bool parallelogram(const LatticePoint& a, const LatticePoint& b,
                   const LatticePoint& c, const LatticePoint& d) {
  // obtuse pair a,b; acute pair c,d
  return a.x + b.x == c.x + d.x && a.y + b.y == c.y + d.y &&
         a.t + b.t == c.t + d.t;
}

}  // namespace

bool check_section_hive_condition(const SpacetimeState& f, int n,
                                  const SectionEmbedding& e) {
  auto val = [&](int x, int y, int z) { return f.at(e(x, y, z)); };
  auto check = [&](TrianglePoint o1, TrianglePoint o2, TrianglePoint a1,
                   TrianglePoint a2) {
    if (!parallelogram(e.map(o1), e.map(o2), e.map(a1), e.map(a2))) return true;
    return val(o1.x, o1.y, o1.z) + val(o2.x, o2.y, o2.z) >=
           val(a1.x, a1.y, a1.z) + val(a2.x, a2.y, a2.z);
  };
  for (int x = 0; x <= n; ++x)
    for (int y = 0; x + y <= n; ++y) {
      int z = n - x - y;
      if (x >= 1 && z >= 1 &&
          !check({x, y, z}, {x, y + 1, z - 1}, {x + 1, y, z - 1},
                 {x - 1, y + 1, z}))
        return false;
      if (y >= 1 && z >= 1 &&
          !check({x, y, z}, {x + 1, y, z - 1}, {x, y + 1, z - 1},
                 {x + 1, y - 1, z}))
        return false;
      if (y >= 1 && z >= 1 &&
          !check({x, y, z}, {x + 1, y - 1, z}, {x + 1, y, z - 1},
                 {x, y - 1, z + 1}))
        return false;
    }
  return true;
}

std::vector<LatticePoint> tetrahedron_region(int n) {
  std::vector<LatticePoint> out;
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= n; ++y)
      for (int t = std::abs(x - y); t <= n - std::abs(n - x - y); ++t)
        if ((x + y + t) % 2 == 0) out.push_back({x, y, t});
  return out;
}

std::vector<LatticePoint> quarter_octahedron_region(int n) {
  std::vector<LatticePoint> out;
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= n; ++y)
      for (int t = x + y; t <= 2 * n - x - y; ++t)
        if ((x + y + t) % 2 == 0) out.push_back({x, y, t});
  return out;
}

std::string render_slices(const SpacetimeState& f,
                          const std::vector<LatticePoint>& region) {
  if (region.empty()) return "";
  int n = f.n();
  int tmin = region[0].t, tmax = region[0].t;
  for (const auto& p : region) {
    tmin = std::min(tmin, p.t);
    tmax = std::max(tmax, p.t);
  }
  std::ostringstream os;
  bool first_block = true;
  for (int t = tmin; t <= tmax; ++t) {
    std::vector<const LatticePoint*> slice;
    for (const auto& p : region)
      if (p.t == t) slice.push_back(&p);
    if (slice.empty()) continue;
    size_t width = 1;
    for (const auto* p : slice)
      width = std::max(width, std::to_string(f.at(*p)).size());
    if (!first_block) os << "\n";
    first_block = false;
    os << "t=" << t << "\n";
    for (int y = n; y >= 0; --y) {
      std::string line;
      bool any = false;
      for (int x = 0; x <= n; ++x) {
        auto it = std::find_if(slice.begin(), slice.end(),
                               [&](const LatticePoint* p) {
                                 return p->x == x && p->y == y;
                               });
        std::string cell(width, ' ');
        if (it != slice.end()) {
          any = true;
          std::string s = std::to_string(f.at(**it));
          cell = std::string(width - s.size(), ' ') + s;
        }
        if (x) line += ' ';
        line += cell;
      }
      if (!any) continue;
      while (!line.empty() && line.back() == ' ') line.pop_back();
      os << line << "\n";
    }
  }
  return os.str();
}

}  // namespace hives
