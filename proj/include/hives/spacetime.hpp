#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hives/triangle.hpp"

namespace hives {

// Point of the even lattice of spacetime [0,n] x [0,n] x Z.
struct LatticePoint {
  int x = 0, y = 0, t = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

std::string point_to_string(const LatticePoint& p);

// Partial integer labelling of the lattice, grown by the recurrence.
class SpacetimeState {
 public:
  explicit SpacetimeState(int n) : n_(n) {}

  int n() const { return n_; }
  bool has(const LatticePoint& p) const { return values_.count(p) > 0; }
  int at(const LatticePoint& p) const;
  void set(const LatticePoint& p, int v);
  const std::map<LatticePoint, int>& values() const { return values_; }

 private:
  int n_;
  std::map<LatticePoint, int> values_;
};

// One application of the modified octahedron recurrence: the value at
// p = (x,y,t) from the layer t-1 neighbours and the value two below.
// Seven cases: interior max rule, four walls, four corners (the corner rules
// pair up by which neighbours exist).
int step_value(const SpacetimeState& f, const LatticePoint& p);

// Same local rule solved for the bottom value: the recurrence equals its
// inverse after exchanging t and -t.
int step_value_backward(const SpacetimeState& f, const LatticePoint& p);

// Extend f to all targets, in increasing-t order; existing values are kept.
SpacetimeState evolve(const SpacetimeState& f,
                      std::vector<LatticePoint> targets);

// Mirror of evolve with decreasing t.
SpacetimeState evolve_backward(const SpacetimeState& f,
                               std::vector<LatticePoint> targets);

// Injective placement of the triangle inside spacetime.
struct SectionEmbedding {
  std::string tag;
  std::function<LatticePoint(TrianglePoint)> map;

  LatticePoint operator()(int x, int y, int z) const {
    return map(TrianglePoint{x, y, z});
  }
};

// Values f on the embedded triangle, as read (no normalization).
TriangleArray read_section_raw(const SpacetimeState& f, int n,
                               const SectionEmbedding& e);

// Same, then normalized at the top.
TriangleArray read_section(const SpacetimeState& f, int n,
                           const SectionEmbedding& e);

// True iff every unit rhombus lying in the embedded section satisfies
// obtuse-sum >= acute-sum.  A rhombus family at a triangle position lies in
// the section when its four image points form a parallelogram in spacetime.
bool check_section_hive_condition(const SpacetimeState& f, int n,
                                  const SectionEmbedding& e);

// Regions, filtered by parity.
// Tetrahedron: |x-y| <= t <= n - |n-x-y|.
std::vector<LatticePoint> tetrahedron_region(int n);
// Quarter-octahedron: x+y <= t <= 2n-x-y.
std::vector<LatticePoint> quarter_octahedron_region(int n);

// Staircase rendering of the t-slices of a point set, one block per t:
// header "t=<k>", rows y = n down to 0, column position by x.
std::string render_slices(const SpacetimeState& f,
                          const std::vector<LatticePoint>& region);

}  // namespace hives
