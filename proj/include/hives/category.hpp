#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hives/crystal.hpp"
#include "hives/triangle.hpp"

namespace hives {

// Object of the category Hives: a finite label set for each dominant weight.
struct HiveObject {
  int n = 0;
  std::map<DominantWeight, std::vector<std::string>> support;
};

HiveObject irreducible_object(const DominantWeight& lambda);

// (A (x) B)_nu = union over lambda, mu of A_lambda x B_mu x HIVE; labels are
// canonical serializations so set equality is syntactic.
HiveObject tensor_objects(const HiveObject& a, const HiveObject& b);

// Element of an iterated tensor of objects: a leaf label or a pair of
// elements together with a hive witness whose boundary matches the factor
// weights.
struct HiveElem {
  DominantWeight weight;
  std::string label;  // leaves only
  std::shared_ptr<const HiveElem> left, right;
  std::optional<Hive> witness;  // nodes only

  bool is_leaf() const { return !witness.has_value(); }
};

bool operator==(const HiveElem& a, const HiveElem& b);

HiveElem leaf_hive_elem(const std::string& label, const DominantWeight& w);
HiveElem pair_hive_elem(const HiveElem& a, const HiveElem& b, const Hive& p);

std::string hive_elem_to_string(const HiveElem& e);

// Elements of A (x) B and of A (x) (B (x) C).
std::vector<HiveElem> enumerate_pair_elements(const HiveObject& a,
                                              const HiveObject& b);
std::vector<HiveElem> enumerate_triple_elements(const HiveObject& a,
                                                const HiveObject& b,
                                                const HiveObject& c);

// alpha: (a,(b,c,N),M) -> ((a,b,P),c,Q) with (P,Q) = associate(M,N).
HiveElem alpha(const HiveElem& x);
// alpha^{-1} via the inverse recurrence.
HiveElem alpha_inverse(const HiveElem& x);
// sigma: (a,b,P) -> (b,a,P*).
HiveElem sigma(const HiveElem& x);
// f (x) 1 and 1 (x) f.
HiveElem map_left(const HiveElem& x, HiveElem (*f)(const HiveElem&));
HiveElem map_right(const HiveElem& x, HiveElem (*f)(const HiveElem&));

struct YangBaxterSides {
  HiveElem lhs, rhs;  // elements of (C (x) B) (x) A
  bool equal;
  // the hive-pair witnesses with the input representatives carried through
  // and the inner hive shifted to glue along the shared edge
  TriangleArray lhs_inner_raw, lhs_outer_raw;
  TriangleArray rhs_inner_raw, rhs_outer_raw;
};

// Both composites of the Yang-Baxter equation applied to
// (a,(b,c,N),M) in (L(lambda) (x) (L(mu) (x) L(nu)))_rho.
YangBaxterSides yang_baxter_sides(const TriangleArray& m,
                                  const TriangleArray& n);

// sigma^2 = 1 on A (x) B and the compound coboundary axiom on A (x) (B (x) C),
// evaluated elementwise.
bool coboundary_check(const HiveObject& a, const HiveObject& b,
                      const HiveObject& c);

// phi_{A,B}: (a, b, P) -> P-hat[a] (x) b  for highest weight elements a, b.
CrystalElem phi_map(const CrystalElem& a, const CrystalElem& b, const Hive& p);

// Psi(A) = union over lambda of A_lambda x B_lambda: the crystal with one
// B_lambda component per label.  phi's inverse direction reduces to this
// constructor, so psi is not implemented separately.
struct CrystalObject {
  int n = 0;
  std::vector<std::pair<std::string, Partition>> components;
};

CrystalObject psi(const HiveObject& a);

struct LrCount {
  long long hive = 0;
  std::optional<long long> crystal;  // absent when a weight is negative
};

LrCount lr_count(const DominantWeight& lambda, const DominantWeight& mu,
                 const DominantWeight& nu);

}  // namespace hives
