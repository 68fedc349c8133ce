#pragma once

#include <optional>
#include <vector>

#include "hives/tableau.hpp"

namespace hives {

// Element of an iterated tensor product of B_lambda's.  Tensor factors are
// kept flattened to a leaf sequence; re-bracketing is the identity on this
// representation, so crystal operators always act through the left-nested
// reading (prefix) x (last leaf).
struct CrystalElem {
  std::vector<SkewTableau> leaves;

  bool operator==(const CrystalElem&) const = default;
  int arity() const { return static_cast<int>(leaves.size()); }
};

CrystalElem leaf_elem(const SkewTableau& t);
CrystalElem concat_elems(const CrystalElem& a, const CrystalElem& b);

Weight elem_weight(const CrystalElem& x);

// e_i / f_i under the tensor rule
//   e_i(a (x) b) = (e_i a) (x) b   if eps_i(a) > phi_i(b), else a (x) (e_i b)
//   f_i(a (x) b) = (f_i a) (x) b   if eps_i(a) >= phi_i(b), else a (x) (f_i b)
// nullopt encodes 0.
std::optional<CrystalElem> tensor_raise(const CrystalElem& x, int i);
std::optional<CrystalElem> tensor_lower(const CrystalElem& x, int i);

// Number of applications until 0.
int tensor_eps(const CrystalElem& x, int i);
int tensor_phi(const CrystalElem& x, int i);

bool is_highest_weight(const CrystalElem& x);
bool is_lowest_weight(const CrystalElem& x);

// The description of an iterated tensor of irreducibles B_{l1} (x) ... and
// the enumeration of its elements.
struct TensorCrystal {
  int n = 0;
  std::vector<Partition> factors;
};

std::vector<CrystalElem> enumerate_crystal(const TensorCrystal& c);

// All highest weight elements; optionally restricted to a given weight.
std::vector<CrystalElem> highest_weight_elements(const TensorCrystal& c);
std::vector<CrystalElem> highest_weight_elements(const TensorCrystal& c,
                                                 const Weight& nu);

// The connected component of x (BFS through lowering and raising operators).
std::vector<CrystalElem> component_of(const CrystalElem& x);

// T[b]: image of T in B_lambda under the unique isomorphism onto the
// component generated by the highest weight element b (wt(b) = shape of T).
CrystalElem transport(const SkewTableau& t, const CrystalElem& b);

// Schutzenberger involution on any constructed crystal, by path transport:
// raise x to the highest weight element, locate the component's lowest
// weight element, and replay the reversed path with indices i -> n-i.
CrystalElem xi_general(const CrystalElem& x);

// sigma_{A,B}: a (x) b -> xi(xi(b) (x) xi(a)), with the A|B split after
// `split` leaves.  The result lives in B (x) A.
CrystalElem sigma_crystal(const CrystalElem& x, int split);

}  // namespace hives
