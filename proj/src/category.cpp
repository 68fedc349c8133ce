#include "hives/category.hpp"

#include <sstream>
#include <stdexcept>

#include "hives/bridge.hpp"

namespace hives {

HiveObject irreducible_object(const DominantWeight& lambda) {
  HiveObject a;
  a.n = static_cast<int>(lambda.size());
  a.support[lambda] = {"*"};
  return a;
}

namespace {

std::string hive_to_label(const Hive& h) {
  std::ostringstream os;
  os << "[";
  auto rows = h.array().rows();
  for (size_t k = 0; k < rows.size(); ++k) {
    if (k) os << ";";
    for (size_t y = 0; y < rows[k].size(); ++y) {
      if (y) os << ",";
      os << rows[k][y];
    }
  }
  os << "]";
  return os.str();
}

// candidate weights nu for hives with boundary (lambda, mu, .)
std::vector<DominantWeight> candidate_nu(const DominantWeight& lambda,
                                         const DominantWeight& mu) {
  int n = static_cast<int>(lambda.size());
  if (n == 0) return {DominantWeight{}};
  return dominants_with_sum(n, weight_sum(lambda) + weight_sum(mu),
                            lambda.back() + mu.back(), lambda[0] + mu[0]);
}

}  // namespace

HiveObject tensor_objects(const HiveObject& a, const HiveObject& b) {
  if (a.n != b.n) throw std::invalid_argument("tensor_objects: rank mismatch");
  HiveObject out;
  out.n = a.n;
  for (const auto& [lambda, la] : a.support)
    for (const auto& [mu, lb] : b.support)
      for (const auto& nu : candidate_nu(lambda, mu))
        for (const auto& h : enumerate_hives(lambda, mu, nu))
          for (const auto& sa : la)
            for (const auto& sb : lb)
              out.support[nu].push_back("(" + sa + "," + sb + "," +
                                        hive_to_label(h) + ")");
  return out;
}

bool operator==(const HiveElem& a, const HiveElem& b) {
  if (a.is_leaf() != b.is_leaf() || a.weight != b.weight) return false;
  if (a.is_leaf()) return a.label == b.label;
  return a.witness == b.witness && *a.left == *b.left && *a.right == *b.right;
}

HiveElem leaf_hive_elem(const std::string& label, const DominantWeight& w) {
  HiveElem e;
  e.weight = w;
  e.label = label;
  return e;
}

HiveElem pair_hive_elem(const HiveElem& a, const HiveElem& b, const Hive& p) {
  Boundary bd = p.bdry();
  if (bd.lambda != a.weight || bd.mu != b.weight)
    throw std::invalid_argument(
        "pair_hive_elem: witness boundary does not match factor weights");
  HiveElem e;
  e.weight = bd.nu;
  e.left = std::make_shared<HiveElem>(a);
  e.right = std::make_shared<HiveElem>(b);
  e.witness = p;
  return e;
}

std::string hive_elem_to_string(const HiveElem& e) {
  if (e.is_leaf()) return e.label;
  return "(" + hive_elem_to_string(*e.left) + "," +
         hive_elem_to_string(*e.right) + "," + hive_to_label(*e.witness) + ")";
}

std::vector<HiveElem> enumerate_pair_elements(const HiveObject& a,
                                              const HiveObject& b) {
  std::vector<HiveElem> out;
  for (const auto& [lambda, la] : a.support)
    for (const auto& [mu, lb] : b.support)
      for (const auto& nu : candidate_nu(lambda, mu))
        for (const auto& h : enumerate_hives(lambda, mu, nu))
          for (const auto& sa : la)
            for (const auto& sb : lb)
              out.push_back(pair_hive_elem(leaf_hive_elem(sa, lambda),
                                           leaf_hive_elem(sb, mu), h));
  return out;
}

std::vector<HiveElem> enumerate_triple_elements(const HiveObject& a,
                                                const HiveObject& b,
                                                const HiveObject& c) {
  std::vector<HiveElem> out;
  for (const auto& [lambda, la] : a.support) {
    auto inner = enumerate_pair_elements(b, c);
    for (const auto& y : inner)
      for (const auto& rho : candidate_nu(lambda, y.weight))
        for (const auto& h : enumerate_hives(lambda, y.weight, rho))
          for (const auto& sa : la)
            out.push_back(pair_hive_elem(leaf_hive_elem(sa, lambda), y, h));
  }
  return out;
}

HiveElem alpha(const HiveElem& x) {
  if (x.is_leaf() || x.right->is_leaf())
    throw std::invalid_argument("alpha: element must lie in A (x) (B (x) C)");
  const Hive& m = *x.witness;
  const Hive& n = *x.right->witness;
  AssociateResult r = associate(m.array(), n.array());
  return pair_hive_elem(pair_hive_elem(*x.left, *x.right->left, r.p()),
                        *x.right->right, r.q());
}

HiveElem alpha_inverse(const HiveElem& x) {
  if (x.is_leaf() || x.left->is_leaf())
    throw std::invalid_argument(
        "alpha_inverse: element must lie in (A (x) B) (x) C");
  const Hive& p = *x.left->witness;
  const Hive& q = *x.witness;
  AssociateInverseResult r = associate_inverse(p.array(), q.array());
  return pair_hive_elem(*x.left->left,
                        pair_hive_elem(*x.left->right, *x.right, r.n()), r.m());
}

HiveElem sigma(const HiveElem& x) {
  if (x.is_leaf()) throw std::invalid_argument("sigma: element must be a pair");
  CommuteResult r = commute(x.witness->array());
  return pair_hive_elem(*x.right, *x.left, r.star());
}

HiveElem map_left(const HiveElem& x, HiveElem (*f)(const HiveElem&)) {
  if (x.is_leaf()) throw std::invalid_argument("map_left: element must be a pair");
  return pair_hive_elem(f(*x.left), *x.right, *x.witness);
}

HiveElem map_right(const HiveElem& x, HiveElem (*f)(const HiveElem&)) {
  if (x.is_leaf()) throw std::invalid_argument("map_right: element must be a pair");
  return pair_hive_elem(*x.left, f(*x.right), *x.witness);
}

namespace {

TriangleArray shift_array(const TriangleArray& t, int c) {
  auto rows = t.rows();
  for (auto& r : rows)
    for (auto& v : r) v += c;
  return TriangleArray::from_rows(rows);
}

// shift the inner witness so its upper-right edge carries the same values as
// the outer witness's bottom edge
TriangleArray glue_inner(const TriangleArray& inner,
                         const TriangleArray& outer) {
  int n = inner.n();
  return shift_array(inner, outer.at(n, 0, 0) - inner.at(0, 0, n));
}

}  // namespace

YangBaxterSides yang_baxter_sides(const TriangleArray& m,
                                  const TriangleArray& n) {
  Hive mh(m), nh(n);
  Boundary bm = mh.bdry(), bn = nh.bdry();
  if (bm.mu != bn.nu)
    throw std::invalid_argument("yang_baxter_sides: M, N do not compose");
  HiveElem a = leaf_hive_elem("a", bm.lambda);
  HiveElem b = leaf_hive_elem("b", bn.lambda);
  HiveElem c = leaf_hive_elem("c", bn.mu);
  HiveElem x = pair_hive_elem(a, pair_hive_elem(b, c, nh), mh);

  // (s_BC (x) 1) . a_BCA . (1 (x) s_AC) . a_BAC^{-1} . (s_AB (x) 1) . a_ABC
  HiveElem lhs = alpha(x);
  lhs = map_left(lhs, sigma);
  lhs = alpha_inverse(lhs);
  lhs = map_right(lhs, sigma);
  lhs = alpha(lhs);
  lhs = map_left(lhs, sigma);

  // a_CBA . (1 (x) s_AB) . a_CAB^{-1} . (s_AC (x) 1) . a_ACB . (1 (x) s_BC)
  HiveElem rhs = map_right(x, sigma);
  rhs = alpha(rhs);
  rhs = map_left(rhs, sigma);
  rhs = alpha_inverse(rhs);
  rhs = map_right(rhs, sigma);
  rhs = alpha(rhs);

  YangBaxterSides out{lhs, rhs, lhs == rhs, TriangleArray{}, TriangleArray{},
                      TriangleArray{}, TriangleArray{}};

  // the same composites on the given representatives, keeping absolute values
  {
    AssociateResult a1 = associate(m, n);
    TriangleArray p = commute(a1.p_raw).star_raw;
    AssociateInverseResult i1 = associate_inverse(p, a1.q_raw);
    TriangleArray n1 = commute(i1.n_raw).star_raw;
    AssociateResult a2 = associate(i1.m_raw, n1);
    out.lhs_outer_raw = a2.q_raw;
    out.lhs_inner_raw = glue_inner(commute(a2.p_raw).star_raw, a2.q_raw);
  }
  {
    TriangleArray n1 = commute(n).star_raw;
    AssociateResult b1 = associate(m, n1);
    TriangleArray p = commute(b1.p_raw).star_raw;
    AssociateInverseResult i2 = associate_inverse(p, b1.q_raw);
    TriangleArray n2 = commute(i2.n_raw).star_raw;
    AssociateResult b2 = associate(i2.m_raw, n2);
    out.rhs_outer_raw = b2.q_raw;
    out.rhs_inner_raw = glue_inner(b2.p_raw, b2.q_raw);
  }
  return out;
}

bool coboundary_check(const HiveObject& a, const HiveObject& b,
                      const HiveObject& c) {
  // sigma_{B,A} . sigma_{A,B} = 1
  for (const auto& x : enumerate_pair_elements(a, b))
    if (!(sigma(sigma(x)) == x)) return false;
  // (sigma_BC (x) 1) . sigma_{A,B(x)C} = a_CBA . (1 (x) sigma_AB)
  //                                      . sigma_{A(x)B,C} . a_ABC
  for (const auto& x : enumerate_triple_elements(a, b, c)) {
    HiveElem lhs = map_left(sigma(x), sigma);
    HiveElem rhs = alpha(map_right(sigma(alpha(x)), sigma));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

CrystalElem phi_map(const CrystalElem& a, const CrystalElem& b, const Hive& p) {
  SkewTableau that = tableau_from_gt(hat(p.array()));
  return concat_elems(transport(that, a), b);
}

CrystalObject psi(const HiveObject& a) {
  CrystalObject out;
  out.n = a.n;
  for (const auto& [lambda, labels] : a.support)
    for (const auto& label : labels) {
      if (!is_partition(lambda) || (!lambda.empty() && lambda.back() < 0))
        throw std::invalid_argument(
            "psi: tableau crystals need non-negative weights");
      out.components.push_back({label, lambda});
    }
  return out;
}

LrCount lr_count(const DominantWeight& lambda, const DominantWeight& mu,
                 const DominantWeight& nu) {
  LrCount out;
  out.hive = static_cast<long long>(enumerate_hives(lambda, mu, nu).size());
  bool nonneg = is_partition(lambda) && is_partition(mu) && is_partition(nu);
  if (nonneg) {
    int n = static_cast<int>(lambda.size());
    TensorCrystal tc{n, {lambda, mu}};
    if (weight_sum(lambda) + weight_sum(mu) != weight_sum(nu))
      out.crystal = 0;
    else
      out.crystal =
          static_cast<long long>(highest_weight_elements(tc, nu).size());
  }
  return out;
}

}  // namespace hives
