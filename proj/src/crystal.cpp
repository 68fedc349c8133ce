#include "hives/crystal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace hives {

CrystalElem leaf_elem(const SkewTableau& t) {
  if (!t.is_straight())
    throw std::invalid_argument("leaf_elem: leaves must be straight tableaux");
  return CrystalElem{{t}};
}

CrystalElem concat_elems(const CrystalElem& a, const CrystalElem& b) {
  CrystalElem out = a;
  out.leaves.insert(out.leaves.end(), b.leaves.begin(), b.leaves.end());
  return out;
}

Weight elem_weight(const CrystalElem& x) {
  if (x.leaves.empty()) throw std::invalid_argument("elem_weight: empty element");
  Weight w = tableau_weight(x.leaves[0]);
  for (int k = 1; k < x.arity(); ++k)
    w = add_weights(w, tableau_weight(x.leaves[k]));
  return w;
}

namespace {

// prefix of length m as a borrowed view
CrystalElem prefix_elem(const CrystalElem& x, int m) {
  return CrystalElem{{x.leaves.begin(), x.leaves.begin() + m}};
}

}  // namespace

std::optional<CrystalElem> tensor_raise(const CrystalElem& x, int i) {
  if (x.arity() == 1) {
    auto r = tableau_raise(x.leaves[0], i);
    if (!r) return std::nullopt;
    return leaf_elem(*r);
  }
  int m = x.arity() - 1;
  CrystalElem a = prefix_elem(x, m);
  const SkewTableau& b = x.leaves[m];
  CrystalElem out = x;
  if (tensor_eps(a, i) > tableau_phi(b, i)) {
    auto ra = tensor_raise(a, i);
    if (!ra) return std::nullopt;
    std::copy(ra->leaves.begin(), ra->leaves.end(), out.leaves.begin());
    return out;
  }
  auto rb = tableau_raise(b, i);
  if (!rb) return std::nullopt;
  out.leaves[m] = *rb;
  return out;
}

std::optional<CrystalElem> tensor_lower(const CrystalElem& x, int i) {
  if (x.arity() == 1) {
    auto r = tableau_lower(x.leaves[0], i);
    if (!r) return std::nullopt;
    return leaf_elem(*r);
  }
  int m = x.arity() - 1;
  CrystalElem a = prefix_elem(x, m);
  const SkewTableau& b = x.leaves[m];
  CrystalElem out = x;
  if (tensor_eps(a, i) >= tableau_phi(b, i)) {
    auto la = tensor_lower(a, i);
    if (!la) return std::nullopt;
    std::copy(la->leaves.begin(), la->leaves.end(), out.leaves.begin());
    return out;
  }
  auto lb = tableau_lower(b, i);
  if (!lb) return std::nullopt;
  out.leaves[m] = *lb;
  return out;
}

int tensor_eps(const CrystalElem& x, int i) {
  if (x.arity() == 1) return tableau_eps(x.leaves[0], i);
  int count = 0;
  CrystalElem cur = x;
  while (auto next = tensor_raise(cur, i)) {
    cur = *next;
    ++count;
  }
  return count;
}

int tensor_phi(const CrystalElem& x, int i) {
  if (x.arity() == 1) return tableau_phi(x.leaves[0], i);
  int count = 0;
  CrystalElem cur = x;
  while (auto next = tensor_lower(cur, i)) {
    cur = *next;
    ++count;
  }
  return count;
}

namespace {

int nletters(const CrystalElem& x) { return x.leaves.at(0).nletters; }

}  // namespace

bool is_highest_weight(const CrystalElem& x) {
  for (int i = 1; i < nletters(x); ++i)
    if (tensor_raise(x, i)) return false;
  return true;
}

bool is_lowest_weight(const CrystalElem& x) {
  for (int i = 1; i < nletters(x); ++i)
    if (tensor_lower(x, i)) return false;
  return true;
}

std::vector<CrystalElem> enumerate_crystal(const TensorCrystal& c) {
  std::vector<CrystalElem> out{CrystalElem{}};
  for (const auto& lambda : c.factors) {
    std::vector<SkewTableau> leaves;
    for (const auto& g : enumerate_gt_base(lambda))
      leaves.push_back(tableau_from_gt(g));
    std::vector<CrystalElem> next;
    next.reserve(out.size() * leaves.size());
    for (const auto& x : out)
      for (const auto& t : leaves) {
        CrystalElem y = x;
        y.leaves.push_back(t);
        next.push_back(y);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<CrystalElem> highest_weight_elements(const TensorCrystal& c) {
  std::vector<CrystalElem> out;
  for (const auto& x : enumerate_crystal(c))
    if (is_highest_weight(x)) out.push_back(x);
  return out;
}

std::vector<CrystalElem> highest_weight_elements(const TensorCrystal& c,
                                                 const Weight& nu) {
  std::vector<CrystalElem> out;
  for (const auto& x : highest_weight_elements(c))
    if (elem_weight(x) == nu) out.push_back(x);
  return out;
}

std::vector<CrystalElem> component_of(const CrystalElem& x) {
  std::vector<CrystalElem> seen{x};
  std::deque<CrystalElem> queue{x};
  auto visit = [&](const CrystalElem& y) {
    if (std::find(seen.begin(), seen.end(), y) == seen.end()) {
      seen.push_back(y);
      queue.push_back(y);
    }
  };
  while (!queue.empty()) {
    CrystalElem cur = queue.front();
    queue.pop_front();
    for (int i = 1; i < nletters(x); ++i) {
      if (auto up = tensor_raise(cur, i)) visit(*up);
      if (auto dn = tensor_lower(cur, i)) visit(*dn);
    }
  }
  return seen;
}

namespace {

// lowering path (indices, applied left to right) from the highest weight
// tableau of B_lambda to t, found by breadth-first search
std::vector<int> lowering_path_to(const SkewTableau& t) {
  int n = t.nletters;
  SkewTableau b = highest_weight_tableau(n, t.outer_shape());
  if (t == b) return {};
  std::map<std::vector<std::vector<int>>, std::pair<std::vector<std::vector<int>>, int>>
      parent;  // rows -> (parent rows, index used)
  std::deque<SkewTableau> queue{b};
  parent[b.rows] = {b.rows, 0};
  while (!queue.empty()) {
    SkewTableau cur = queue.front();
    queue.pop_front();
    for (int i = 1; i < n; ++i) {
      auto dn = tableau_lower(cur, i);
      if (!dn || parent.count(dn->rows)) continue;
      parent[dn->rows] = {cur.rows, i};
      if (dn->rows == t.rows) {
        std::vector<int> path;
        auto rows = dn->rows;
        while (rows != b.rows) {
          auto& [prows, idx] = parent[rows];
          path.push_back(idx);
          rows = prows;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(*dn);
    }
  }
  throw std::logic_error("lowering_path_to: tableau unreachable in B_lambda");
}

}  // namespace

CrystalElem transport(const SkewTableau& t, const CrystalElem& b) {
  if (!is_highest_weight(b))
    throw std::invalid_argument("transport: b must be highest weight");
  Partition shape = t.outer_shape();
  shape.resize(t.nletters, 0);
  if (elem_weight(b) != shape)
    throw std::invalid_argument("transport: wt(b) must equal the shape of T");
  CrystalElem cur = b;
  for (int i : lowering_path_to(t)) {
    auto dn = tensor_lower(cur, i);
    if (!dn) throw std::logic_error("transport: path left the crystal");
    cur = *dn;
  }
  return cur;
}

CrystalElem xi_general(const CrystalElem& x) {
  int n = nletters(x);
  // raise to the highest weight element, smallest index first
  std::vector<int> path;
  CrystalElem top = x;
  for (int i = 1; i < n;) {
    if (auto up = tensor_raise(top, i)) {
      top = *up;
      path.push_back(i);
      i = 1;
    } else {
      ++i;
    }
  }
  // locate the component's lowest weight element
  CrystalElem bottom = top;
  for (int i = 1; i < n;) {
    if (auto dn = tensor_lower(bottom, i)) {
      bottom = *dn;
      i = 1;
    } else {
      ++i;
    }
  }
  // xi(x) = e_{n-i_1} ... e_{n-i_k} . bottom, rightmost applied first
  CrystalElem out = bottom;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    auto up = tensor_raise(out, n - *it);
    if (!up) throw std::logic_error("xi_general: reversed path left the crystal");
    out = *up;
  }
  return out;
}

CrystalElem sigma_crystal(const CrystalElem& x, int split) {
  if (split < 1 || split >= x.arity())
    throw std::invalid_argument("sigma_crystal: bad split");
  CrystalElem a{{x.leaves.begin(), x.leaves.begin() + split}};
  CrystalElem b{{x.leaves.begin() + split, x.leaves.end()}};
  return xi_general(concat_elems(xi_general(b), xi_general(a)));
}

}  // namespace hives
