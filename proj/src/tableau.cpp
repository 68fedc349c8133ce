#include "hives/tableau.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hives {

Partition SkewTableau::outer_shape() const {
  Partition out(rows.size());
  for (size_t r = 0; r < rows.size(); ++r)
    out[r] = inner[r] + static_cast<int>(rows[r].size());
  return out;
}

bool SkewTableau::is_straight() const {
  for (int v : inner)
    if (v != 0) return false;
  return true;
}

int SkewTableau::max_col() const {
  int m = 0;
  for (size_t r = 0; r < rows.size(); ++r) m = std::max(m, outer_len(r));
  return m;
}

int SkewTableau::entry(int r, int c) const {
  if (r < 1 || r > row_count()) return 0;
  int lo = inner[r - 1], hi = outer_len(r - 1);
  if (c <= lo || c > hi) return 0;
  return rows[r - 1][c - lo - 1];
}

SkewTableau make_tableau(int n, const std::vector<std::vector<int>>& rows) {
  SkewTableau t;
  t.nletters = n;
  t.rows = rows;
  t.rows.resize(std::max<size_t>(rows.size(), n));
  t.inner.assign(t.rows.size(), 0);
  if (!is_valid_tableau(t))
    throw std::invalid_argument("make_tableau: not a valid tableau");
  return t;
}

SkewTableau make_skew_tableau(int n, const std::vector<int>& inner,
                              const std::vector<std::vector<int>>& rows) {
  SkewTableau t;
  t.nletters = n;
  t.inner = inner;
  t.rows = rows;
  if (t.inner.size() < t.rows.size()) t.inner.resize(t.rows.size(), 0);
  if (t.rows.size() < t.inner.size()) t.rows.resize(t.inner.size());
  if (!is_valid_tableau(t))
    throw std::invalid_argument("make_skew_tableau: not a valid skew tableau");
  return t;
}

bool is_valid_tableau(const SkewTableau& t) {
  if (t.inner.size() != t.rows.size()) return false;
  if (!is_partition(t.inner)) return false;
  if (!is_partition(t.outer_shape())) return false;
  int m = t.row_count();
  for (int r = 1; r <= m; ++r) {
    const auto& row = t.rows[r - 1];
    for (size_t k = 0; k < row.size(); ++k) {
      if (row[k] < 1 || row[k] > t.nletters) return false;
      if (k + 1 < row.size() && row[k] > row[k + 1]) return false;
    }
  }
  for (int r = 1; r < m; ++r)
    for (int c = 1; c <= t.max_col(); ++c) {
      int a = t.entry(r, c), b = t.entry(r + 1, c);
      if (a && b && a >= b) return false;
    }
  return true;
}

SkewTableau highest_weight_tableau(int n, const Partition& lambda) {
  std::vector<std::vector<int>> rows(n);
  for (int i = 0; i < static_cast<int>(lambda.size()) && i < n; ++i)
    rows[i].assign(lambda[i], i + 1);
  return make_tableau(n, rows);
}

SkewTableau lowest_weight_tableau(int n, const Partition& lambda) {
  // column c has length m_c; its entries are n-m_c+1 .. n
  std::vector<std::vector<int>> rows(n);
  int l1 = lambda.empty() ? 0 : lambda[0];
  for (int c = 1; c <= l1; ++c) {
    int len = 0;
    for (int i = 0; i < static_cast<int>(lambda.size()); ++i)
      if (lambda[i] >= c) ++len;
    for (int r = 0; r < len; ++r) rows[r].push_back(n - len + 1 + r);
  }
  return make_tableau(n, rows);
}

Weight tableau_weight(const SkewTableau& t) {
  Weight w(t.nletters, 0);
  for (const auto& row : t.rows)
    for (int v : row) ++w[v - 1];
  return w;
}

namespace {

// letter counts per column, 1-based columns
std::pair<std::vector<int>, std::vector<int>> column_counts(
    const SkewTableau& t, int i) {
  int w = t.max_col();
  std::vector<int> ci(w + 2, 0), ci1(w + 2, 0);
  for (int r = 1; r <= t.row_count(); ++r)
    for (int c = t.inner[r - 1] + 1; c <= t.outer_len(r - 1); ++c) {
      int v = t.entry(r, c);
      if (v == i) ++ci[c];
      if (v == i + 1) ++ci1[c];
    }
  return {ci, ci1};
}

}  // namespace

int tableau_eps(const SkewTableau& t, int i) {
  auto [ci, ci1] = column_counts(t, i);
  int w = t.max_col();
  int best = 0, suffix = 0;  // empty suffix contributes 0
  for (int j = w; j >= 1; --j) {
    suffix += ci1[j] - ci[j];
    best = std::max(best, suffix);
  }
  return best;
}

int tableau_phi(const SkewTableau& t, int i) {
  auto [ci, ci1] = column_counts(t, i);
  int w = t.max_col();
  int best = 0, prefix = 0;  // empty prefix contributes 0
  for (int j = 1; j <= w; ++j) {
    prefix += ci[j] - ci1[j];
    best = std::max(best, prefix);
  }
  return best;
}

std::optional<SkewTableau> tableau_raise(const SkewTableau& t, int i) {
  auto [ci, ci1] = column_counts(t, i);
  int w = t.max_col();
  int eps = tableau_eps(t, i);
  if (eps <= 0) return std::nullopt;
  int a = -1, suffix = 0;
  for (int j = w; j >= 1; --j) {
    suffix += ci1[j] - ci[j];
    if (suffix == eps) {
      a = j;
      break;  // scanning from the right, first hit is max j
    }
  }
  SkewTableau out = t;
  for (int r = 1; r <= t.row_count(); ++r)
    if (t.entry(r, a) == i + 1) {
      out.rows[r - 1][a - t.inner[r - 1] - 1] = i;
      assert(is_valid_tableau(out));
      return out;
    }
  throw std::logic_error("tableau_raise: no i+1 in the selected column");
}

std::optional<SkewTableau> tableau_lower(const SkewTableau& t, int i) {
  auto [ci, ci1] = column_counts(t, i);
  int w = t.max_col();
  int phi = tableau_phi(t, i);
  if (phi <= 0) return std::nullopt;
  int b = -1, prefix = 0;
  for (int j = 1; j <= w; ++j) {
    prefix += ci[j] - ci1[j];
    if (prefix == phi) {
      b = j;
      break;  // first hit is min j
    }
  }
  SkewTableau out = t;
  for (int r = 1; r <= t.row_count(); ++r)
    if (t.entry(r, b) == i) {
      out.rows[r - 1][b - t.inner[r - 1] - 1] = i + 1;
      assert(is_valid_tableau(out));
      return out;
    }
  throw std::logic_error("tableau_lower: no i in the selected column");
}

bool is_mu_dominant(const SkewTableau& t, const DominantWeight& mu) {
  for (int i = 1; i < static_cast<int>(mu.size()); ++i)
    if (tableau_eps(t, i) > mu[i - 1] - mu[i]) return false;
  return true;
}

SkewTableau star_product(const SkewTableau& t, const SkewTableau& u) {
  if (!t.is_straight() || !u.is_straight())
    throw std::invalid_argument("star_product: straight shapes required");
  int l1 = t.rows.empty() ? 0 : t.outer_len(0);
  SkewTableau s;
  s.nletters = std::max(t.nletters, u.nletters);
  for (int r = 0; r < u.row_count(); ++r) {
    s.inner.push_back(l1);
    s.rows.push_back(u.rows[r]);
  }
  for (int r = 0; r < t.row_count(); ++r) {
    s.inner.push_back(0);
    s.rows.push_back(t.rows[r]);
  }
  if (!is_valid_tableau(s))
    throw std::invalid_argument("star_product: result not a skew tableau");
  return s;
}

Weight GTPattern::weight() const {
  Weight w(n(), 0);
  int prev = 0;
  for (int i = 1; i <= n(); ++i) {
    int sum = 0;
    for (int j = 1; j <= i; ++j) sum += at(i, j);
    w[i - 1] = sum - prev;
    prev = sum;
  }
  return w;
}

GTPattern make_gt(const std::vector<std::vector<int>>& rows) {
  GTPattern g{rows};
  for (int i = 1; i <= g.n(); ++i)
    if (static_cast<int>(rows[i - 1].size()) != i)
      throw std::invalid_argument("make_gt: row " + std::to_string(i) +
                                  " must have " + std::to_string(i) + " entries");
  return g;
}

bool is_valid_gt(const GTPattern& g) {
  for (int i = 2; i <= g.n(); ++i)
    for (int j = 1; j < i; ++j)
      if (!(g.at(i, j) >= g.at(i - 1, j) && g.at(i - 1, j) >= g.at(i, j + 1)))
        return false;
  return true;
}

GTPattern gt_from_tableau(const SkewTableau& t) {
  if (!t.is_straight())
    throw std::invalid_argument("gt_from_tableau: straight shape required");
  int n = t.nletters;
  GTPattern g;
  g.entries.resize(n);
  for (int i = 1; i <= n; ++i) {
    g.entries[i - 1].resize(i);
    for (int j = 1; j <= i; ++j) {
      int cnt = 0;
      if (j <= t.row_count())
        for (int v : t.rows[j - 1])
          if (v <= i) ++cnt;
      g.at(i, j) = cnt;
    }
  }
  return g;
}

SkewTableau tableau_from_gt(const GTPattern& g) {
  if (!is_valid_gt(g))
    throw std::invalid_argument("tableau_from_gt: not a GT pattern");
  int n = g.n();
  for (int j = 1; j <= n; ++j)
    if (g.at(n, j) < 0)
      throw std::invalid_argument(
          "tableau_from_gt: negative entries unsupported");
  std::vector<std::vector<int>> rows(n);
  for (int j = 1; j <= n; ++j)
    for (int i = j; i <= n; ++i) {
      int count = g.at(i, j) - (i > j ? g.at(i - 1, j) : 0);
      rows[j - 1].insert(rows[j - 1].end(), count, i);
    }
  return make_tableau(n, rows);
}

namespace {

void enumerate_gt_rows(std::vector<std::vector<int>>& rows, int i,
                       const std::optional<Weight>& w,
                       std::vector<GTPattern>& out) {
  if (i == 0) {
    GTPattern g{rows};
    std::reverse(g.entries.begin(), g.entries.end());
    out.push_back(g);
    return;
  }
  // rows holds rows n, n-1, ..., i+1 so far (in that order); build row i.
  // copied: push_back below would invalidate a reference
  const std::vector<int> below = rows.back();
  std::vector<int> row(i);
  int target = -1;
  if (w) {
    target = 0;
    for (int k = 0; k < i; ++k) target += (*w)[k];
  }
  std::function<void(int, int)> fill = [&](int j, int sum) {
    if (j == i) {
      if (w && sum != target) return;
      rows.push_back(row);
      enumerate_gt_rows(rows, i - 1, w, out);
      rows.pop_back();
      return;
    }
    int lo = below[j + 1], hi = below[j];
    for (int v = lo; v <= hi; ++v) {
      row[j] = v;
      fill(j + 1, sum + v);
    }
  };
  fill(0, 0);
}

}  // namespace

std::vector<GTPattern> enumerate_gt_base(const Partition& lambda) {
  if (lambda.empty()) return {GTPattern{}};
  std::vector<std::vector<int>> rows{lambda};
  std::vector<GTPattern> out;
  enumerate_gt_rows(rows, static_cast<int>(lambda.size()) - 1, std::nullopt,
                    out);
  return out;
}

std::vector<GTPattern> enumerate_gt_base_weight(const Partition& lambda,
                                                const Weight& w) {
  std::vector<GTPattern> out;
  if (w.size() != lambda.size()) return out;
  if (weight_sum(w) != weight_sum(lambda)) return out;
  std::vector<std::vector<int>> rows{lambda};
  enumerate_gt_rows(rows, static_cast<int>(lambda.size()) - 1, w, out);
  return out;
}

std::vector<SkewTableau> enumerate_skew_tableaux(int n, const Partition& outer,
                                                 const Partition& inner) {
  std::vector<SkewTableau> out;
  SkewTableau t;
  t.nletters = n;
  t.inner = inner;
  t.inner.resize(outer.size(), 0);
  t.rows.resize(outer.size());
  for (size_t r = 0; r < outer.size(); ++r)
    t.rows[r].assign(outer[r] - t.inner[r], 1);
  std::function<void(int, int)> fill = [&](int r, int k) {
    if (r == t.row_count()) {
      out.push_back(t);
      return;
    }
    if (k == static_cast<int>(t.rows[r].size())) {
      fill(r + 1, 0);
      return;
    }
    int c = t.inner[r] + k + 1;
    int lo = 1;
    if (k > 0) lo = std::max(lo, t.rows[r][k - 1]);
    if (r > 0 && t.entry(r, c) != 0) lo = std::max(lo, t.entry(r, c) + 1);
    for (int v = lo; v <= n; ++v) {
      t.rows[r][k] = v;
      fill(r, k + 1);
    }
  };
  fill(0, 0);
  return out;
}

namespace {

struct Grid {
  std::vector<std::vector<int>> cell;  // 1-based, 0 = absent
  int rows, cols;

  explicit Grid(const SkewTableau& t)
      : rows(t.row_count()), cols(std::max(1, t.max_col())) {
    cell.assign(rows + 2, std::vector<int>(cols + 2, 0));
    for (int r = 1; r <= rows; ++r)
      for (int c = t.inner[r - 1] + 1; c <= t.outer_len(r - 1); ++c)
        cell[r][c] = t.entry(r, c);
  }
};

}  // namespace

JdtResult jdt_rectify(const SkewTableau& s) {
  Grid g(s);
  std::vector<int> inner = s.inner;
  JdtResult res;
  res.shape_trace.push_back(s.outer_shape());
  while (true) {
    int r = -1;
    for (int k = static_cast<int>(inner.size()); k >= 1; --k)
      if (inner[k - 1] > 0) {
        r = k;
        break;
      }
    if (r < 0) break;
    int c = inner[r - 1];
    --inner[r - 1];
    SlideRecord rec;
    int hr = r, hc = c;
    rec.hole_path.push_back({hr, hc});
    while (true) {
      int vr = g.cell[hr][hc + 1];
      int vb = g.cell[hr + 1][hc];
      if (!vr && !vb) {
        g.cell[hr][hc] = 0;
        break;
      }
      if (vb && (!vr || vb <= vr)) {
        g.cell[hr][hc] = vb;
        ++hr;
      } else {
        g.cell[hr][hc] = vr;
        ++hc;
      }
      rec.hole_path.push_back({hr, hc});
    }
    for (int k = 1; k <= g.rows; ++k) {
      int len = 0;
      for (int cc = 1; cc <= g.cols; ++cc)
        if (g.cell[k][cc]) len = cc;
      rec.outer_after.push_back(len);
    }
    res.shape_trace.push_back(rec.outer_after);
    res.trace.push_back(rec);
  }
  SkewTableau out;
  out.nletters = s.nletters;
  for (int r = 1; r <= g.rows; ++r) {
    std::vector<int> row;
    for (int c = 1; c <= g.cols; ++c)
      if (g.cell[r][c]) row.push_back(g.cell[r][c]);
    out.rows.push_back(row);
  }
  while (static_cast<int>(out.rows.size()) > s.nletters &&
         out.rows.back().empty())
    out.rows.pop_back();
  out.rows.resize(std::max<size_t>(out.rows.size(), s.nletters));
  out.inner.assign(out.rows.size(), 0);
  if (!is_valid_tableau(out))
    throw std::logic_error("jdt_rectify: slides produced an invalid tableau");
  res.rectified = out;
  return res;
}

SkewTableau row_insert(const SkewTableau& t, int a) {
  if (!t.is_straight())
    throw std::invalid_argument("row_insert: straight shape required");
  if (a < 1 || a > t.nletters)
    throw std::invalid_argument("row_insert: letter out of range");
  SkewTableau out = t;
  int carry = a;
  for (int r = 0; r < out.row_count(); ++r) {
    auto& row = out.rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), carry);
    if (it == row.end()) {
      row.push_back(carry);
      assert(is_valid_tableau(out));
      return out;
    }
    std::swap(carry, *it);
  }
  throw std::invalid_argument("row_insert: bumping overflowed past row n");
}

std::vector<SkewTableau> jdt_stages(const SkewTableau& t,
                                    const SkewTableau& u) {
  if (!t.is_straight() || !u.is_straight())
    throw std::invalid_argument("jdt_stages: straight shapes required");
  std::vector<SkewTableau> stages{t};
  for (int k = u.row_count(); k >= 1; --k) {
    SkewTableau cur = stages.back();
    for (int a : u.rows[k - 1]) cur = row_insert(cur, a);
    stages.push_back(cur);
  }
  return stages;
}

GTPattern recording_tableau(const SkewTableau& t, const SkewTableau& u) {
  int n = t.nletters;
  if (u.row_count() > n)
    throw std::invalid_argument("recording_tableau: U has more than n rows");
  auto stages = jdt_stages(t, u);
  int m = u.row_count();
  // shape of J^k, padded to n parts
  auto shape = [&](int k) {
    Partition sh = stages[m - k].outer_shape();
    sh.resize(n, 0);
    return sh;
  };
  GTPattern g;
  g.entries.resize(n);
  for (int i = 1; i <= n; ++i) {
    g.entries[i - 1].resize(i);
    for (int j = 1; j <= i; ++j) {
      Partition hi = shape(std::min(i - j + 1, m));
      Partition lo = shape(std::min(i - j, m));
      int sum = 0;
      for (int r = j; r <= n; ++r) sum += hi[r - 1];
      for (int r = j + 1; r <= n; ++r) sum -= lo[r - 1];
      g.at(i, j) = sum;
    }
  }
  return g;
}

GTPattern bender_knuth(const GTPattern& g, int i) {
  if (i < 1 || i >= g.n())
    throw std::invalid_argument("bender_knuth: index out of range");
  GTPattern out = g;
  for (int j = 1; j <= i; ++j) {
    int mn = g.at(i + 1, j);
    if (j >= 2) mn = std::min(mn, g.at(i - 1, j - 1));
    int mx = g.at(i + 1, j + 1);
    if (j <= i - 1) mx = std::max(mx, g.at(i - 1, j));
    out.at(i, j) = mn + mx - g.at(i, j);
  }
  return out;
}

GTPattern schutzenberger(const GTPattern& g) {
  GTPattern out = g;
  for (int k = g.n() - 1; k >= 1; --k)
    for (int i = 1; i <= k; ++i) out = bender_knuth(out, i);
  return out;
}

std::string tableau_to_string(const SkewTableau& t) {
  std::ostringstream os;
  if (!t.is_straight()) {
    os << "inner:";
    for (int v : t.inner) os << " " << v;
    os << "\n";
  }
  int last = t.row_count();
  while (last > 0 && t.rows[last - 1].empty()) --last;
  for (int r = 0; r < last; ++r) {
    for (size_t k = 0; k < t.rows[r].size(); ++k) {
      if (k) os << " ";
      os << t.rows[r][k];
    }
    os << "\n";
  }
  return os.str();
}

std::string gt_to_string(const GTPattern& g) {
  std::ostringstream os;
  for (int i = 1; i <= g.n(); ++i) {
    for (int j = 1; j <= i; ++j) {
      if (j > 1) os << " ";
      os << g.at(i, j);
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace hives
