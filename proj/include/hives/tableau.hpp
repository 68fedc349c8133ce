#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hives/weights.hpp"

namespace hives {

// Semistandard skew tableau with letters in 1..nletters.  rows[r] holds the
// entries of row r+1, occupying columns inner[r]+1 .. inner[r]+rows[r].size().
// Straight tableaux have inner = 0 and exactly nletters rows (trailing rows
// may be empty).
struct SkewTableau {
  int nletters = 0;
  std::vector<int> inner;
  std::vector<std::vector<int>> rows;

  bool operator==(const SkewTableau&) const = default;

  int row_count() const { return static_cast<int>(rows.size()); }
  int outer_len(int r) const {
    return inner[r] + static_cast<int>(rows[r].size());
  }
  Partition outer_shape() const;
  Partition inner_shape() const { return inner; }
  bool is_straight() const;
  int max_col() const;
  // entry at (row r, column c), 1-based column; 0 when the cell is absent
  int entry(int r, int c) const;
};

// Straight tableau of shape lambda (padded to n rows) from its rows.
SkewTableau make_tableau(int n, const std::vector<std::vector<int>>& rows);
SkewTableau make_skew_tableau(int n, const std::vector<int>& inner,
                              const std::vector<std::vector<int>>& rows);

bool is_valid_tableau(const SkewTableau& t);

// Highest and lowest weight tableaux of B_lambda: b_lambda has row i filled
// with i; c_lambda has n at the end of every column, n-1 just above, etc.
SkewTableau highest_weight_tableau(int n, const Partition& lambda);
SkewTableau lowest_weight_tableau(int n, const Partition& lambda);

Weight tableau_weight(const SkewTableau& t);

// Crystal structure on skew tableaux:
//   h_i(j) = #(i+1) - #(i) over columns >= j,  eps_i = max_j h_i(j),
//   k_i(j) = #(i) - #(i+1) over columns <= j,  phi_i = max_j k_i(j),
// with the empty suffix/prefix contributing 0 to both maxima.
int tableau_eps(const SkewTableau& t, int i);
int tableau_phi(const SkewTableau& t, int i);

// e_i / f_i; nullopt encodes the crystal's 0.
std::optional<SkewTableau> tableau_raise(const SkewTableau& t, int i);
std::optional<SkewTableau> tableau_lower(const SkewTableau& t, int i);

// eps_i(T) <= mu_i - mu_{i+1} for all i.
bool is_mu_dominant(const SkewTableau& t, const DominantWeight& mu);

// Skew product: U up and to the right of T.
SkewTableau star_product(const SkewTableau& t, const SkewTableau& u);

// Gelfand-Tsetlin pattern: T(i,j) for 1 <= j <= i <= n with
// T(i,j) >= T(i-1,j) >= T(i,j+1).
struct GTPattern {
  std::vector<std::vector<int>> entries;  // entries[i-1] has i values

  bool operator==(const GTPattern&) const = default;

  int n() const { return static_cast<int>(entries.size()); }
  int at(int i, int j) const { return entries[i - 1][j - 1]; }
  int& at(int i, int j) { return entries[i - 1][j - 1]; }
  Partition base() const { return entries.back(); }
  Weight weight() const;
};

GTPattern make_gt(const std::vector<std::vector<int>>& rows);
bool is_valid_gt(const GTPattern& g);

// T(i,j) = number of entries <= i in row j; mutually inverse bijections
// between straight tableaux and GT patterns with non-negative entries.
GTPattern gt_from_tableau(const SkewTableau& t);
SkewTableau tableau_from_gt(const GTPattern& g);

// All GT patterns with the given base (any weight), i.e. all of B_lambda.
std::vector<GTPattern> enumerate_gt_base(const Partition& lambda);
// All GT patterns with given base and weight.
std::vector<GTPattern> enumerate_gt_base_weight(const Partition& lambda,
                                                const Weight& w);
// All skew tableaux of shape outer/inner with letters in 1..n.
std::vector<SkewTableau> enumerate_skew_tableaux(int n, const Partition& outer,
                                                 const Partition& inner);

// One inward Jeu de Taquin slide path: where the hole started, each cell it
// passed through, and the outer cell it vacated.
struct SlideRecord {
  std::vector<std::pair<int, int>> hole_path;  // (row, col), 1-based
  Partition outer_after;
  bool operator==(const SlideRecord&) const = default;
};

struct JdtResult {
  SkewTableau rectified;
  std::vector<SlideRecord> trace;
  // outer shape before any slide and after each one; dual equivalence of two
  // equal-shape skew tableaux is equality of these sequences
  std::vector<Partition> shape_trace;
};

// Rectification under the canonical slide order: inner corners taken from the
// bottom-most inner row, rightmost box first.
JdtResult jdt_rectify(const SkewTableau& s);

// Classic row bumping of letter a into a straight tableau.
SkewTableau row_insert(const SkewTableau& t, int a);

// Stages J^n ... J^0 where J^{k-1} is J^k with row k of U row-inserted;
// J^0 = J(T * U).
std::vector<SkewTableau> jdt_stages(const SkewTableau& t, const SkewTableau& u);

// Recording pattern R(T,U)(i,j) = sum_{r>=j} shape(J^{i-j+1})_r
//                                - sum_{r>=j+1} shape(J^{i-j})_r.
GTPattern recording_tableau(const SkewTableau& t, const SkewTableau& u);

// Bender-Knuth move s_i: row i reflected within its interlacing range;
// undefined arguments drop out of the min/max.
GTPattern bender_knuth(const GTPattern& g, int i);

// xi = s_1 (s_2 s_1) ... (s_{n-1} ... s_1), rightmost factor applied first.
GTPattern schutzenberger(const GTPattern& g);

std::string tableau_to_string(const SkewTableau& t);
std::string gt_to_string(const GTPattern& g);

}  // namespace hives
