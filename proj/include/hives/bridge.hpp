#pragma once

#include <vector>

#include "hives/spacetime.hpp"
#include "hives/tableau.hpp"
#include "hives/triangle.hpp"

namespace hives {

// P-hat(i,j) = P(i-j, j, n-i) - P(i-j+1, j-1, n-i): row differences.
// Takes quasi-hives to GT patterns.
GTPattern hat(const TriangleArray& p);

// P-tilde(i,j) = P(j, n-i, i-j) - P(j-1, n-i, i-j+1): north-east differences.
GTPattern tilde(const TriangleArray& p);

// Inverse of hat on mu-dominant patterns: rebuild the hive with left edge
// given by the prefix sums of mu.  Rejects inputs whose rebuilt array fails
// the hive condition.
Hive unhat(const GTPattern& t, const DominantWeight& mu);

// Embeddings used by the associator and commutor constructions.
SectionEmbedding assoc_input_left(int n);    // M: (x,y,z) -> (x, n-z, y)
SectionEmbedding assoc_input_right(int n);   // N: (x,y,z) -> (n-z, y, x)
SectionEmbedding assoc_output_left(int n);   // P: (x,y,z) -> (n-y, n-z, n-x)
SectionEmbedding assoc_output_right(int n);  // Q: (x,y,z) -> (x, y, n-z)
SectionEmbedding commute_input(int n);       // (x,y,z) -> (z, x, n-y)
SectionEmbedding commute_output(int n);      // (x,y,z) -> (x, y, n+z)
// Stage embedding r^k of the associator region.
SectionEmbedding assoc_stage(int n, int k);

struct AssociateResult {
  SpacetimeState state;      // the fully evolved tetrahedron
  TriangleArray p_raw, q_raw;

  Hive p() const { return Hive(p_raw); }
  Hive q() const { return Hive(q_raw); }
};

// Seed the section |x-y| with M and N (shared edge required), evolve over the
// tetrahedron, read P and Q.  Raw outputs keep the absolute values of the
// evolved state.
AssociateResult associate(const TriangleArray& m, const TriangleArray& n);

struct AssociateInverseResult {
  SpacetimeState state;
  TriangleArray m_raw, n_raw;

  Hive m() const { return Hive(m_raw); }
  Hive n() const { return Hive(n_raw); }
};

// Seed the top section with P and Q (shared edge up to a constant; Q is kept,
// P is shifted to agree), evolve backward, read M and N.
AssociateInverseResult associate_inverse(const TriangleArray& p,
                                         const TriangleArray& q);

struct CommuteResult {
  SpacetimeState state;  // the evolved 1/4-octahedron
  TriangleArray star_raw;

  Hive star() const { return Hive(star_raw); }
};

// Seed the bottom face of the 1/4-octahedron with P, evolve, read P*.
CommuteResult commute(const TriangleArray& p);

// Quasi-hive stages Q^n ... Q^0 of the associator; hat of stage k equals the
// Jeu de Taquin stage J^k.
std::vector<TriangleArray> assoc_stages(const AssociateResult& r);

// Standard embedding (x,y,z) -> (x,y,h(z)) with h(0) = n, |h(z+1)-h(z)| = 1.
struct StandardEmbedding {
  int n = 0;
  std::vector<int> h;  // h[0..n]

  bool operator==(const StandardEmbedding&) const = default;
  SectionEmbedding embedding() const;
};

StandardEmbedding initial_standard_embedding(int n);  // h(z) = n-z

bool is_flippable(const StandardEmbedding& r, int i);
// the z = n-i layer sits two above its neighbours, so it can come back down
bool is_flippable_down(const StandardEmbedding& r, int i);

struct FlipResult {
  TriangleArray quasi;
  StandardEmbedding embedding;
};

// One i-flip: raise the z = n-i layer by 2, one octahedron step per affected
// point; hat(t_i(M)) = s_i(hat(M)) for i >= 1, and t_0 changes only the apex.
FlipResult flip(const TriangleArray& mq, const StandardEmbedding& r, int i);
// Inverse move: lower the layer by 2 with the backward recurrence.
FlipResult flip_down(const TriangleArray& mq, const StandardEmbedding& r,
                     int i);

// The full commutor flip sequence t_0 (t_1 t_0) ... (t_{n-1} ... t_0),
// rightmost applied first, starting from f o r with h(z) = n-z.  Returns all
// 1 + n(n+1)/2 stages; the last one is P*.
std::vector<FlipResult> commute_stages(const TriangleArray& p);

}  // namespace hives
