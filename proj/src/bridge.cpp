#include "hives/bridge.hpp"

#include <stdexcept>
#include <string>

namespace hives {

GTPattern hat(const TriangleArray& p) {
  int n = p.n();
  GTPattern g;
  g.entries.resize(n);
  for (int i = 1; i <= n; ++i) {
    g.entries[i - 1].resize(i);
    for (int j = 1; j <= i; ++j)
      g.at(i, j) = p.at(i - j, j, n - i) - p.at(i - j + 1, j - 1, n - i);
  }
  return g;
}

GTPattern tilde(const TriangleArray& p) {
  int n = p.n();
  GTPattern g;
  g.entries.resize(n);
  for (int i = 1; i <= n; ++i) {
    g.entries[i - 1].resize(i);
    for (int j = 1; j <= i; ++j)
      g.at(i, j) = p.at(j, n - i, i - j) - p.at(j - 1, n - i, i - j + 1);
  }
  return g;
}

Hive unhat(const GTPattern& t, const DominantWeight& mu) {
  int n = t.n();
  if (static_cast<int>(mu.size()) != n)
    throw std::invalid_argument("unhat: mu must have length n");
  if (!is_valid_gt(t)) throw std::invalid_argument("unhat: not a GT pattern");
  TriangleArray p(n);
  int acc = 0;
  for (int k = 1; k <= n; ++k) {
    acc += mu[k - 1];
    p.at(k, 0, n - k) = acc;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      p.at(i - j, j, n - i) = p.at(i - j + 1, j - 1, n - i) + t.at(i, j);
  if (!check_hive(p))
    throw std::invalid_argument(
        "unhat: pattern is not mu-dominant (vertical rhombus fails)");
  return Hive(p);
}

namespace {

SectionEmbedding make_embedding(int n, const char* tag,
                                LatticePoint (*f)(int, int, int, int)) {
  return SectionEmbedding{tag, [n, f](TrianglePoint p) {
                            return f(p.x, p.y, p.z, n);
                          }};
}

}  // namespace

SectionEmbedding assoc_input_left(int n) {
  return make_embedding(n, "assoc-input-left", [](int x, int y, int z, int nn) {
    return LatticePoint{x, nn - z, y};
  });
}

SectionEmbedding assoc_input_right(int n) {
  return make_embedding(n, "assoc-input-right", [](int x, int y, int z, int nn) {
    return LatticePoint{nn - z, y, x};
  });
}

SectionEmbedding assoc_output_left(int n) {
  return make_embedding(n, "assoc-output-left", [](int x, int y, int z, int nn) {
    return LatticePoint{nn - y, nn - z, nn - x};
  });
}

SectionEmbedding assoc_output_right(int n) {
  return make_embedding(n, "assoc-output-right", [](int x, int y, int z, int nn) {
    return LatticePoint{x, y, nn - z};
  });
}

SectionEmbedding commute_input(int n) {
  return make_embedding(n, "commute-input", [](int x, int y, int z, int nn) {
    return LatticePoint{z, x, nn - y};
  });
}

SectionEmbedding commute_output(int n) {
  return make_embedding(n, "commute-output", [](int x, int y, int z, int nn) {
    return LatticePoint{x, y, nn + z};
  });
}

SectionEmbedding assoc_stage(int n, int k) {
  SectionEmbedding e;
  e.tag = "assoc-stage-" + std::to_string(k);
  e.map = [n, k](TrianglePoint p) {
    if (p.x < k) return LatticePoint{p.x, n - p.z, p.y};
    if (p.x == k) {
      // overlap consistency of the two branches
      LatticePoint a{p.x, n - p.z, p.y};
      LatticePoint b{p.x, p.y + k, n - k - p.z};
      if (!(a == b))
        throw std::logic_error("assoc_stage: branch mismatch at x = k");
      return a;
    }
    return LatticePoint{p.x, p.y + k, n - k - p.z};
  };
  return e;
}

AssociateResult associate(const TriangleArray& m, const TriangleArray& n) {
  int nn = m.n();
  if (n.n() != nn)
    throw std::invalid_argument("associate: hives must share size");
  // representatives may differ by a constant along the shared edge; keep M
  // and shift N to agree
  int c = m.at(0, 0, nn) - n.at(0, 0, nn);
  for (int k = 0; k <= nn; ++k)
    if (m.at(k, 0, nn - k) != n.at(0, k, nn - k) + c)
      throw std::invalid_argument(
          "associate: upper-left edge of M differs from upper-right edge of N");
  SpacetimeState f(nn);
  auto el = assoc_input_left(nn), er = assoc_input_right(nn);
  for (int x = 0; x <= nn; ++x)
    for (int y = 0; x + y <= nn; ++y) {
      int z = nn - x - y;
      f.set(el(x, y, z), m.at(x, y, z));
      f.set(er(x, y, z), n.at(x, y, z) + c);
    }
  SpacetimeState evolved = evolve(f, tetrahedron_region(nn));
  AssociateResult res{evolved,
                      read_section_raw(evolved, nn, assoc_output_left(nn)),
                      read_section_raw(evolved, nn, assoc_output_right(nn))};
  return res;
}

AssociateInverseResult associate_inverse(const TriangleArray& p,
                                         const TriangleArray& q) {
  int nn = p.n();
  if (q.n() != nn)
    throw std::invalid_argument("associate_inverse: hives must share size");
  // shared edge: NE of P against the bottom of Q, up to one constant
  int c = q.at(nn, 0, 0) - p.at(0, 0, nn);
  for (int k = 0; k <= nn; ++k)
    if (q.at(nn - k, k, 0) - p.at(0, k, nn - k) != c)
      throw std::invalid_argument(
          "associate_inverse: upper-right edge of P differs from bottom edge "
          "of Q");
  SpacetimeState f(nn);
  auto el = assoc_output_left(nn), er = assoc_output_right(nn);
  for (int x = 0; x <= nn; ++x)
    for (int y = 0; x + y <= nn; ++y) {
      int z = nn - x - y;
      f.set(el(x, y, z), p.at(x, y, z) + c);
      f.set(er(x, y, z), q.at(x, y, z));
    }
  SpacetimeState evolved = evolve_backward(f, tetrahedron_region(nn));
  AssociateInverseResult res{evolved,
                             read_section_raw(evolved, nn, assoc_input_left(nn)),
                             read_section_raw(evolved, nn, assoc_input_right(nn))};
  return res;
}

CommuteResult commute(const TriangleArray& p) {
  int nn = p.n();
  SpacetimeState f(nn);
  auto e = commute_input(nn);
  for (int x = 0; x <= nn; ++x)
    for (int y = 0; x + y <= nn; ++y) f.set(e(x, y, nn - x - y), p.at(x, y, nn - x - y));
  SpacetimeState evolved = evolve(f, quarter_octahedron_region(nn));
  CommuteResult res{evolved, read_section_raw(evolved, nn, commute_output(nn))};
  return res;
}

std::vector<TriangleArray> assoc_stages(const AssociateResult& r) {
  int n = r.state.n();
  std::vector<TriangleArray> out;
  for (int k = n; k >= 0; --k)
    out.push_back(read_section_raw(r.state, n, assoc_stage(n, k)));
  return out;
}

SectionEmbedding StandardEmbedding::embedding() const {
  SectionEmbedding e;
  e.tag = "standard";
  auto hh = h;
  e.map = [hh](TrianglePoint p) { return LatticePoint{p.x, p.y, hh[p.z]}; };
  return e;
}

StandardEmbedding initial_standard_embedding(int n) {
  StandardEmbedding r;
  r.n = n;
  r.h.resize(n + 1);
  for (int z = 0; z <= n; ++z) r.h[z] = n - z;
  return r;
}

bool is_flippable(const StandardEmbedding& r, int i) {
  int n = r.n;
  if (i == 0) return r.h[n - 1] == r.h[n] + 1;
  if (i < 1 || i > n - 1) return false;
  return r.h[n - i + 1] == r.h[n - i] + 1 && r.h[n - i - 1] == r.h[n - i] + 1;
}

bool is_flippable_down(const StandardEmbedding& r, int i) {
  int n = r.n;
  if (i == 0) return r.h[n - 1] == r.h[n] - 1;
  if (i < 1 || i > n - 1) return false;
  return r.h[n - i + 1] == r.h[n - i] - 1 && r.h[n - i - 1] == r.h[n - i] - 1;
}

namespace {

FlipResult flip_impl(const TriangleArray& mq, const StandardEmbedding& r,
                     int i, bool up) {
  int n = r.n;
  SpacetimeState f(n);
  auto e = r.embedding();
  for (int x = 0; x <= n; ++x)
    for (int y = 0; x + y <= n; ++y) {
      int z = n - x - y;
      f.set(e(x, y, z), mq.at(x, y, z));
    }
  FlipResult out{mq, r};
  int z = n - i;
  out.embedding.h[z] += up ? 2 : -2;
  for (int x = 0; x <= i; ++x) {
    int y = i - x;
    LatticePoint target{x, y, out.embedding.h[z]};
    out.quasi.at(x, y, z) =
        up ? step_value(f, target) : step_value_backward(f, target);
  }
  return out;
}

}  // namespace

FlipResult flip(const TriangleArray& mq, const StandardEmbedding& r, int i) {
  if (!is_flippable(r, i))
    throw std::invalid_argument("flip: embedding is not " + std::to_string(i) +
                                "-flippable");
  return flip_impl(mq, r, i, true);
}

FlipResult flip_down(const TriangleArray& mq, const StandardEmbedding& r,
                     int i) {
  if (!is_flippable_down(r, i))
    throw std::invalid_argument("flip_down: embedding is not " +
                                std::to_string(i) + "-flippable downward");
  return flip_impl(mq, r, i, false);
}

std::vector<FlipResult> commute_stages(const TriangleArray& p) {
  int n = p.n();
  CommuteResult cr = commute(p);
  StandardEmbedding r = initial_standard_embedding(n);
  std::vector<FlipResult> out;
  out.push_back({read_section_raw(cr.state, n, r.embedding()), r});
  for (int k = n - 1; k >= 0; --k)
    for (int i = 0; i <= k; ++i) {
      FlipResult next = flip(out.back().quasi, out.back().embedding, i);
      out.push_back(next);
    }
  return out;
}

}  // namespace hives
