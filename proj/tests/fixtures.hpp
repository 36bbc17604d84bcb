#pragma once

// Matrices shared by the test binaries, and a generator of random NI matrices.

#include <random>
#include <string>
#include <vector>

#include "alcove/classify.hpp"
#include "alcove/report.hpp"

namespace fixtures {

using alcove::NiMatrix;
using alcove::Rational;
using alcove::TropMatrix;

inline TropMatrix rows(const std::vector<std::vector<long>>& r) {
  std::vector<std::vector<Rational>> q;
  for (const auto& row : r) q.emplace_back(row.begin(), row.end());
  return TropMatrix::from_rationals(q);
}

inline NiMatrix ni(const std::vector<std::vector<long>>& r) { return NiMatrix(rows(r)); }

/// The eight worked examples, QE1..QE8.
inline const std::vector<NiMatrix>& examples() {
  static const std::vector<NiMatrix> m{
      ni({{0, -4, -5, -8}, {-3, 0, -6, -8}, {-4, -5, 0, -8}, {0, 0, 0, 0}}),
      ni({{0, -4, -5, -8}, {-3, 0, -6, -8}, {-2, -3, 0, -8}, {0, 0, 0, 0}}),
      ni({{0, -5, -6, -8}, {-4, 0, -5, -8}, {-3, -4, 0, -8}, {0, 0, 0, 0}}),
      ni({{0, -4, -5, -8}, {-5, 0, -6, -8}, {-4, -5, 0, -8}, {0, 0, 0, 0}}),
      ni({{0, -5, -6, -8}, {-6, 0, -5, -8}, {-5, -4, 0, -8}, {0, 0, 0, 0}}),
      ni({{0, -6, -5, -8}, {-5, 0, -6, -8}, {-6, -5, 0, -8}, {0, 0, 0, 0}}),
      ni({{0, -5, -6, -8}, {-2, 0, -7, -8}, {-3, -4, 0, -8}, {0, 0, 0, 0}}),
      ni({{0, -4, -5, -8}, {-3, 0, -6, -8}, {-4, -3, 0, -8}, {0, 0, 0, 0}}),
  };
  return m;
}

/// Unit cube centered at the origin, and its visualization.
inline TropMatrix cube_q() { return rows({{0, -2, -2, -1}, {-2, 0, -2, -1}, {-2, -2, 0, -1}, {-1, -1, -1, 0}}); }
inline TropMatrix cube_dq() { return rows({{0, -2, -2, -2}, {-2, 0, -2, -2}, {-2, -2, 0, -2}, {0, 0, 0, 0}}); }
inline TropMatrix cube_q0() { return rows({{1, -1, -1, -1}, {-1, 1, -1, -1}, {-1, -1, 1, -1}, {0, 0, 0, 0}}); }

/// Box B(t) with its top front edge canted by e23 < 0.
inline NiMatrix one_cant(long t1, long t2, long t3, long e23) {
  return ni({{0, t1, t1, t1}, {t2, 0, t2 - e23, t2}, {t3, t3, 0, t3}, {0, 0, 0, 0}});
}

/// Max-plus closure of a random nonpositive zero-diagonal matrix: always NI.
/// Entries are p/q with small q, so rational paths get exercised too.
class RandomNi {
 public:
  explicit RandomNi(unsigned seed) : rng_(seed) {}

  NiMatrix next(long range = 12, long denominator = 1) {
    std::uniform_int_distribution<long> entry(-range * denominator, 0);
    std::vector<std::vector<Rational>> a(4, std::vector<Rational>(4));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a[i][j] = i == j ? Rational(0) : Rational(entry(rng_), denominator);
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i][j] = std::max(a[i][j], Rational(a[i][k] + a[k][j]));
    return NiMatrix(TropMatrix::from_rationals(a));
  }

  /// Random NI matrix whose polyhedron is a maximal dodecahedron. Drawn near
  /// a cube with generic perturbations, which keeps the rejection rate low.
  NiMatrix next_maximal() {
    std::uniform_int_distribution<long> inner(-15, -5), column(-3, 0);
    for (;;) {
      std::vector<std::vector<Rational>> a(4, std::vector<Rational>(4));
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          if (i == j) continue;
          if (j == 3) a[i][j] = -20 + column(rng_);
          else if (i == 3) a[i][j] = column(rng_);
          else a[i][j] = inner(rng_);
        }
      for (int k = 0; k < 4; ++k)
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) a[i][j] = std::max(a[i][j], Rational(a[i][k] + a[k][j]));
      NiMatrix m(TropMatrix::from_rationals(a));
      if (alcove::is_maximal(alcove::build_polytope(m))) return m;
    }
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace fixtures
