// Shared test utilities: a deterministic RNG, random game generators tuned
// to produce payoff ties, and independent brute-force oracles implementing
// the definitions literally (quantifier-by-quantifier). The oracles must not
// share code with the library paths they check.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flatgame/game.hpp"

namespace flatgame::testutil {

class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

// Integer payoffs in [lo, hi]; the small range makes ties likely, which is
// what exercises the equality-based solution concepts.
inline FiniteGame random_game(TestRng& rng, int max_dim = 5, int lo = -5,
                              int hi = 5) {
  int m = rng.range(2, max_dim);
  int n = rng.range(2, max_dim);
  Matrix p1(m, std::vector<Rational>(n));
  Matrix p2(m, std::vector<Rational>(n));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      p1[r][c] = Rational(rng.range(lo, hi));
      p2[r][c] = Rational(rng.range(lo, hi));
    }
  }
  return make_game(p1, p2, "random");
}

// Zero-sum with independent positive-affine rescalings per player; strictly
// competitive by construction.
inline FiniteGame random_competitive_game(TestRng& rng, int max_dim = 5) {
  int m = rng.range(2, max_dim);
  int n = rng.range(2, max_dim);
  int a1 = rng.range(1, 3), b1 = rng.range(-2, 2);
  int a2 = rng.range(1, 3), b2 = rng.range(-2, 2);
  Matrix p1(m, std::vector<Rational>(n));
  Matrix p2(m, std::vector<Rational>(n));
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      int v = rng.range(-5, 5);
      p1[r][c] = Rational(a1 * v + b1);
      p2[r][c] = Rational(-a2 * v + b2);
    }
  }
  return make_game(p1, p2, "random-competitive");
}

inline FiniteGame random_symmetric_game(TestRng& rng, int max_dim = 5) {
  int n = rng.range(2, max_dim);
  Matrix p1(n, std::vector<Rational>(n));
  Matrix p2(n, std::vector<Rational>(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      p1[r][c] = Rational(rng.range(-5, 5));
    }
  }
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      p2[r][c] = p1[c][r];
    }
  }
  return make_game(p1, p2, "random-symmetric");
}

// Literal pairwise definition of strict competitiveness, quadratic scan.
inline bool oracle_strictly_competitive(const FiniteGame& g) {
  std::vector<PureProfile> all;
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) all.push_back({r, c});
  }
  for (PureProfile p : all) {
    for (PureProfile q : all) {
      bool up1 = g.payoff1(p.row, p.col) < g.payoff1(q.row, q.col);
      bool down2 = g.payoff2(q.row, q.col) < g.payoff2(p.row, p.col);
      if (up1 != down2) return false;
    }
  }
  return true;
}

// Literal definition of the lower payoff: scan the co-player's not-worse
// deviations one by one.
inline Rational oracle_lower_payoff(const FiniteGame& g, int player,
                                    PureProfile p) {
  std::optional<Rational> best;
  if (player == 1) {
    const Rational& keep = g.payoff2(p.row, p.col);
    for (int c = 0; c < g.cols(); ++c) {
      if (g.payoff2(p.row, c) >= keep) {
        const Rational& v = g.payoff1(p.row, c);
        if (!best || v < *best) best = v;
      }
    }
  } else {
    const Rational& keep = g.payoff1(p.row, p.col);
    for (int r = 0; r < g.rows(); ++r) {
      if (g.payoff1(r, p.col) >= keep) {
        const Rational& v = g.payoff2(r, p.col);
        if (!best || v < *best) best = v;
      }
    }
  }
  return *best;
}

// Literal per-profile Nash check.
inline bool oracle_is_ne(const FiniteGame& g, PureProfile p) {
  for (int r = 0; r < g.rows(); ++r) {
    if (g.payoff1(p.row, p.col) < g.payoff1(r, p.col)) return false;
  }
  for (int c = 0; c < g.cols(); ++c) {
    if (g.payoff2(p.row, p.col) < g.payoff2(p.row, c)) return false;
  }
  return true;
}

// Literal quadratic Pareto scans.
inline bool oracle_pareto_optimal(const FiniteGame& g, PureProfile p) {
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      if (g.payoff1(p.row, p.col) < g.payoff1(r, c) &&
          g.payoff2(p.row, p.col) < g.payoff2(r, c)) {
        return false;
      }
    }
  }
  return true;
}

inline bool oracle_strong_pareto_optimal(const FiniteGame& g, PureProfile p) {
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      bool weak1 = g.payoff1(r, c) >= g.payoff1(p.row, p.col);
      bool weak2 = g.payoff2(r, c) >= g.payoff2(p.row, p.col);
      bool strict = g.payoff1(r, c) > g.payoff1(p.row, p.col) ||
                    g.payoff2(r, c) > g.payoff2(p.row, p.col);
      if (weak1 && weak2 && strict) return false;
    }
  }
  return true;
}

inline std::vector<PureProfile> profiles_of(const FiniteGame& g) {
  std::vector<PureProfile> all;
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) all.push_back({r, c});
  }
  return all;
}

}  // namespace flatgame::testutil
