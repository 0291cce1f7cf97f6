#include "flatgame/mixed.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

#include "flatgame/equilibrium.hpp"
#include "flatgame/errors.hpp"

namespace flatgame {

MixedStrategy::MixedStrategy(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw PreconditionError("mixed strategy needs at least one weight");
  }
  Rational total;
  for (const Rational& w : weights_) {
    if (w < Rational(0)) {
      throw PreconditionError("mixed strategy weights must be non-negative");
    }
    total += w;
  }
  if (total != Rational(1)) {
    throw PreconditionError("mixed strategy weights must sum to 1, got " +
                            total.str());
  }
}

MixedStrategy MixedStrategy::dirac(int size, int index) {
  std::vector<Rational> w(size, Rational(0));
  w.at(index) = Rational(1);
  return MixedStrategy(std::move(w));
}

MixedStrategy MixedStrategy::uniform(int size) {
  std::vector<Rational> w(size, Rational(1, size));
  return MixedStrategy(std::move(w));
}

std::vector<int> MixedStrategy::support() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (!weights_[i].is_zero()) out.push_back(i);
  }
  return out;
}

bool MixedStrategy::is_dirac() const { return support().size() == 1; }

namespace {

void require_dimensions(const FiniteGame& g, const MixedProfile& mp) {
  if (mp.strat1.size() != g.rows() || mp.strat2.size() != g.cols()) {
    throw DimensionMismatchError("mixed profile does not fit a " +
                                 std::to_string(g.rows()) + "x" +
                                 std::to_string(g.cols()) + " game");
  }
}

// Expected payoff of `player` when player 1 plays pure row r against rho2.
Rational row_payoff(const FiniteGame& g, int player, int r,
                    const MixedStrategy& rho2) {
  Rational out;
  for (int c = 0; c < g.cols(); ++c) {
    if (rho2.weight(c).is_zero()) continue;
    out += rho2.weight(c) * g.payoff(player, r, c);
  }
  return out;
}

Rational col_payoff(const FiniteGame& g, int player, int c,
                    const MixedStrategy& rho1) {
  Rational out;
  for (int r = 0; r < g.rows(); ++r) {
    if (rho1.weight(r).is_zero()) continue;
    out += rho1.weight(r) * g.payoff(player, r, c);
  }
  return out;
}

}  // namespace

Rational expected_payoff(const FiniteGame& g, const MixedProfile& mp,
                         int player) {
  require_dimensions(g, mp);
  Rational out;
  for (int r = 0; r < g.rows(); ++r) {
    if (mp.strat1.weight(r).is_zero()) continue;
    out += mp.strat1.weight(r) * row_payoff(g, player, r, mp.strat2);
  }
  return out;
}

bool is_mixed_ne(const FiniteGame& g, const MixedProfile& mp) {
  require_dimensions(g, mp);
  Rational base1 = expected_payoff(g, mp, 1);
  for (int r = 0; r < g.rows(); ++r) {
    if (base1 < row_payoff(g, 1, r, mp.strat2)) return false;
  }
  Rational base2 = expected_payoff(g, mp, 2);
  for (int c = 0; c < g.cols(); ++c) {
    if (base2 < col_payoff(g, 2, c, mp.strat1)) return false;
  }
  return true;
}

std::vector<int> equal_payoff_deviations(const FiniteGame& g, PureProfile p,
                                         int player) {
  g.require_in_range(p);
  auto ne = nash_equilibria(g);
  if (!std::binary_search(ne.begin(), ne.end(), p)) {
    throw NotEquilibriumError("profile " + g.profile_label(p) +
                              " is not a Nash equilibrium of " + g.title());
  }
  std::vector<int> out;
  if (player == 1) {
    for (int r = 0; r < g.rows(); ++r) {
      if (g.payoff1(r, p.col) == g.payoff1(p.row, p.col)) out.push_back(r);
    }
  } else {
    for (int c = 0; c < g.cols(); ++c) {
      if (g.payoff2(p.row, c) == g.payoff2(p.row, p.col)) out.push_back(c);
    }
  }
  return out;
}

namespace {

using Row = std::vector<Rational>;

// Reduced row echelon form of [A | b]; returns column ranks. Exact.
struct LinearSystem {
  std::vector<Row> rows;  // each of length unknowns + 1 (rhs last)
  int unknowns = 0;

  void add(Row coeffs, Rational rhs) {
    coeffs.push_back(rhs);
    rows.push_back(std::move(coeffs));
  }

  // Unique solution if the system is consistent with full column rank.
  std::optional<std::vector<Rational>> solve_unique() const {
    std::vector<Row> a = rows;
    const int n = unknowns;
    int rank = 0;
    std::vector<int> pivot_col;
    for (int col = 0; col < n && rank < static_cast<int>(a.size()); ++col) {
      int pivot = -1;
      for (int r = rank; r < static_cast<int>(a.size()); ++r) {
        if (!a[r][col].is_zero()) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) continue;
      std::swap(a[rank], a[pivot]);
      Rational inv = Rational(1) / a[rank][col];
      for (Rational& v : a[rank]) v *= inv;
      for (int r = 0; r < static_cast<int>(a.size()); ++r) {
        if (r == rank || a[r][col].is_zero()) continue;
        Rational factor = a[r][col];
        for (int k = col; k <= n; ++k) a[r][k] -= factor * a[rank][k];
      }
      pivot_col.push_back(col);
      ++rank;
    }
    for (int r = rank; r < static_cast<int>(a.size()); ++r) {
      if (!a[r][n].is_zero()) return std::nullopt;  // inconsistent
    }
    if (rank < n) return std::nullopt;  // underdetermined
    std::vector<Rational> x(n);
    for (int r = 0; r < rank; ++r) x[pivot_col[r]] = a[r][n];
    return x;
  }
};

// Feasibility polytope of one player's mixture for a fixed support pair:
//   equalities: co-player indifferent across their support, weights sum to 1
//   inequalities: strategies outside the co-player's support not better,
//                 weights non-negative
// Vertices are enumerated by turning inequality subsets into equalities.
struct Polytope {
  LinearSystem equalities;                       // E x = e
  std::vector<std::pair<Row, Rational>> ineqs;   // A x <= b

  bool feasible(const std::vector<Rational>& x) const {
    for (const auto& row : equalities.rows) {
      Rational lhs;
      for (int i = 0; i < equalities.unknowns; ++i) lhs += row[i] * x[i];
      if (lhs != row[equalities.unknowns]) return false;
    }
    for (const auto& [coeffs, rhs] : ineqs) {
      Rational lhs;
      for (size_t i = 0; i < coeffs.size(); ++i) lhs += coeffs[i] * x[i];
      if (rhs < lhs) return false;
    }
    return true;
  }

  std::vector<std::vector<Rational>> vertices() const {
    std::vector<std::vector<Rational>> out;
    const int m = static_cast<int>(ineqs.size());
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      LinearSystem sys = equalities;
      for (int i = 0; i < m; ++i) {
        if (mask & (1u << i)) sys.add(ineqs[i].first, ineqs[i].second);
      }
      auto x = sys.solve_unique();
      if (!x || !feasible(*x)) continue;
      if (std::find(out.begin(), out.end(), *x) == out.end()) {
        out.push_back(std::move(*x));
      }
    }
    return out;
  }
};

// Mixtures of `player` over `support` that make the co-player indifferent
// across co_support and weakly prefer it to everything else.
std::vector<MixedStrategy> support_mixtures(const FiniteGame& g, int player,
                                            const std::vector<int>& support,
                                            const std::vector<int>& co_support) {
  const int co = player == 1 ? 2 : 1;
  const int k = static_cast<int>(support.size());
  const int co_total = player == 1 ? g.cols() : g.rows();
  auto co_payoff = [&](int own, int other) {
    // payoff of the co-player when `player` uses pure strategy `own` and the
    // co-player uses `other`
    return player == 1 ? g.payoff(co, own, other) : g.payoff(co, other, own);
  };

  Polytope poly;
  poly.equalities.unknowns = k;
  const int ref = co_support.front();
  for (size_t t = 1; t < co_support.size(); ++t) {
    Row coeffs(k);
    for (int i = 0; i < k; ++i) {
      coeffs[i] = co_payoff(support[i], co_support[t]) -
                  co_payoff(support[i], ref);
    }
    poly.equalities.add(std::move(coeffs), Rational(0));
  }
  poly.equalities.add(Row(k, Rational(1)), Rational(1));
  for (int other = 0; other < co_total; ++other) {
    if (std::find(co_support.begin(), co_support.end(), other) !=
        co_support.end()) {
      continue;
    }
    Row coeffs(k);
    for (int i = 0; i < k; ++i) {
      coeffs[i] = co_payoff(support[i], other) - co_payoff(support[i], ref);
    }
    poly.ineqs.emplace_back(std::move(coeffs), Rational(0));
  }
  for (int i = 0; i < k; ++i) {
    Row coeffs(k, Rational(0));
    coeffs[i] = Rational(-1);
    poly.ineqs.emplace_back(std::move(coeffs), Rational(0));
  }

  const int total = player == 1 ? g.rows() : g.cols();
  std::vector<MixedStrategy> out;
  for (const auto& x : poly.vertices()) {
    std::vector<Rational> weights(total, Rational(0));
    for (int i = 0; i < k; ++i) weights[support[i]] = x[i];
    out.push_back(MixedStrategy(std::move(weights)));
  }
  return out;
}

void enumerate_supports(int total, int max_size,
                        std::vector<std::vector<int>>& out) {
  for (std::uint32_t mask = 1; mask < (1u << total); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < total; ++i) {
      if (mask & (1u << i)) s.push_back(i);
    }
    if (static_cast<int>(s.size()) <= max_size) out.push_back(std::move(s));
  }
}

}  // namespace

std::vector<MixedProfile> mixed_equilibrium_candidates(const FiniteGame& g,
                                                       int max_support) {
  if (g.rows() > 4 || g.cols() > 4) {
    throw GameTooLargeError("support enumeration is limited to 4x4 games");
  }
  if (max_support < 1 || max_support > 3) {
    throw BadParamsError("max_support must be between 1 and 3");
  }
  std::vector<std::vector<int>> supports1, supports2;
  enumerate_supports(g.rows(), max_support, supports1);
  enumerate_supports(g.cols(), max_support, supports2);

  std::set<MixedProfile> found;
  for (const auto& s1 : supports1) {
    for (const auto& s2 : supports2) {
      auto mixes1 = support_mixtures(g, 1, s1, s2);
      if (mixes1.empty()) continue;
      auto mixes2 = support_mixtures(g, 2, s2, s1);
      for (const auto& rho1 : mixes1) {
        for (const auto& rho2 : mixes2) {
          MixedProfile mp{rho1, rho2};
          if (is_mixed_ne(g, mp)) found.insert(std::move(mp));
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

LiftReport pure_equilibrium_lifts(const FiniteGame& g) {
  LiftReport report;
  report.title = g.title();
  auto sne = strict_ne(g);
  auto ssne = semi_strict_ne(g);
  auto wssne = weakly_semi_strict_ne(g);
  auto member = [](const std::vector<PureProfile>& v, PureProfile p) {
    return std::binary_search(v.begin(), v.end(), p);
  };
  for (PureProfile p : nash_equilibria(g)) {
    ProfileLift lift;
    lift.profile = p;
    lift.in_sne = member(sne, p);
    lift.in_ssne = member(ssne, p);
    lift.in_wssne = member(wssne, p);
    MixedProfile dirac{MixedStrategy::dirac(g.rows(), p.row),
                       MixedStrategy::dirac(g.cols(), p.col)};
    lift.dirac_is_mixed_ne = is_mixed_ne(g, dirac);
    lift.wssne_support_condition = true;
    for (int r : equal_payoff_deviations(g, p, 1)) {
      if (g.payoff2(r, p.col) < g.payoff2(p.row, p.col)) {
        lift.wssne_support_condition = false;
      }
    }
    for (int c : equal_payoff_deviations(g, p, 2)) {
      if (g.payoff1(p.row, c) < g.payoff1(p.row, p.col)) {
        lift.wssne_support_condition = false;
      }
    }
    report.entries.push_back(lift);
  }
  return report;
}

Lottery::Lottery(std::vector<std::pair<Rational, Rational>> outcomes) {
  std::map<Rational, Rational> merged;
  Rational total;
  for (auto& [value, prob] : outcomes) {
    if (!(Rational(0) < prob)) {
      throw PreconditionError("lottery outcomes need positive probability");
    }
    merged[value] += prob;
    total += prob;
  }
  if (total != Rational(1)) {
    throw PreconditionError("lottery probabilities must sum to 1, got " +
                            total.str());
  }
  outcomes_.assign(merged.begin(), merged.end());
}

Lottery outcome_lottery(const FiniteGame& g, const MixedProfile& mp,
                        int player) {
  require_dimensions(g, mp);
  std::vector<std::pair<Rational, Rational>> outcomes;
  for (int r : mp.strat1.support()) {
    for (int c : mp.strat2.support()) {
      outcomes.emplace_back(g.payoff(player, r, c),
                            mp.strat1.weight(r) * mp.strat2.weight(c));
    }
  }
  return Lottery(std::move(outcomes));
}

Rational min_gain(const Lottery& l) { return l.outcomes().front().first; }

Rational expected_gain(const Lottery& l) {
  Rational out;
  for (const auto& [value, prob] : l.outcomes()) out += value * prob;
  return out;
}

std::strong_ordering compare_lotteries_loss_averse(const Lottery& a,
                                                   const Lottery& b) {
  auto primary = min_gain(a) <=> min_gain(b);
  if (primary != std::strong_ordering::equal) return primary;
  return expected_gain(a) <=> expected_gain(b);
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

PureProfile select_equilibrium(const std::vector<PureProfile>& eqs,
                               std::uint64_t seed) {
  if (eqs.empty()) {
    throw EmptySetError("cannot select from an empty equilibrium set");
  }
  const std::uint64_t n = eqs.size();
  // Rejection sampling keeps the draw exactly uniform: accept r only above
  // 2^64 mod n, then reduce.
  const std::uint64_t cutoff = (0 - n) % n;
  std::uint64_t state = seed;
  std::uint64_t r = splitmix64(state++);
  while (r < cutoff) r = splitmix64(state++);
  return eqs[r % n];
}

}  // namespace flatgame
