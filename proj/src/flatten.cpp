#include "flatgame/flatten.hpp"

#include <algorithm>
#include <numeric>

#include "flatgame/equilibrium.hpp"
#include "flatgame/errors.hpp"

namespace flatgame {
namespace {

// For one row x of the game, computes m[y] = min{ w[j] : v[j] >= v[y] } for
// all y at once: sort indices by v descending and sweep a running minimum of
// w, assigning a tie group only after the whole group joined the minimum.
std::vector<Rational> min_over_not_worse(const std::vector<Rational>& v,
                                         const std::vector<Rational>& w) {
  const int n = static_cast<int>(v.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return v[b] < v[a]; });
  std::vector<Rational> out(n);
  int k = 0;
  const Rational* running = nullptr;
  while (k < n) {
    int start = k;
    while (k < n && v[order[k]] == v[order[start]]) {
      const Rational& cand = w[order[k]];
      if (running == nullptr || cand < *running) running = &cand;
      ++k;
    }
    for (int t = start; t < k; ++t) out[order[t]] = *running;
  }
  return out;
}

}  // namespace

std::vector<int> not_worse_responses(const FiniteGame& g, int player,
                                     PureProfile p) {
  g.require_in_range(p);
  std::vector<int> out;
  if (player == 1) {
    const Rational& base = g.payoff1(p.row, p.col);
    for (int r = 0; r < g.rows(); ++r) {
      if (!(g.payoff1(r, p.col) < base)) out.push_back(r);
    }
  } else {
    const Rational& base = g.payoff2(p.row, p.col);
    for (int c = 0; c < g.cols(); ++c) {
      if (!(g.payoff2(p.row, c) < base)) out.push_back(c);
    }
  }
  return out;
}

Rational lower_payoff(const FiniteGame& g, int player, PureProfile p) {
  g.require_in_range(p);
  const int co = player == 1 ? 2 : 1;
  Rational best;
  bool first = true;
  for (int s : not_worse_responses(g, co, p)) {
    PureProfile q = co == 2 ? PureProfile{p.row, s} : PureProfile{s, p.col};
    const Rational& val = g.payoff(player, q);
    if (first || val < best) {
      best = val;
      first = false;
    }
  }
  return best;
}

namespace detail {

FiniteGame flatten_once(const FiniteGame& g) {
  const int m = g.rows(), n = g.cols();
  Matrix f1(m, std::vector<Rational>(n));
  Matrix f2(m, std::vector<Rational>(n));
  // P-flat_1(x, .) needs, per row x, minima of P1(x, .) over column sets
  // {yh : P2(x, yh) >= P2(x, y)}.
  std::vector<Rational> v(n), w(n);
  for (int x = 0; x < m; ++x) {
    for (int j = 0; j < n; ++j) {
      v[j] = g.payoff2(x, j);
      w[j] = g.payoff1(x, j);
    }
    f1[x] = min_over_not_worse(v, w);
  }
  std::vector<Rational> vc(m), wc(m);
  for (int y = 0; y < n; ++y) {
    for (int i = 0; i < m; ++i) {
      vc[i] = g.payoff1(i, y);
      wc[i] = g.payoff2(i, y);
    }
    std::vector<Rational> col = min_over_not_worse(vc, wc);
    for (int i = 0; i < m; ++i) f2[i][y] = col[i];
  }
  FiniteGame flat(f1, f2, g.title() + " [flat]");
  std::vector<std::string> row_labels, col_labels;
  for (int r = 0; r < m; ++r) row_labels.push_back(g.row_label(r));
  for (int c = 0; c < n; ++c) col_labels.push_back(g.col_label(c));
  flat.set_labels(std::move(row_labels), std::move(col_labels));
  return flat;
}

}  // namespace detail

FlatGameResult flat_game(const FiniteGame& g) {
  FlatGameResult result{g, detail::flatten_once(g), 1, false, {}, {}};
  result.fixed_point = result.flat.payoffs_equal(g);
  result.nwr1.reserve(g.rows() * g.cols());
  result.nwr2.reserve(g.rows() * g.cols());
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      result.nwr1.push_back(not_worse_responses(g, 1, {r, c}));
      result.nwr2.push_back(not_worse_responses(g, 2, {r, c}));
    }
  }
  return result;
}

std::vector<FlatGameResult> iterate_flatten(const FiniteGame& g, int k) {
  if (k < 1) throw BadParamsError("iteration count must be >= 1");
  std::vector<FlatGameResult> rounds;
  const FiniteGame* current = &g;
  for (int i = 1; i <= k; ++i) {
    FlatGameResult round = flat_game(*current);
    round.iteration = i;
    rounds.push_back(std::move(round));
    if (rounds.back().fixed_point) break;
    current = &rounds.back().flat;
  }
  return rounds;
}

std::vector<PureProfile> m_equilibria(const FiniteGame& g) {
  return nash_equilibria(detail::flatten_once(g));
}

LowerValues lower_values(const FiniteGame& g) {
  auto sup_inf = [](const FiniteGame& game) {
    std::pair<Rational, Rational> out;
    for (int r = 0; r < game.rows(); ++r) {
      Rational worst = game.payoff1(r, 0);
      for (int c = 1; c < game.cols(); ++c) {
        worst = min(worst, game.payoff1(r, c));
      }
      if (r == 0 || out.first < worst) out.first = worst;
    }
    for (int c = 0; c < game.cols(); ++c) {
      Rational worst = game.payoff2(0, c);
      for (int r = 1; r < game.rows(); ++r) {
        worst = min(worst, game.payoff2(r, c));
      }
      if (c == 0 || out.second < worst) out.second = worst;
    }
    return out;
  };
  LowerValues lv;
  auto [p1, p2] = sup_inf(g);
  lv.payoff1 = p1;
  lv.payoff2 = p2;
  auto [f1, f2] = sup_inf(detail::flatten_once(g));
  lv.flat1 = f1;
  lv.flat2 = f2;
  return lv;
}

bool competitive_flat_check(const FiniteGame& g) {
  if (!is_strictly_competitive(g)) {
    throw PreconditionError(
        "competitive_flat_check requires a strictly competitive game");
  }
  FiniteGame flat = detail::flatten_once(g);
  for (int r = 0; r < g.rows(); ++r) {
    Rational worst = g.payoff1(r, 0);
    for (int c = 1; c < g.cols(); ++c) worst = min(worst, g.payoff1(r, c));
    for (int c = 0; c < g.cols(); ++c) {
      if (flat.payoff1(r, c) != worst) return false;
    }
  }
  for (int c = 0; c < g.cols(); ++c) {
    Rational worst = g.payoff2(0, c);
    for (int r = 1; r < g.rows(); ++r) worst = min(worst, g.payoff2(r, c));
    for (int r = 0; r < g.rows(); ++r) {
      if (flat.payoff2(r, c) != worst) return false;
    }
  }
  return true;
}

}  // namespace flatgame
