#include "flatgame/multiplayer.hpp"

#include <algorithm>

#include "flatgame/errors.hpp"
#include "flatgame/game.hpp"

namespace flatgame {

namespace {
constexpr int kMaxPlayers = 4;
constexpr long long kMaxProfiles = 100000;
}  // namespace

TensorGame::TensorGame(std::vector<int> strategy_counts,
                       std::vector<std::vector<Rational>> payoffs,
                       std::string title)
    : counts_(std::move(strategy_counts)),
      payoffs_(std::move(payoffs)),
      title_(std::move(title)) {
  if (counts_.size() < 2) {
    throw BadParamsError("tensor game needs at least two players");
  }
  for (int c : counts_) {
    if (c < 1) throw BadParamsError("strategy counts must be positive");
    total_ *= c;
  }
  strides_.assign(counts_.size(), 1);
  for (int i = players() - 2; i >= 0; --i) {
    strides_[i] = strides_[i + 1] * counts_[i + 1];
  }
  if (static_cast<int>(payoffs_.size()) != players()) {
    throw ShapeMismatchError("need one payoff tensor per player");
  }
  for (const auto& t : payoffs_) {
    if (static_cast<long long>(t.size()) != total_) {
      throw ShapeMismatchError("payoff tensor does not cover the profile space");
    }
  }
}

long long TensorGame::index_of(const TensorProfile& p) const {
  long long ix = 0;
  for (int i = 0; i < players(); ++i) ix += strides_[i] * p.strategies[i];
  return ix;
}

TensorProfile TensorGame::profile_at(long long flat_index) const {
  TensorProfile p;
  p.strategies.resize(players());
  for (int i = 0; i < players(); ++i) {
    p.strategies[i] = static_cast<int>(flat_index / strides_[i]) % counts_[i];
  }
  return p;
}

void TensorGame::require_in_range(const TensorProfile& p) const {
  if (static_cast<int>(p.strategies.size()) != players()) {
    throw DomainError("profile has wrong player count");
  }
  for (int i = 0; i < players(); ++i) {
    if (p.strategies[i] < 0 || p.strategies[i] >= counts_[i]) {
      throw DomainError("profile strategy out of range for player " +
                        std::to_string(i + 1));
    }
  }
}

TensorGame TensorGame::from_bimatrix(const FiniteGame& g) {
  std::vector<std::vector<Rational>> payoffs(2);
  payoffs[0].reserve(g.rows() * g.cols());
  payoffs[1].reserve(g.rows() * g.cols());
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      payoffs[0].push_back(g.payoff1(r, c));
      payoffs[1].push_back(g.payoff2(r, c));
    }
  }
  return TensorGame({g.rows(), g.cols()}, std::move(payoffs), g.title());
}

namespace {

void check_budget(const TensorGame& g) {
  if (g.players() > kMaxPlayers || g.profile_count() > kMaxProfiles) {
    throw BudgetExceededError(
        "tensor game exceeds the exhaustive enumeration budget (" +
        std::to_string(g.players()) + " players, " +
        std::to_string(g.profile_count()) + " profiles)");
  }
}

// Enumerates all profiles that agree with p on the fixed coordinate set and
// feeds them to fn. `fixed` is a bitmask over players.
template <typename Fn>
void for_each_deviation(const TensorGame& g, const TensorProfile& p,
                        unsigned fixed, Fn&& fn) {
  TensorProfile q = p;
  const int n = g.players();
  auto rec = [&](auto&& self, int player) -> void {
    if (player == n) {
      fn(q);
      return;
    }
    if (fixed & (1u << player)) {
      q.strategies[player] = p.strategies[player];
      self(self, player + 1);
      return;
    }
    for (int s = 0; s < g.strategy_counts()[player]; ++s) {
      q.strategies[player] = s;
      self(self, player + 1);
    }
  };
  rec(rec, 0);
}

Rational lower_payoff_impl(const TensorGame& g, int player,
                           const TensorProfile& p, bool include_self) {
  std::vector<Rational> base(g.players());
  for (int j = 0; j < g.players(); ++j) base[j] = g.payoff(j, p);

  Rational best = base[player];
  unsigned fixed = include_self ? 0u : (1u << player);
  for_each_deviation(g, p, fixed, [&](const TensorProfile& q) {
    // Admissible iff everyone who moved is not worse off; taking the moved
    // set itself as the coalition J witnesses the existential quantifier.
    for (int j = 0; j < g.players(); ++j) {
      if (q.strategies[j] != p.strategies[j] && g.payoff(j, q) < base[j]) {
        return;
      }
    }
    const Rational& val = g.payoff(player, q);
    if (val < best) best = val;
  });
  return best;
}

}  // namespace

Rational lower_payoff_n(const TensorGame& g, int player,
                        const TensorProfile& p, bool include_self) {
  g.require_in_range(p);
  if (player < 0 || player >= g.players()) {
    throw DomainError("player index out of range");
  }
  check_budget(g);
  return lower_payoff_impl(g, player, p, include_self);
}

TensorGame flat_tensor_game(const TensorGame& g, bool include_self) {
  check_budget(g);
  std::vector<std::vector<Rational>> flats(
      g.players(), std::vector<Rational>(g.profile_count()));
  for (long long ix = 0; ix < g.profile_count(); ++ix) {
    TensorProfile p = g.profile_at(ix);
    for (int i = 0; i < g.players(); ++i) {
      flats[i][ix] = lower_payoff_impl(g, i, p, include_self);
    }
  }
  return TensorGame(g.strategy_counts(), std::move(flats),
                    g.title() + " [flat]");
}

std::vector<TensorProfile> m_equilibria_n(const TensorGame& g,
                                          bool include_self) {
  TensorGame flat = flat_tensor_game(g, include_self);
  std::vector<TensorProfile> out;
  for (long long ix = 0; ix < g.profile_count(); ++ix) {
    TensorProfile p = flat.profile_at(ix);
    bool is_ne = true;
    for (int i = 0; i < flat.players() && is_ne; ++i) {
      TensorProfile q = p;
      for (int s = 0; s < flat.strategy_counts()[i]; ++s) {
        q.strategies[i] = s;
        if (flat.payoff(i, p) < flat.payoff(i, q)) {
          is_ne = false;
          break;
        }
      }
    }
    if (is_ne) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace flatgame
