// N-player lower payoffs via virtual coalitions, flat tensor games and
// m-equilibria for small N.
//
// A coalition J of players other than i may jointly deviate from a profile
// provided every member of J ends up at least as well off; i's lower payoff
// is the worst payoff over all such admissible coalition deviations (the
// empty coalition always contributes the profile itself). Quantifying over
// the deviation's changed coordinates directly is equivalent: a deviation is
// admissible iff every player whose strategy changed is not worse off.

#pragma once

#include <string>
#include <vector>

#include "flatgame/rational.hpp"

namespace flatgame {

class FiniteGame;

struct TensorProfile {
  std::vector<int> strategies;
  friend bool operator==(const TensorProfile&, const TensorProfile&) = default;
  friend auto operator<=>(const TensorProfile&, const TensorProfile&) = default;
};

class TensorGame {
 public:
  // payoffs[i] is player i's payoff tensor, flattened row-major with the last
  // player's strategy index varying fastest.
  TensorGame(std::vector<int> strategy_counts,
             std::vector<std::vector<Rational>> payoffs, std::string title);

  int players() const { return static_cast<int>(counts_.size()); }
  const std::vector<int>& strategy_counts() const { return counts_; }
  long long profile_count() const { return total_; }
  const std::string& title() const { return title_; }

  const Rational& payoff(int player, const TensorProfile& p) const {
    return payoffs_[player][index_of(p)];
  }
  const Rational& payoff_at(int player, long long flat_index) const {
    return payoffs_[player][flat_index];
  }
  long long index_of(const TensorProfile& p) const;
  TensorProfile profile_at(long long flat_index) const;
  void require_in_range(const TensorProfile& p) const;

  bool payoffs_equal(const TensorGame& o) const {
    return counts_ == o.counts_ && payoffs_ == o.payoffs_;
  }

  // Embeds a two-player game as the equivalent 2-tensor game.
  static TensorGame from_bimatrix(const FiniteGame& g);

 private:
  std::vector<int> counts_;
  std::vector<std::vector<Rational>> payoffs_;  // [player][flat profile]
  std::vector<long long> strides_;
  long long total_ = 1;
  std::string title_;
};

// Worst payoff of `player` (0-based) over admissible coalition deviations.
// With include_self the deviating set may contain the player himself; the
// default excludes him, which reduces to the two-player lower payoff at N=2.
Rational lower_payoff_n(const TensorGame& g, int player,
                        const TensorProfile& p, bool include_self = false);

// Cellwise lower payoffs for every player.
TensorGame flat_tensor_game(const TensorGame& g, bool include_self = false);

// Nash equilibria of the flat tensor game, row-major lexicographic.
std::vector<TensorProfile> m_equilibria_n(const TensorGame& g,
                                          bool include_self = false);

}  // namespace flatgame
