// Mixed extensions of finite games, kept exact: expected payoffs as rational
// bilinear forms, the pure-deviation equilibrium test, support enumeration
// for small games, payoff lotteries with the loss-averse ordering, and
// seeded uniform equilibrium selection.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "flatgame/game.hpp"

namespace flatgame {

class MixedStrategy {
 public:
  // Weights must be non-negative and sum to exactly 1.
  explicit MixedStrategy(std::vector<Rational> weights);
  static MixedStrategy dirac(int size, int index);
  static MixedStrategy uniform(int size);

  int size() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(int i) const { return weights_[i]; }
  std::vector<int> support() const;
  bool is_dirac() const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;
  friend auto operator<=>(const MixedStrategy& a, const MixedStrategy& b) {
    return a.weights_ <=> b.weights_;
  }

 private:
  std::vector<Rational> weights_;
};

struct MixedProfile {
  MixedStrategy strat1, strat2;
  friend bool operator==(const MixedProfile&, const MixedProfile&) = default;
  friend auto operator<=>(const MixedProfile&, const MixedProfile&) = default;
};

// Exact bilinear form rho1^T W_player rho2. Throws DimensionMismatchError.
Rational expected_payoff(const FiniteGame& g, const MixedProfile& mp,
                         int player);

// Equilibrium of the mixed extension. By bilinearity it suffices that no
// *pure* deviation improves either player, which is what is checked.
bool is_mixed_ne(const FiniteGame& g, const MixedProfile& mp);

// Pure strategies of `player` whose payoff against the co-player's strategy
// in p ties the equilibrium payoff. Requires p to be a Nash equilibrium.
std::vector<int> equal_payoff_deviations(const FiniteGame& g, PureProfile p,
                                         int player);

// Support-pair enumeration with exact elimination. Each support pair yields
// two independent linear systems (the co-player's indifference conditions);
// degenerate systems are handled by enumerating basic solutions of the
// feasibility polytope, so for degenerate games the result is a verified
// subset, not necessarily the full equilibrium set. Every returned profile
// passes is_mixed_ne. Requires m, n <= 4 and 1 <= max_support <= 3.
std::vector<MixedProfile> mixed_equilibrium_candidates(const FiniteGame& g,
                                                       int max_support);

struct ProfileLift {
  PureProfile profile;
  bool in_sne = false, in_ssne = false, in_wssne = false;
  bool dirac_is_mixed_ne = false;
  // Every equal-payoff pure deviation of either player leaves the co-player
  // at least as well off; by the averaging argument this certifies that the
  // profile stays weakly semi-strict in the mixed extension.
  bool wssne_support_condition = false;
};

struct LiftReport {
  std::string title;
  std::vector<ProfileLift> entries;  // one per pure Nash equilibrium
};

// Checks, for every pure Nash equilibrium, its membership conditions in the
// mixed extension: the Dirac lift must remain an equilibrium, and for WSSNE
// profiles the support characterization above must hold.
LiftReport pure_equilibrium_lifts(const FiniteGame& g);

class Lottery {
 public:
  // Outcomes are (value, probability); probabilities must be positive and
  // sum to 1. Equal values are merged. Stored sorted by value.
  explicit Lottery(std::vector<std::pair<Rational, Rational>> outcomes);
  const std::vector<std::pair<Rational, Rational>>& outcomes() const {
    return outcomes_;
  }

 private:
  std::vector<std::pair<Rational, Rational>> outcomes_;
};

// Distribution of `player`'s payoff under the product measure of mp.
Lottery outcome_lottery(const FiniteGame& g, const MixedProfile& mp,
                        int player);

// Worst payoff in the support, and the probability-weighted mean.
Rational min_gain(const Lottery& l);
Rational expected_gain(const Lottery& l);

// Loss-averse preference: lexicographic on (min gain, expected gain).
// `less` means a is the less preferred lottery.
std::strong_ordering compare_lotteries_loss_averse(const Lottery& a,
                                                   const Lottery& b);

// Uniform draw over a non-empty ordered equilibrium set, deterministic per
// seed. Uses splitmix64 with rejection sampling (documented in the README as
// part of the CLI contract).
PureProfile select_equilibrium(const std::vector<PureProfile>& eqs,
                               std::uint64_t seed);

}  // namespace flatgame
