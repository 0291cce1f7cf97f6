// Not-worse-response sets, lower payoffs, the flat game and m-equilibria.
//
// The lower payoff of player i at a profile is the worst payoff i can be left
// with when the co-player switches to any strategy that does not lower the
// co-player's own payoff (the co-player's not-worse responses). Replacing
// both payoff functions by their lower payoffs yields the flat game; an
// m-equilibrium of a game is a Nash equilibrium of its flat game.

#pragma once

#include <vector>

#include "flatgame/game.hpp"

namespace flatgame {

// Strategies s of `player` (1 or 2) with
//   P_player(s against the co-player's strategy in p) >= P_player(p).
// Always contains the player's own strategy from p. Sorted ascending.
std::vector<int> not_worse_responses(const FiniteGame& g, int player,
                                     PureProfile p);

// Minimum of P_player over co-player deviations inside the co-player's
// not-worse-response set at p, holding `player`'s strategy fixed. The set is
// finite and contains the status quo, so the minimum is attained exactly.
Rational lower_payoff(const FiniteGame& g, int player, PureProfile p);

struct FlatGameResult {
  FiniteGame source;
  FiniteGame flat;
  int iteration = 1;
  // flat is structurally identical to source (fixed point of flattening)
  bool fixed_point = false;
  // Not-worse-response sets per profile (row-major), materialized for
  // reporting: nwr1[p] are player 1's strategies, nwr2[p] player 2's.
  std::vector<std::vector<int>> nwr1, nwr2;
};

// Cellwise lower payoffs for both players, with the NWR sets cached.
FlatGameResult flat_game(const FiniteGame& g);

// Flat, flat-of-flat, ... up to k rounds, stopping early once a round
// reproduces its source; that round is included with fixed_point = true.
std::vector<FlatGameResult> iterate_flatten(const FiniteGame& g, int k);

// Nash equilibria of the flat game.
std::vector<PureProfile> m_equilibria(const FiniteGame& g);

struct LowerValues {
  Rational payoff1, payoff2;  // sup-inf of P_i per player
  Rational flat1, flat2;      // sup-inf of the lower payoffs
};

// The lower value of the game per player, computed for both the original and
// the flat payoffs (they coincide; asserting that is a tested property).
LowerValues lower_values(const FiniteGame& g);

// For a strictly competitive game the lower payoff of a player depends only
// on the player's own strategy: it equals the worst case over the co-player's
// whole strategy set. Returns whether that identity holds cellwise; throws
// PreconditionError when the game is not strictly competitive.
bool competitive_flat_check(const FiniteGame& g);

namespace detail {
// Lower-payoff matrices without the NWR cache.
FiniteGame flatten_once(const FiniteGame& g);
}  // namespace detail

}  // namespace flatgame
