// Pure-strategy solution concepts: Pareto optima, Wald/maximin solutions,
// Nash equilibria and the strictness refinements (SNE, SSNE, WSSNE), the
// coupled-in-wealth-improvement predicate and an aggregate classifier.
//
// All set-valued operations return profiles sorted row-major lexicographic.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flatgame/game.hpp"

namespace flatgame {

// Profiles not strictly dominated in both coordinates.
std::vector<PureProfile> pareto_optima(const FiniteGame& g);

// Profiles admitting no weak domination with at least one strict coordinate.
std::vector<PureProfile> strong_pareto_optima(const FiniteGame& g);

// Cartesian product of each player's argmax-of-worst-case strategy sets.
std::vector<PureProfile> wald_solutions(const FiniteGame& g);

// Wald solution whose payoffs attain both security levels.
bool is_maximin(const FiniteGame& g, PureProfile p);

// No unilateral pure deviation strictly improves the deviator.
std::vector<PureProfile> nash_equilibria(const FiniteGame& g);

// Every deviation is strictly worse for the deviator. Deviations range over
// the punctured strategy set per player, so a player with a single strategy
// satisfies the condition vacuously.
std::vector<PureProfile> strict_ne(const FiniteGame& g);

// NE where a deviation that keeps the deviator's payoff leaves the
// co-player's payoff unchanged (SSNE) or not decreased (WSSNE).
std::vector<PureProfile> semi_strict_ne(const FiniteGame& g);
std::vector<PureProfile> weakly_semi_strict_ne(const FiniteGame& g);

// Coupled in wealth improvement: a unilateral weak improvement of one player
// weakly improves the other. Not required to be an equilibrium; the identity
// WSSNE = NE intersect CWI is a tested property.
std::vector<PureProfile> cwi_profiles(const FiniteGame& g);

enum class ProfileFlag : std::uint16_t {
  kPO = 1 << 0,
  kSPO = 1 << 1,
  kWald = 1 << 2,
  kMaximin = 1 << 3,
  kNE = 1 << 4,
  kSNE = 1 << 5,
  kSSNE = 1 << 6,
  kWSSNE = 1 << 7,
  kCWI = 1 << 8,
  kME = 1 << 9,
};

const char* flag_name(ProfileFlag f);
std::vector<ProfileFlag> all_flags();

struct ClassificationReport {
  std::string title;
  int rows = 0;
  int cols = 0;
  std::vector<std::uint16_t> masks;  // row-major

  bool has(PureProfile p, ProfileFlag f) const {
    return (masks[p.row * cols + p.col] &
            static_cast<std::uint16_t>(f)) != 0;
  }
  std::vector<PureProfile> with(ProfileFlag f) const;
};

// Full per-profile membership report over all flags, ME included.
ClassificationReport classify(const FiniteGame& g);

}  // namespace flatgame
