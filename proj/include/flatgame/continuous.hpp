// Continuous duopolies with closed-form payoffs and lower payoffs, plus a
// grid bridge into the exact finite-game machinery.
//
// Three models on quantity strategies:
//   Cournot:          P1(x,y) = x * (L - (x+y))             on [0, L]
//   Puu:              P1(x,y) = (L/(x+y) - 1) * x           on [0, L],
//                     with P(0,0) = 0 by convention
//   DiminishingCost:  P1(x,y) = L*x/(x+y) - C/x  (x > 0),   truncated to
//                     [0, Xmax]; P1(0,y) = 0
// All three are quantitatively symmetric: P2(x,y) = P1(y,x).
//
// Closed-form lower payoffs:
//   Cournot:          x * min(y, L - (x+y))
//   Puu:              min(y, P1(x,y))
//   DiminishingCost:  -C/x for x > 0, 0 at x = 0 (the infimum over an
//                     unbounded co-player output; truncation to Xmax leaves a
//                     residual L*x/(x+Xmax) accounted for as an error budget)

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatgame/game.hpp"
#include "flatgame/rational.hpp"

namespace flatgame {

enum class DuopolyModel { kCournot, kPuu, kDiminishingCost };

class ParametricDuopoly {
 public:
  static ParametricDuopoly cournot(const Rational& L);
  static ParametricDuopoly puu(const Rational& L);
  // Default truncation bound is 100 * L.
  static ParametricDuopoly diminishing_cost(
      const Rational& L, const Rational& C,
      std::optional<Rational> xmax = std::nullopt);

  DuopolyModel model() const { return model_; }
  double L() const { return L_.to_double(); }
  double C() const { return C_.to_double(); }
  const Rational& L_exact() const { return L_; }
  const Rational& C_exact() const { return C_; }
  const Rational& domain_upper_exact() const { return upper_; }
  double domain_upper() const { return upper_.to_double(); }
  std::string name() const;

  bool in_domain(double x, double y) const;
  void require_in_domain(double x, double y) const;

  // player is 1 or 2; throws DomainError outside [0, upper]^2.
  double payoff(double x, double y, int player) const;
  double flat_payoff(double x, double y, int player) const;

  // The model formulas are rational functions, so payoffs at rational
  // strategy pairs are exact rationals. Used by the grid oracle.
  Rational payoff_exact(const Rational& x, const Rational& y, int player) const;

 private:
  ParametricDuopoly(DuopolyModel m, Rational L, Rational C, Rational upper)
      : model_(m), L_(std::move(L)), C_(std::move(C)), upper_(std::move(upper)) {}
  double payoff1(double x, double y) const;
  double flat1(double x, double y) const;

  DuopolyModel model_;
  Rational L_, C_, upper_;
};

struct GridSpec {
  Rational lower, upper;
  int points = 0;

  // Validates points >= 2 and lower < upper.
  static GridSpec over(const Rational& lower, const Rational& upper,
                       int points);
  Rational step_exact() const;
  double step() const { return step_exact().to_double(); }
  // Exactly representable nodes including both endpoints.
  std::vector<Rational> nodes() const;
};

// Queryable description of the analytic m-equilibrium set:
//   Cournot: the segments (x, L-2x) for x in [0, L/3] and (x, (L-x)/2) for
//            x in [L/3, L]
//   Puu:     the triangle {x, y >= 0, x+y <= sqrt(L)}, plus the exceptional
//            pair E (only at L = L*, tested with a widened 1e-4 tolerance)
//            and {(L/4, L/4)} when L > 16
//   DiminishingCost: {(0, 0)}
class MeRegion {
 public:
  bool contains(double x, double y, double tol) const;
  const std::string& description() const { return description_; }

 private:
  friend MeRegion analytic_me_set(const ParametricDuopoly& d);
  DuopolyModel model_ = DuopolyModel::kCournot;
  double L_ = 0;
  bool at_lstar_ = false;
  std::string description_;
};

MeRegion analytic_me_set(const ParametricDuopoly& d);

// 1 + 4L + 6L^2 + 4L^3 + L^4 - L^5; its unique positive root L* is where the
// Puu model's exceptional equilibrium pair appears.
double lstar_polynomial(double L);

// Root of the polynomial above, located by bisection on [3, 4] (the bracket
// is certified by a sign check) to within `tolerance` on the interval width.
double lstar(double tolerance);

// Finite game over exact rationals with payoffs evaluated at the grid nodes.
// Grid bounds must lie inside the model domain.
FiniteGame discretize(const ParametricDuopoly& d, const GridSpec& grid);

// Computes the definition-based lower payoff on the discretized game (exact)
// and returns the maximum over grid cells of
//   |grid flat - analytic flat| - truncation_budget
// where the truncation budget is L*x/(x+Xmax) for DiminishingCost and zero
// for the other models.
double verify_flat_closed_form(const ParametricDuopoly& d, const GridSpec& grid);

// Samples unilateral deviations on a uniform grid of `samples` points per
// axis; true iff no deviation improves either player's payoff (plain NE
// check) or flat payoff (m-equilibrium check) by more than tol.
bool verify_ne_membership(const ParametricDuopoly& d, double x, double y,
                          int samples, double tol);
bool verify_me_membership(const ParametricDuopoly& d, double x, double y,
                          int samples, double tol);

}  // namespace flatgame
