// Finite two-player games in normal form: the container, builders for the
// named example games, structural predicates and order-preserving payoff
// transforms.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flatgame/rational.hpp"

namespace flatgame {

struct PureProfile {
  int row = 0;
  int col = 0;
  friend bool operator==(const PureProfile&, const PureProfile&) = default;
  friend auto operator<=>(const PureProfile&, const PureProfile&) = default;
};

using Matrix = std::vector<std::vector<Rational>>;

class FiniteGame {
 public:
  // Validates shape: both matrices non-empty, rectangular and equal-sized.
  FiniteGame(const Matrix& payoff1, const Matrix& payoff2, std::string title);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::string& title() const { return title_; }

  const Rational& payoff1(int r, int c) const { return p1_[idx(r, c)]; }
  const Rational& payoff2(int r, int c) const { return p2_[idx(r, c)]; }
  // player is 1 or 2.
  const Rational& payoff(int player, int r, int c) const {
    return player == 1 ? payoff1(r, c) : payoff2(r, c);
  }
  const Rational& payoff(int player, PureProfile p) const {
    return payoff(player, p.row, p.col);
  }

  bool in_range(PureProfile p) const {
    return p.row >= 0 && p.row < rows_ && p.col >= 0 && p.col < cols_;
  }
  void require_in_range(PureProfile p) const;

  // Strategy labels, used for reports. Default "1".."m" / "1".."n"; the
  // traveler builtin labels strategies by the claimed amount.
  const std::string& row_label(int r) const { return row_labels_[r]; }
  const std::string& col_label(int c) const { return col_labels_[c]; }
  void set_labels(std::vector<std::string> row_labels,
                  std::vector<std::string> col_labels);
  std::string profile_label(PureProfile p) const;

  // Payoff matrices and dimensions agree; titles and labels may differ.
  bool payoffs_equal(const FiniteGame& o) const;
  friend bool operator==(const FiniteGame& a, const FiniteGame& b);

 private:
  int idx(int r, int c) const { return r * cols_ + c; }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> p1_, p2_;  // row-major
  std::string title_;
  std::vector<std::string> row_labels_, col_labels_;
};

// Validated construction; throws ShapeMismatchError / EmptyGameError.
FiniteGame make_game(const Matrix& payoff1, const Matrix& payoff2,
                     std::string title);

// Example games from the literature, by name. `params` is accepted only by
// "traveler" as (lo, hi) claim bounds with 2 <= lo < hi; without params the
// traveler defaults to (2, 100).
FiniteGame builtin_game(const std::string& name,
                        std::optional<std::pair<int, int>> params = {});
std::vector<std::string> builtin_names();

// Payoff changes of the players are strictly opposed across all profile
// pairs: P1(q) > P1(p) iff P2(q) < P2(p). Equivalent to the payoff pair map
// P1 -> P2 being well defined and strictly decreasing, which is what is
// checked (the quadratic pairwise scan is kept as a test oracle).
bool is_strictly_competitive(const FiniteGame& g);

// m == n and payoff1(x, y) == payoff2(y, x) everywhere.
bool is_quantitatively_symmetric(const FiniteGame& g);

// Order-preserving payoff rewrite. A table must cover every distinct value of
// the payoff matrix it applies to (MissingValueError) and be strictly
// increasing on its own domain (NotOrderPreservingError).
using ValueTable = std::map<Rational, Rational>;
FiniteGame apply_monotone_transform(const FiniteGame& g, const ValueTable& t1,
                                    const ValueTable& t2);

}  // namespace flatgame
