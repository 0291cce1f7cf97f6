#include "flatgame/game.hpp"

#include <algorithm>
#include <set>

#include "flatgame/errors.hpp"

namespace flatgame {

FiniteGame::FiniteGame(const Matrix& payoff1, const Matrix& payoff2,
                       std::string title)
    : title_(std::move(title)) {
  if (payoff1.empty() || payoff1.front().empty()) {
    throw EmptyGameError("payoff matrices must be non-empty");
  }
  rows_ = static_cast<int>(payoff1.size());
  cols_ = static_cast<int>(payoff1.front().size());
  auto check_shape = [&](const Matrix& m, const char* which) {
    if (static_cast<int>(m.size()) != rows_) {
      throw ShapeMismatchError(std::string(which) + ": row count differs");
    }
    for (const auto& row : m) {
      if (static_cast<int>(row.size()) != cols_) {
        throw ShapeMismatchError(std::string(which) + ": ragged or unequal row length");
      }
    }
  };
  check_shape(payoff1, "payoff1");
  check_shape(payoff2, "payoff2");

  p1_.reserve(rows_ * cols_);
  p2_.reserve(rows_ * cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      p1_.push_back(payoff1[r][c]);
      p2_.push_back(payoff2[r][c]);
    }
  }
  row_labels_.resize(rows_);
  col_labels_.resize(cols_);
  for (int r = 0; r < rows_; ++r) row_labels_[r] = std::to_string(r + 1);
  for (int c = 0; c < cols_; ++c) col_labels_[c] = std::to_string(c + 1);
}

void FiniteGame::require_in_range(PureProfile p) const {
  if (!in_range(p)) {
    throw DomainError("profile (" + std::to_string(p.row + 1) + "," +
                      std::to_string(p.col + 1) + ") out of range for " +
                      std::to_string(rows_) + "x" + std::to_string(cols_) +
                      " game");
  }
}

void FiniteGame::set_labels(std::vector<std::string> row_labels,
                            std::vector<std::string> col_labels) {
  if (static_cast<int>(row_labels.size()) != rows_ ||
      static_cast<int>(col_labels.size()) != cols_) {
    throw ShapeMismatchError("label count does not match game dimensions");
  }
  row_labels_ = std::move(row_labels);
  col_labels_ = std::move(col_labels);
}

std::string FiniteGame::profile_label(PureProfile p) const {
  return "(" + row_labels_[p.row] + "," + col_labels_[p.col] + ")";
}

bool FiniteGame::payoffs_equal(const FiniteGame& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && p1_ == o.p1_ && p2_ == o.p2_;
}

bool operator==(const FiniteGame& a, const FiniteGame& b) {
  return a.payoffs_equal(b) && a.title_ == b.title_ &&
         a.row_labels_ == b.row_labels_ && a.col_labels_ == b.col_labels_;
}

FiniteGame make_game(const Matrix& payoff1, const Matrix& payoff2,
                     std::string title) {
  return FiniteGame(payoff1, payoff2, std::move(title));
}

namespace {

int sign_of(int v) { return (v > 0) - (v < 0); }

FiniteGame traveler_game(int lo, int hi) {
  if (lo < 2 || lo >= hi) {
    throw BadParamsError("traveler bounds require 2 <= lo < hi, got (" +
                         std::to_string(lo) + "," + std::to_string(hi) + ")");
  }
  int n = hi - lo + 1;
  Matrix p1(n, std::vector<Rational>(n));
  Matrix p2(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int x = lo + i, y = lo + j;
      p1[i][j] = Rational(std::min(x, y) + 2 * sign_of(y - x));
      p2[i][j] = Rational(std::min(x, y) + 2 * sign_of(x - y));
    }
  }
  FiniteGame g(p1, p2,
               "traveler(" + std::to_string(lo) + "," + std::to_string(hi) + ")");
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(lo + i);
  g.set_labels(labels, labels);
  return g;
}

Matrix from_ints(const std::vector<std::vector<long long>>& m) {
  Matrix out(m.size());
  for (size_t r = 0; r < m.size(); ++r) {
    out[r].assign(m[r].begin(), m[r].end());
  }
  return out;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"coordination",     "high-threat",    "traveler",
          "3-4-5",            "me-vs-ne",       "hide-a-coin",
          "matching-pennies", "extended-pennies", "battle-of-sexes",
          "prisoners-dilemma"};
}

FiniteGame builtin_game(const std::string& name,
                        std::optional<std::pair<int, int>> params) {
  if (name == "traveler") {
    auto [lo, hi] = params.value_or(std::make_pair(2, 100));
    return traveler_game(lo, hi);
  }
  if (params.has_value()) {
    throw BadParamsError("builtin '" + name + "' takes no parameters");
  }
  if (name == "coordination") {
    return make_game(from_ints({{2, 0, 0}, {0, 1, 0}, {0, 0, 2}}),
                     from_ints({{2, 0, 0}, {0, 1, 0}, {0, 0, 2}}),
                     "coordination");
  }
  if (name == "high-threat") {
    return make_game(from_ints({{4, 1}, {4, 3}}), from_ints({{4, 4}, {1, 3}}),
                     "high-threat");
  }
  if (name == "3-4-5") {
    return make_game(
        from_ints({{3, 0, 0, 0}, {0, 4, 0, 4}, {0, 0, 3, 5}, {0, 4, 3, 5}}),
        from_ints({{3, 0, 0, 0}, {0, 4, 0, 4}, {0, 0, 3, 3}, {0, 4, 5, 5}}),
        "3-4-5");
  }
  if (name == "me-vs-ne") {
    // The (3,3) cell is [5,5]; with [5,3] the pair (3,3) would not even be a
    // Nash equilibrium, contradicting every stated membership of this game.
    return make_game(from_ints({{1, 0, 4}, {0, 3, 5}, {4, 3, 5}}),
                     from_ints({{4, 0, 4}, {0, 3, 3}, {4, 5, 5}}), "me-vs-ne");
  }
  if (name == "hide-a-coin") {
    return make_game(from_ints({{-10, 15}, {15, -20}}),
                     from_ints({{10, -15}, {-15, 20}}), "hide-a-coin");
  }
  if (name == "matching-pennies") {
    return make_game(from_ints({{1, -1}, {-1, 1}}),
                     from_ints({{-1, 1}, {1, -1}}), "matching-pennies");
  }
  if (name == "extended-pennies") {
    return make_game(from_ints({{-1, 1, 0}, {1, -1, 0}, {0, 0, 0}}),
                     from_ints({{1, -1, 0}, {-1, 1, 0}, {0, 0, 0}}),
                     "extended-pennies");
  }
  if (name == "battle-of-sexes") {
    return make_game(from_ints({{3, 0}, {0, 2}}), from_ints({{2, 0}, {0, 3}}),
                     "battle-of-sexes");
  }
  if (name == "prisoners-dilemma") {
    // T=5, R=3, P=1, S=0 on the conventional cooperate/defect labels.
    FiniteGame g = make_game(from_ints({{3, 0}, {5, 1}}),
                             from_ints({{3, 5}, {0, 1}}), "prisoners-dilemma");
    g.set_labels({"cooperate", "defect"}, {"cooperate", "defect"});
    return g;
  }
  throw UnknownBuiltinError("unknown builtin game '" + name + "'");
}

bool is_strictly_competitive(const FiniteGame& g) {
  // Sort the payoff pairs by P1; the game is strictly competitive iff equal
  // P1 forces equal P2 and strictly larger P1 forces strictly smaller P2.
  std::vector<std::pair<Rational, Rational>> pairs;
  pairs.reserve(g.rows() * g.cols());
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      pairs.emplace_back(g.payoff1(r, c), g.payoff2(r, c));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  for (size_t i = 1; i < pairs.size(); ++i) {
    if (pairs[i - 1].first == pairs[i].first) {
      if (pairs[i - 1].second != pairs[i].second) return false;
    } else if (!(pairs[i].second < pairs[i - 1].second)) {
      return false;
    }
  }
  return true;
}

bool is_quantitatively_symmetric(const FiniteGame& g) {
  if (g.rows() != g.cols()) return false;
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      if (g.payoff1(r, c) != g.payoff2(c, r)) return false;
    }
  }
  return true;
}

namespace {

void check_table(const ValueTable& t, const char* which) {
  const Rational* prev = nullptr;
  for (const auto& [from, to] : t) {
    if (prev != nullptr && !(*prev < to)) {
      throw NotOrderPreservingError(std::string(which) +
                                    ": table is not strictly increasing");
    }
    prev = &to;
  }
}

Rational map_value(const ValueTable& t, const Rational& v, const char* which) {
  auto it = t.find(v);
  if (it == t.end()) {
    throw MissingValueError(std::string(which) + ": no image for payoff value " +
                            v.str());
  }
  return it->second;
}

}  // namespace

FiniteGame apply_monotone_transform(const FiniteGame& g, const ValueTable& t1,
                                    const ValueTable& t2) {
  check_table(t1, "t1");
  check_table(t2, "t2");
  Matrix p1(g.rows(), std::vector<Rational>(g.cols()));
  Matrix p2(g.rows(), std::vector<Rational>(g.cols()));
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      p1[r][c] = map_value(t1, g.payoff1(r, c), "t1");
      p2[r][c] = map_value(t2, g.payoff2(r, c), "t2");
    }
  }
  FiniteGame out(p1, p2, g.title());
  std::vector<std::string> row_labels, col_labels;
  for (int r = 0; r < g.rows(); ++r) row_labels.push_back(g.row_label(r));
  for (int c = 0; c < g.cols(); ++c) col_labels.push_back(g.col_label(c));
  out.set_labels(std::move(row_labels), std::move(col_labels));
  return out;
}

}  // namespace flatgame
