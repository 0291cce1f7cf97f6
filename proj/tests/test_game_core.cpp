#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flatgame/game.hpp"
#include "flatgame/errors.hpp"
#include "helpers.hpp"

using namespace flatgame;
using testutil::TestRng;

namespace {

Matrix ints(std::vector<std::vector<long long>> rows) {
  Matrix out(rows.size());
  for (size_t r = 0; r < rows.size(); ++r) {
    out[r].assign(rows[r].begin(), rows[r].end());
  }
  return out;
}

}  // namespace

TEST_CASE("make_game validates shapes") {
  FiniteGame hide = make_game(ints({{-10, 15}, {15, -20}}),
                              ints({{10, -15}, {-15, 20}}), "hide-a-coin");
  CHECK(hide.rows() == 2);
  CHECK(hide.payoff1(0, 0) == Rational(-10));
  CHECK(hide.payoff2(1, 1) == Rational(20));

  FiniteGame singleton = make_game(ints({{0}}), ints({{0}}), "singleton");
  CHECK(singleton.rows() == 1);
  CHECK(singleton.cols() == 1);

  CHECK_THROWS_AS(make_game(ints({{1, 2}, {3, 4}}), ints({{1, 2, 3}, {4, 5, 6}}), "bad"),
                  ShapeMismatchError);
  CHECK_THROWS_AS(make_game(Matrix{}, Matrix{}, "empty"), EmptyGameError);
  CHECK_THROWS_AS(make_game(ints({{1}, {2}}), ints({{1}}), "ragged"),
                  ShapeMismatchError);
}

TEST_CASE("builtin traveler matches the claim formula") {
  FiniteGame t = builtin_game("traveler", std::make_pair(2, 100));
  CHECK(t.rows() == 99);
  CHECK(t.cols() == 99);
  CHECK(t.payoff1(0, 0) == Rational(2));
  CHECK(t.payoff1(0, 1) == Rational(4));   // low claim against 3: bonus
  CHECK(t.payoff2(0, 1) == Rational(0));   // high claim against 2: penalty
  CHECK(t.row_label(0) == "2");
  CHECK(t.row_label(98) == "100");

  CHECK_THROWS_AS(builtin_game("traveler", std::make_pair(5, 3)), BadParamsError);
  CHECK_THROWS_AS(builtin_game("traveler", std::make_pair(1, 9)), BadParamsError);
  CHECK_THROWS_AS(builtin_game("no-such-game"), UnknownBuiltinError);
  CHECK_THROWS_AS(builtin_game("coordination", std::make_pair(2, 3)),
                  BadParamsError);
}

TEST_CASE("builtin coordination is the 3x3 diagonal game") {
  FiniteGame g = builtin_game("coordination");
  CHECK(g.rows() == 3);
  CHECK(g.payoff1(0, 0) == Rational(2));
  CHECK(g.payoff1(1, 1) == Rational(1));
  CHECK(g.payoff1(2, 2) == Rational(2));
  CHECK(g.payoff1(0, 1) == Rational(0));
}

TEST_CASE("every builtin constructs") {
  for (const std::string& name : builtin_names()) {
    FiniteGame g = builtin_game(name);
    CHECK(g.rows() >= 1);
    CHECK(g.cols() >= 1);
    CHECK(g.title().size() > 0);
  }
}

TEST_CASE("strict competitiveness against the pairwise oracle") {
  CHECK(is_strictly_competitive(builtin_game("matching-pennies")));
  CHECK(is_strictly_competitive(builtin_game("hide-a-coin")));
  CHECK_FALSE(is_strictly_competitive(builtin_game("coordination")));
  CHECK(is_strictly_competitive(make_game(ints({{0}}), ints({{0}}), "1x1")));

  TestRng rng(11);
  for (int i = 0; i < 300; ++i) {
    FiniteGame g = testutil::random_game(rng, 4, -3, 3);
    CHECK(is_strictly_competitive(g) == testutil::oracle_strictly_competitive(g));
  }
  for (int i = 0; i < 100; ++i) {
    FiniteGame g = testutil::random_competitive_game(rng);
    CHECK(is_strictly_competitive(g));
    CHECK(testutil::oracle_strictly_competitive(g));
  }
}

TEST_CASE("quantitative symmetry") {
  CHECK(is_quantitatively_symmetric(builtin_game("traveler", std::make_pair(2, 100))));
  // hide-a-coin: zero-sum but asymmetric (already the diagonal differs)
  CHECK_FALSE(is_quantitatively_symmetric(builtin_game("hide-a-coin")));
  // me-vs-ne is not quantitatively symmetric either: the (1,1) cell pays the
  // players differently, so the transpose check must fail
  CHECK_FALSE(is_quantitatively_symmetric(builtin_game("me-vs-ne")));
  TestRng rng(12);
  for (int i = 0; i < 100; ++i) {
    CHECK(is_quantitatively_symmetric(testutil::random_symmetric_game(rng)));
  }
}

TEST_CASE("monotone transform with explicit tables") {
  FiniteGame pennies = builtin_game("matching-pennies");
  SUBCASE("2v+1 on matching pennies") {
    ValueTable t{{Rational(-1), Rational(-1)}, {Rational(1), Rational(3)}};
    FiniteGame out = apply_monotone_transform(pennies, t, t);
    CHECK(out.payoff1(0, 0) == Rational(3));
    CHECK(out.payoff1(0, 1) == Rational(-1));
    CHECK(out.payoff2(0, 0) == Rational(-1));
    // original untouched
    CHECK(pennies.payoff1(0, 0) == Rational(1));
  }
  SUBCASE("identity tables reproduce the game") {
    ValueTable id{{Rational(-1), Rational(-1)}, {Rational(1), Rational(1)}};
    CHECK(apply_monotone_transform(pennies, id, id).payoffs_equal(pennies));
  }
  SUBCASE("non-injective table rejected") {
    ValueTable flat{{Rational(-1), Rational(0)}, {Rational(1), Rational(0)}};
    CHECK_THROWS_AS(apply_monotone_transform(pennies, flat, flat),
                    NotOrderPreservingError);
  }
  SUBCASE("missing value rejected") {
    ValueTable partial{{Rational(1), Rational(5)}};
    CHECK_THROWS_AS(apply_monotone_transform(pennies, partial, partial),
                    MissingValueError);
  }
}

TEST_CASE("transform preserves per-column and per-row argmax sets") {
  TestRng rng(13);
  for (int i = 0; i < 100; ++i) {
    FiniteGame g = testutil::random_game(rng, 4, -3, 3);
    // strictly increasing random tables over each player's value set
    auto build_table = [&](int player) {
      ValueTable t;
      std::vector<Rational> values;
      for (int r = 0; r < g.rows(); ++r) {
        for (int c = 0; c < g.cols(); ++c) {
          Rational v = g.payoff(player, r, c);
          if (t.find(v) == t.end()) t[v] = Rational(0);
        }
      }
      Rational image(rng.range(-20, -10));
      for (auto& [from, to] : t) {
        image += Rational(rng.range(1, 4), rng.range(1, 3));
        to = image;
      }
      return t;
    };
    ValueTable t1 = build_table(1), t2 = build_table(2);
    FiniteGame h = apply_monotone_transform(g, t1, t2);
    for (int c = 0; c < g.cols(); ++c) {
      // argmax of player 1's column must be identical index sets
      std::vector<int> before, after;
      Rational mb = g.payoff1(0, c), ma = h.payoff1(0, c);
      for (int r = 1; r < g.rows(); ++r) {
        mb = max(mb, g.payoff1(r, c));
        ma = max(ma, h.payoff1(r, c));
      }
      for (int r = 0; r < g.rows(); ++r) {
        if (g.payoff1(r, c) == mb) before.push_back(r);
        if (h.payoff1(r, c) == ma) after.push_back(r);
      }
      CHECK(before == after);
    }
  }
}

TEST_CASE("affine positive transforms keep zero-sum builtins competitive") {
  for (const char* name : {"hide-a-coin", "matching-pennies", "extended-pennies"}) {
    FiniteGame g = builtin_game(name);
    REQUIRE(is_strictly_competitive(g));
    auto affine_table = [&](int player, long long a, long long b) {
      ValueTable t;
      for (int r = 0; r < g.rows(); ++r) {
        for (int c = 0; c < g.cols(); ++c) {
          Rational v = g.payoff(player, r, c);
          t[v] = Rational(a) * v + Rational(b);
        }
      }
      return t;
    };
    FiniteGame h = apply_monotone_transform(g, affine_table(1, 3, 7),
                                            affine_table(2, 2, -1));
    CHECK(is_strictly_competitive(h));
  }
}
