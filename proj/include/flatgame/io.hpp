// Game document serialization. Two formats:
//
// JSON (two-player):
//   {"title": "...", "rows": m, "cols": n,
//    "payoffs": [[["p1","p2"], ...n cells] ...m rows],
//    "row_labels": [...], "col_labels": [...]}           (labels optional)
//
// JSON (N-player tensor, detected by the "players" key):
//   {"title": "...", "players": N, "strategy_counts": [c1..cN],
//    "payoffs": [[flat row-major strings] per player]}
//
// Whitespace matrix format (two-player, no title):
//   rows m cols n
//   p1:p2 p1:p2 ...   (m lines of n cells)
//
// Rationals are serialized reduced as "p" or "p/q"; unreduced input is
// accepted and normalized, a zero denominator is a BadRationalError.
// Parse(emit(g)) reproduces g bit-exactly (JSON keeps title and labels; the
// matrix format carries payoffs only).

#pragma once

#include <string>
#include <variant>

#include "flatgame/game.hpp"
#include "flatgame/multiplayer.hpp"

namespace flatgame {

enum class GameFormat { kJson, kMatrix };

using ParsedGame = std::variant<FiniteGame, TensorGame>;

ParsedGame parse_game(const std::string& text, GameFormat format);

// Sniffs the format: a leading '{' means JSON, anything else matrix.
ParsedGame parse_game_auto(const std::string& text);

std::string emit_game(const FiniteGame& g, GameFormat format);
std::string emit_game(const TensorGame& g);  // JSON only

}  // namespace flatgame
