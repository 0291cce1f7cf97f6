#include "flatgame/io.hpp"

#include <json.hpp>

#include <sstream>

#include "flatgame/errors.hpp"

namespace flatgame {
namespace {

using nlohmann::ordered_json;

std::pair<int, int> line_col_of_offset(const std::string& text, size_t offset) {
  int line = 1, col = 1;
  for (size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Rational parse_cell_rational(const std::string& token, int line, int col) {
  try {
    return Rational::parse(token);
  } catch (const BadRationalError& e) {
    throw BadRationalError(std::string(e.what()) + " (line " +
                           std::to_string(line) + ", column " +
                           std::to_string(col) + ")");
  }
}

ParsedGame parse_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = line_col_of_offset(text, e.byte);
    throw ParseError(line, col, e.what());
  }
  if (!doc.is_object()) throw ParseError(1, 1, "expected a JSON object");
  std::string title = doc.value("title", std::string("game"));

  if (doc.contains("players")) {
    if (!doc["players"].is_number_integer() ||
        !doc.contains("strategy_counts") || !doc.contains("payoffs")) {
      throw ParseError(1, 1,
                       "tensor document needs players, strategy_counts and "
                       "payoffs");
    }
    std::vector<int> counts =
        doc["strategy_counts"].get<std::vector<int>>();
    if (static_cast<int>(counts.size()) != doc["players"].get<int>()) {
      throw ShapeMismatchError("strategy_counts does not match players");
    }
    std::vector<std::vector<Rational>> payoffs;
    for (const auto& tensor : doc["payoffs"]) {
      std::vector<Rational> flat;
      for (const auto& cell : tensor) {
        if (!cell.is_string()) {
          throw ParseError(1, 1, "tensor payoffs must be rational strings");
        }
        flat.push_back(parse_cell_rational(cell.get<std::string>(), 1, 1));
      }
      payoffs.push_back(std::move(flat));
    }
    return TensorGame(std::move(counts), std::move(payoffs), std::move(title));
  }

  if (!doc.contains("payoffs") || !doc["payoffs"].is_array() ||
      doc["payoffs"].empty()) {
    throw ParseError(1, 1, "document needs a non-empty payoffs array");
  }
  Matrix p1, p2;
  for (const auto& row : doc["payoffs"]) {
    std::vector<Rational> r1, r2;
    for (const auto& cell : row) {
      if (!cell.is_array() || cell.size() != 2 || !cell[0].is_string() ||
          !cell[1].is_string()) {
        throw ParseError(1, 1, "each cell must be a [\"p1\",\"p2\"] pair");
      }
      r1.push_back(parse_cell_rational(cell[0].get<std::string>(), 1, 1));
      r2.push_back(parse_cell_rational(cell[1].get<std::string>(), 1, 1));
    }
    p1.push_back(std::move(r1));
    p2.push_back(std::move(r2));
  }
  FiniteGame g = make_game(p1, p2, title);
  if (doc.contains("row_labels") || doc.contains("col_labels")) {
    if (!doc.contains("row_labels") || !doc.contains("col_labels")) {
      throw ParseError(1, 1, "row_labels and col_labels must come together");
    }
    g.set_labels(doc["row_labels"].get<std::vector<std::string>>(),
                 doc["col_labels"].get<std::vector<std::string>>());
  }
  return g;
}

struct Token {
  std::string text;
  int line = 1, col = 1;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  Token current;
  bool in_token = false;
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      if (in_token) {
        out.push_back(current);
        in_token = false;
      }
      if (c == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      continue;
    }
    if (!in_token) {
      current = Token{"", line, col};
      in_token = true;
    }
    current.text += c;
    ++col;
  }
  if (in_token) out.push_back(current);
  return out;
}

ParsedGame parse_matrix(const std::string& text) {
  std::vector<Token> tokens = tokenize(text);
  size_t pos = 0;
  auto need = [&](const std::string& what) -> const Token& {
    if (pos >= tokens.size()) {
      const Token& last = tokens.empty() ? Token{} : tokens.back();
      throw ParseError(last.line, last.col + static_cast<int>(last.text.size()),
                       "unexpected end of input, expected " + what);
    }
    return tokens[pos++];
  };
  auto need_keyword = [&](const std::string& kw) {
    const Token& t = need("'" + kw + "'");
    if (t.text != kw) {
      throw ParseError(t.line, t.col, "expected '" + kw + "', got '" + t.text + "'");
    }
  };
  auto need_int = [&](const std::string& what) {
    const Token& t = need(what);
    try {
      size_t used = 0;
      int v = std::stoi(t.text, &used);
      if (used != t.text.size() || v < 1) throw std::invalid_argument("");
      return v;
    } catch (...) {
      throw ParseError(t.line, t.col, "expected positive integer for " + what);
    }
  };

  need_keyword("rows");
  int rows = need_int("row count");
  need_keyword("cols");
  int cols = need_int("column count");

  Matrix p1(rows, std::vector<Rational>(cols));
  Matrix p2(rows, std::vector<Rational>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const Token& t = need("payoff cell");
      auto colon = t.text.find(':');
      if (colon == std::string::npos) {
        throw ParseError(t.line, t.col, "cell must be 'p1:p2', got '" + t.text + "'");
      }
      p1[r][c] = parse_cell_rational(t.text.substr(0, colon), t.line, t.col);
      p2[r][c] = parse_cell_rational(t.text.substr(colon + 1), t.line,
                                     t.col + static_cast<int>(colon) + 1);
    }
  }
  if (pos != tokens.size()) {
    const Token& t = tokens[pos];
    throw ParseError(t.line, t.col, "trailing content '" + t.text + "'");
  }
  return make_game(p1, p2, "game");
}

}  // namespace

ParsedGame parse_game(const std::string& text, GameFormat format) {
  if (format == GameFormat::kJson) return parse_json(text);
  return parse_matrix(text);
}

ParsedGame parse_game_auto(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
    return parse_game(text, c == '{' ? GameFormat::kJson : GameFormat::kMatrix);
  }
  throw ParseError(1, 1, "empty input");
}

std::string emit_game(const FiniteGame& g, GameFormat format) {
  if (format == GameFormat::kMatrix) {
    std::ostringstream os;
    os << "rows " << g.rows() << " cols " << g.cols() << "\n";
    for (int r = 0; r < g.rows(); ++r) {
      for (int c = 0; c < g.cols(); ++c) {
        if (c > 0) os << " ";
        os << g.payoff1(r, c).str() << ":" << g.payoff2(r, c).str();
      }
      os << "\n";
    }
    return os.str();
  }
  ordered_json doc;
  doc["title"] = g.title();
  doc["rows"] = g.rows();
  doc["cols"] = g.cols();
  ordered_json payoffs = ordered_json::array();
  for (int r = 0; r < g.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < g.cols(); ++c) {
      row.push_back({g.payoff1(r, c).str(), g.payoff2(r, c).str()});
    }
    payoffs.push_back(std::move(row));
  }
  doc["payoffs"] = std::move(payoffs);
  ordered_json row_labels = ordered_json::array();
  for (int r = 0; r < g.rows(); ++r) row_labels.push_back(g.row_label(r));
  ordered_json col_labels = ordered_json::array();
  for (int c = 0; c < g.cols(); ++c) col_labels.push_back(g.col_label(c));
  doc["row_labels"] = std::move(row_labels);
  doc["col_labels"] = std::move(col_labels);
  return doc.dump(2) + "\n";
}

std::string emit_game(const TensorGame& g) {
  ordered_json doc;
  doc["title"] = g.title();
  doc["players"] = g.players();
  doc["strategy_counts"] = g.strategy_counts();
  ordered_json payoffs = ordered_json::array();
  for (int i = 0; i < g.players(); ++i) {
    ordered_json tensor = ordered_json::array();
    for (long long ix = 0; ix < g.profile_count(); ++ix) {
      tensor.push_back(g.payoff_at(i, ix).str());
    }
    payoffs.push_back(std::move(tensor));
  }
  doc["payoffs"] = std::move(payoffs);
  return doc.dump(2) + "\n";
}

}  // namespace flatgame
