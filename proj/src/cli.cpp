#include "flatgame/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "flatgame/continuous.hpp"
#include "flatgame/equilibrium.hpp"
#include "flatgame/errors.hpp"
#include "flatgame/flatten.hpp"
#include "flatgame/io.hpp"
#include "flatgame/mixed.hpp"
#include "flatgame/multiplayer.hpp"

namespace flatgame {
namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct InputOptions {
  std::string builtin;
  std::string file;
  int lo = 2;
  int hi = 100;
  bool lo_set = false;
  bool hi_set = false;

  ParsedGame load() const {
    if (builtin.empty() == file.empty()) {
      throw UsageError("provide exactly one of --builtin or --file");
    }
    if (!builtin.empty()) {
      if ((lo_set || hi_set) && builtin != "traveler") {
        throw UsageError("--lo/--hi apply only to the traveler builtin");
      }
      if (builtin == "traveler") {
        return builtin_game(builtin, std::make_pair(lo, hi));
      }
      return builtin_game(builtin);
    }
    std::ifstream in(file);
    if (!in) throw DomainError("cannot open file '" + file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_game_auto(buffer.str());
  }

  FiniteGame load_finite(const char* command) const {
    ParsedGame parsed = load();
    if (std::holds_alternative<TensorGame>(parsed)) {
      throw DomainError(std::string(command) +
                        " requires a two-player game; got an N-player tensor");
    }
    return std::get<FiniteGame>(std::move(parsed));
  }
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--builtin", in.builtin, "builtin game name");
  cmd->add_option("--file", in.file, "game document (JSON or matrix format)");
  cmd->add_option("--lo", in.lo, "traveler lower claim bound")
      ->each([&in](const std::string&) { in.lo_set = true; });
  cmd->add_option("--hi", in.hi, "traveler upper claim bound")
      ->each([&in](const std::string&) { in.hi_set = true; });
}

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->default_val("table");
}

ordered_json profile_json(const FiniteGame& g, PureProfile p) {
  return ordered_json{{"row", p.row + 1},
                      {"col", p.col + 1},
                      {"label", g.profile_label(p)}};
}

ordered_json tensor_profile_json(const TensorProfile& p) {
  ordered_json strategies = ordered_json::array();
  for (int s : p.strategies) strategies.push_back(s + 1);
  return ordered_json{{"strategies", std::move(strategies)}};
}

std::string tensor_profile_label(const TensorProfile& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.strategies.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.strategies[i] + 1);
  }
  return out + ")";
}

void print_bimatrix(std::ostream& out, const FiniteGame& g) {
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      if (c) out << " ";
      out << g.payoff1(r, c).str() << ":" << g.payoff2(r, c).str();
    }
    out << "\n";
  }
}

ordered_json bimatrix_json(const FiniteGame& g) {
  ordered_json payoffs = ordered_json::array();
  for (int r = 0; r < g.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < g.cols(); ++c) {
      row.push_back({g.payoff1(r, c).str(), g.payoff2(r, c).str()});
    }
    payoffs.push_back(std::move(row));
  }
  return payoffs;
}

int cmd_classify(const InputOptions& in, const std::string& format,
                 std::ostream& out) {
  FiniteGame g = in.load_finite("classify");
  ClassificationReport report = classify(g);
  if (format == "json") {
    ordered_json doc;
    doc["title"] = report.title;
    doc["rows"] = report.rows;
    doc["cols"] = report.cols;
    ordered_json profiles = ordered_json::array();
    for (int r = 0; r < report.rows; ++r) {
      for (int c = 0; c < report.cols; ++c) {
        ordered_json entry = profile_json(g, {r, c});
        ordered_json flags = ordered_json::array();
        for (ProfileFlag f : all_flags()) {
          if (report.has({r, c}, f)) flags.push_back(flag_name(f));
        }
        entry["flags"] = std::move(flags);
        profiles.push_back(std::move(entry));
      }
    }
    doc["profiles"] = std::move(profiles);
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "game: " << report.title << " (" << report.rows << "x" << report.cols
      << ")\n";
  out << "strictly competitive: "
      << (is_strictly_competitive(g) ? "yes" : "no")
      << "  quantitatively symmetric: "
      << (is_quantitatively_symmetric(g) ? "yes" : "no") << "\n";
  for (int r = 0; r < report.rows; ++r) {
    for (int c = 0; c < report.cols; ++c) {
      out << g.profile_label({r, c}) << "\t";
      bool any = false;
      for (ProfileFlag f : all_flags()) {
        if (report.has({r, c}, f)) {
          if (any) out << " ";
          out << flag_name(f);
          any = true;
        }
      }
      if (!any) out << "-";
      out << "\n";
    }
  }
  return 0;
}

void print_nwr(std::ostream& out, const FiniteGame& g,
               const FlatGameResult& round) {
  out << "not-worse responses:\n";
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      const auto& n1 = round.nwr1[r * g.cols() + c];
      const auto& n2 = round.nwr2[r * g.cols() + c];
      out << g.profile_label({r, c}) << "\tp1={";
      for (size_t i = 0; i < n1.size(); ++i) {
        if (i) out << ",";
        out << g.row_label(n1[i]);
      }
      out << "} p2={";
      for (size_t i = 0; i < n2.size(); ++i) {
        if (i) out << ",";
        out << g.col_label(n2[i]);
      }
      out << "}\n";
    }
  }
}

int cmd_flatten(const InputOptions& in, const std::string& format,
                int iterations, bool show_nwr, std::ostream& out) {
  ParsedGame parsed = in.load();
  if (std::holds_alternative<TensorGame>(parsed)) {
    const TensorGame& g = std::get<TensorGame>(parsed);
    TensorGame flat = flat_tensor_game(g);
    if (format == "json") {
      ordered_json doc;
      doc["title"] = g.title();
      doc["players"] = g.players();
      doc["strategy_counts"] = g.strategy_counts();
      ordered_json tensors = ordered_json::array();
      for (int i = 0; i < flat.players(); ++i) {
        ordered_json tensor = ordered_json::array();
        for (long long ix = 0; ix < flat.profile_count(); ++ix) {
          tensor.push_back(flat.payoff_at(i, ix).str());
        }
        tensors.push_back(std::move(tensor));
      }
      doc["flat_payoffs"] = std::move(tensors);
      out << doc.dump(2) << "\n";
      return 0;
    }
    out << "game: " << g.title() << " (" << g.players() << " players)\n";
    out << "flat payoffs by profile:\n";
    for (long long ix = 0; ix < flat.profile_count(); ++ix) {
      TensorProfile p = flat.profile_at(ix);
      out << tensor_profile_label(p) << "\t";
      for (int i = 0; i < flat.players(); ++i) {
        if (i) out << " ";
        out << flat.payoff_at(i, ix).str();
      }
      out << "\n";
    }
    return 0;
  }

  FiniteGame g = std::get<FiniteGame>(std::move(parsed));
  std::vector<FlatGameResult> rounds = iterate_flatten(g, iterations);
  if (format == "json") {
    ordered_json doc;
    doc["title"] = g.title();
    ordered_json list = ordered_json::array();
    for (const FlatGameResult& round : rounds) {
      ordered_json entry;
      entry["iteration"] = round.iteration;
      entry["fixed_point"] = round.fixed_point;
      entry["payoffs"] = bimatrix_json(round.flat);
      list.push_back(std::move(entry));
    }
    doc["iterations"] = std::move(list);
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "game: " << g.title() << " (" << g.rows() << "x" << g.cols() << ")\n";
  for (const FlatGameResult& round : rounds) {
    out << "iteration " << round.iteration
        << (round.fixed_point ? " (fixed point)" : "") << "\n";
    print_bimatrix(out, round.flat);
    if (show_nwr) print_nwr(out, round.source, round);
  }
  return 0;
}

int cmd_me(const InputOptions& in, const std::string& format,
           std::ostream& out) {
  ParsedGame parsed = in.load();
  if (std::holds_alternative<TensorGame>(parsed)) {
    const TensorGame& g = std::get<TensorGame>(parsed);
    auto me = m_equilibria_n(g);
    if (format == "json") {
      ordered_json doc;
      doc["title"] = g.title();
      ordered_json list = ordered_json::array();
      for (const TensorProfile& p : me) list.push_back(tensor_profile_json(p));
      doc["me"] = std::move(list);
      out << doc.dump(2) << "\n";
    } else {
      for (const TensorProfile& p : me) out << tensor_profile_label(p) << "\n";
    }
    return 0;
  }
  FiniteGame g = std::get<FiniteGame>(std::move(parsed));
  auto me = m_equilibria(g);
  if (format == "json") {
    ordered_json doc;
    doc["title"] = g.title();
    ordered_json list = ordered_json::array();
    for (PureProfile p : me) list.push_back(profile_json(g, p));
    doc["me"] = std::move(list);
    out << doc.dump(2) << "\n";
  } else {
    for (PureProfile p : me) out << g.profile_label(p) << "\n";
  }
  return 0;
}

std::string mixed_strategy_label(const MixedStrategy& s) {
  std::string out = "(";
  for (int i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s.weight(i).str();
  }
  return out + ")";
}

int cmd_mixed(const InputOptions& in, const std::string& format,
              int max_support, std::ostream& out) {
  FiniteGame g = in.load_finite("mixed");
  auto candidates = mixed_equilibrium_candidates(g, max_support);
  LiftReport lifts = pure_equilibrium_lifts(g);
  if (format == "json") {
    ordered_json doc;
    doc["title"] = g.title();
    doc["max_support"] = max_support;
    ordered_json list = ordered_json::array();
    for (const MixedProfile& mp : candidates) {
      ordered_json entry;
      ordered_json w1 = ordered_json::array(), w2 = ordered_json::array();
      for (const Rational& w : mp.strat1.weights()) w1.push_back(w.str());
      for (const Rational& w : mp.strat2.weights()) w2.push_back(w.str());
      entry["strat1"] = std::move(w1);
      entry["strat2"] = std::move(w2);
      entry["expected_payoffs"] = {expected_payoff(g, mp, 1).str(),
                                   expected_payoff(g, mp, 2).str()};
      list.push_back(std::move(entry));
    }
    doc["equilibria"] = std::move(list);
    ordered_json lift_list = ordered_json::array();
    for (const ProfileLift& lift : lifts.entries) {
      ordered_json entry = profile_json(g, lift.profile);
      entry["wssne"] = lift.in_wssne;
      entry["dirac_is_mixed_ne"] = lift.dirac_is_mixed_ne;
      entry["wssne_support_condition"] = lift.wssne_support_condition;
      lift_list.push_back(std::move(entry));
    }
    doc["pure_lifts"] = std::move(lift_list);
    out << doc.dump(2) << "\n";
    return 0;
  }
  out << "game: " << g.title() << " (" << g.rows() << "x" << g.cols() << ")\n";
  out << "mixed equilibria found (max support " << max_support << "):\n";
  for (const MixedProfile& mp : candidates) {
    out << mixed_strategy_label(mp.strat1) << " x "
        << mixed_strategy_label(mp.strat2) << "  payoffs "
        << expected_payoff(g, mp, 1).str() << ":"
        << expected_payoff(g, mp, 2).str() << "\n";
  }
  out << "pure equilibrium lifts:\n";
  for (const ProfileLift& lift : lifts.entries) {
    out << g.profile_label(lift.profile) << "\twssne="
        << (lift.in_wssne ? "yes" : "no")
        << " dirac-lift=" << (lift.dirac_is_mixed_ne ? "ok" : "FAIL")
        << " support-condition="
        << (lift.wssne_support_condition ? "holds" : "fails") << "\n";
  }
  return 0;
}

int cmd_duopoly(const std::string& model, const std::string& l_text,
                const std::string& c_text, const std::string& xmax_text,
                int grid_points, bool check, const std::string& format,
                std::ostream& out) {
  Rational L = Rational::parse(l_text);
  ParametricDuopoly d = [&] {
    if (model == "cournot") return ParametricDuopoly::cournot(L);
    if (model == "puu") return ParametricDuopoly::puu(L);
    Rational C = Rational::parse(c_text.empty() ? "1" : c_text);
    std::optional<Rational> xmax;
    if (!xmax_text.empty()) xmax = Rational::parse(xmax_text);
    return ParametricDuopoly::diminishing_cost(L, C, xmax);
  }();

  MeRegion region = analytic_me_set(d);
  double ne_x = d.model() == DuopolyModel::kCournot ? d.L() / 3.0
               : d.model() == DuopolyModel::kPuu    ? d.L() / 4.0
                                                    : 0.0;
  // grid default: [0, upper], except Puu where the discontinuity at the
  // origin is excluded
  Rational grid_lo =
      d.model() == DuopolyModel::kPuu ? Rational(1, 100) : Rational(0);
  GridSpec grid = GridSpec::over(grid_lo, d.domain_upper_exact(), grid_points);

  ordered_json doc;
  doc["model"] = d.name();
  doc["me_region"] = region.description();
  if (d.model() != DuopolyModel::kDiminishingCost) {
    doc["ne_point"] = {fmt_real(ne_x), fmt_real(ne_x)};
    doc["ne_sampled_check"] =
        verify_ne_membership(d, ne_x, ne_x, 400, 1e-9);
  }
  if (check) {
    double deviation = verify_flat_closed_form(d, grid);
    doc["grid_points"] = grid.points;
    doc["grid_lower"] = fmt_real(grid.lower.to_double());
    doc["flat_oracle_deviation"] = fmt_real(deviation);
    double budget = 0;
    switch (d.model()) {
      case DuopolyModel::kCournot:
        budget = d.L() * grid.step();
        break;
      case DuopolyModel::kPuu:
        budget = d.L() / (4.0 * grid.lower.to_double()) * grid.step();
        break;
      case DuopolyModel::kDiminishingCost:
        budget = d.L() * grid.step();
        break;
    }
    doc["flat_oracle_budget"] = fmt_real(budget);
    doc["flat_oracle_within_budget"] = deviation <= budget;
    FiniteGame game = discretize(d, grid);
    auto grid_me = m_equilibria(game);
    doc["grid_me_count"] = grid_me.size();
    auto nodes = grid.nodes();
    int within = 0;
    double worst_dist = 0;
    for (PureProfile p : grid_me) {
      double x = nodes[p.row].to_double(), y = nodes[p.col].to_double();
      bool near = region.contains(x, y, grid.step());
      within += near;
      if (!near) {
        // crude distance proxy: grow the tolerance until the region is hit
        double t = grid.step();
        while (t < 2 * d.domain_upper() && !region.contains(x, y, t)) t *= 2;
        worst_dist = std::max(worst_dist, t);
      }
    }
    doc["grid_me_within_one_step_of_region"] = within;
    doc["grid_me_off_region"] = static_cast<int>(grid_me.size()) - within;
    if (within < static_cast<int>(grid_me.size())) {
      doc["grid_me_max_region_distance_upper_bound"] = fmt_real(worst_dist);
    }
  }
  if (format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    for (auto& [key, value] : doc.items()) {
      out << key << ": "
          << (value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
    }
  }
  return 0;
}

int cmd_lstar(double tol, const std::string& format, std::ostream& out) {
  double root = lstar(tol);
  if (format == "json") {
    ordered_json doc;
    doc["lstar"] = fmt_real(root);
    doc["tolerance"] = fmt_real(tol);
    doc["residual"] = fmt_real(lstar_polynomial(root));
    out << doc.dump(2) << "\n";
  } else {
    out << "lstar = " << fmt_real(root) << "\n";
    out << "residual = " << fmt_real(lstar_polynomial(root)) << "\n";
  }
  return 0;
}

int cmd_select(const InputOptions& in, const std::string& format,
               std::uint64_t seed, std::ostream& out) {
  FiniteGame g = in.load_finite("select");
  auto me = m_equilibria(g);
  PureProfile chosen = select_equilibrium(me, seed);
  if (format == "json") {
    ordered_json doc;
    doc["title"] = g.title();
    doc["me_count"] = me.size();
    doc["seed"] = seed;
    doc["selected"] = profile_json(g, chosen);
    out << doc.dump(2) << "\n";
  } else {
    out << "me count: " << me.size() << "\n";
    out << "selected: " << g.profile_label(chosen) << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact solver for flat games and m-equilibria"};
  app.set_help_all_flag("--help-all");
  app.require_subcommand(1);

  InputOptions in;
  std::string format;
  int iterations = 1;
  bool show_nwr = false;
  int max_support = 3;
  std::string model, l_text, c_text, xmax_text;
  int grid_points = 201;
  bool check = false;
  double tol = 1e-6;
  std::uint64_t seed = 0;
  bool list_builtins = false;

  CLI::App* classify_cmd = app.add_subcommand("classify", "per-profile solution concept flags");
  add_input_options(classify_cmd, in);
  add_format_option(classify_cmd, format);

  CLI::App* flatten_cmd = app.add_subcommand("flatten", "lower payoff matrices");
  add_input_options(flatten_cmd, in);
  add_format_option(flatten_cmd, format);
  flatten_cmd->add_option("--iterations", iterations, "flattening rounds")
      ->check(CLI::PositiveNumber)
      ->default_val(1);
  flatten_cmd->add_flag("--nwr", show_nwr, "include not-worse-response sets");

  CLI::App* me_cmd = app.add_subcommand("me", "m-equilibria");
  add_input_options(me_cmd, in);
  add_format_option(me_cmd, format);

  CLI::App* mixed_cmd = app.add_subcommand("mixed", "mixed equilibria by support enumeration");
  add_input_options(mixed_cmd, in);
  add_format_option(mixed_cmd, format);
  mixed_cmd->add_option("--max-support", max_support, "support size cap")
      ->check(CLI::Range(1, 3))
      ->default_val(3);

  CLI::App* duopoly_cmd = app.add_subcommand("duopoly", "continuous duopoly reports");
  duopoly_cmd->add_option("--model", model, "duopoly model")
      ->check(CLI::IsMember({"cournot", "puu", "dimcost"}))
      ->required();
  duopoly_cmd->add_option("--L", l_text, "market size parameter")->required();
  duopoly_cmd->add_option("--C", c_text, "cost parameter (dimcost)");
  duopoly_cmd->add_option("--xmax", xmax_text, "truncation bound (dimcost)");
  duopoly_cmd->add_option("--grid", grid_points, "grid points for --check")
      ->check(CLI::Range(2, 2001))
      ->default_val(201);
  duopoly_cmd->add_flag("--check", check, "run the grid oracle verification");
  add_format_option(duopoly_cmd, format);

  CLI::App* lstar_cmd = app.add_subcommand("lstar", "root of the Puu threshold polynomial");
  lstar_cmd->add_option("--tol", tol, "bisection tolerance")
      ->check(CLI::PositiveNumber)
      ->default_val(1e-6);
  add_format_option(lstar_cmd, format);

  CLI::App* select_cmd = app.add_subcommand("select", "seeded uniform selection among m-equilibria");
  add_input_options(select_cmd, in);
  add_format_option(select_cmd, format);
  select_cmd->add_option("--seed", seed, "selection seed")->required();

  CLI::App* builtin_cmd = app.add_subcommand("builtin", "builtin game catalog");
  builtin_cmd->add_flag("--list", list_builtins, "list builtin game names");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help("", CLI::AppFormatMode::Normal);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "flatgame: " << e.what() << "\n";
    return 2;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(in, format, out);
    if (flatten_cmd->parsed()) {
      return cmd_flatten(in, format, iterations, show_nwr, out);
    }
    if (me_cmd->parsed()) return cmd_me(in, format, out);
    if (mixed_cmd->parsed()) return cmd_mixed(in, format, max_support, out);
    if (duopoly_cmd->parsed()) {
      return cmd_duopoly(model, l_text, c_text, xmax_text, grid_points, check,
                         format, out);
    }
    if (lstar_cmd->parsed()) return cmd_lstar(tol, format, out);
    if (select_cmd->parsed()) return cmd_select(in, format, seed, out);
    if (builtin_cmd->parsed()) {
      if (!list_builtins) throw UsageError("builtin requires --list");
      for (const std::string& name : builtin_names()) out << name << "\n";
      return 0;
    }
    throw UsageError("no command given");
  } catch (const UsageError& e) {
    err << "flatgame: " << e.what() << "\n";
    return 2;
  } catch (const UnknownBuiltinError& e) {
    err << "flatgame: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "flatgame: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "flatgame: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace flatgame
