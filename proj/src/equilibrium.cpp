#include "flatgame/equilibrium.hpp"

#include <algorithm>

#include "flatgame/flatten.hpp"

namespace flatgame {
namespace {

std::vector<PureProfile> collect(const FiniteGame& g, const auto& pred) {
  std::vector<PureProfile> out;
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      if (pred(r, c)) out.push_back({r, c});
    }
  }
  return out;  // row-major by construction
}

// Per-column maxima of P1 and per-row maxima of P2 (best-response values).
struct BestValues {
  std::vector<Rational> col_max1;  // size cols
  std::vector<Rational> row_max2;  // size rows
  std::vector<int> col_max1_count;
  std::vector<int> row_max2_count;
};

BestValues best_values(const FiniteGame& g) {
  BestValues b;
  b.col_max1.resize(g.cols());
  b.col_max1_count.assign(g.cols(), 0);
  for (int c = 0; c < g.cols(); ++c) {
    for (int r = 0; r < g.rows(); ++r) {
      const Rational& v = g.payoff1(r, c);
      if (r == 0 || b.col_max1[c] < v) {
        b.col_max1[c] = v;
        b.col_max1_count[c] = 1;
      } else if (b.col_max1[c] == v) {
        ++b.col_max1_count[c];
      }
    }
  }
  b.row_max2.resize(g.rows());
  b.row_max2_count.assign(g.rows(), 0);
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      const Rational& v = g.payoff2(r, c);
      if (c == 0 || b.row_max2[r] < v) {
        b.row_max2[r] = v;
        b.row_max2_count[r] = 1;
      } else if (b.row_max2[r] == v) {
        ++b.row_max2_count[r];
      }
    }
  }
  return b;
}

bool semi_strict_at(const FiniteGame& g, int r, int c, bool weak) {
  for (int rr = 0; rr < g.rows(); ++rr) {
    if (g.payoff1(rr, c) == g.payoff1(r, c)) {
      if (weak ? g.payoff2(rr, c) < g.payoff2(r, c)
               : g.payoff2(rr, c) != g.payoff2(r, c)) {
        return false;
      }
    }
  }
  for (int cc = 0; cc < g.cols(); ++cc) {
    if (g.payoff2(r, cc) == g.payoff2(r, c)) {
      if (weak ? g.payoff1(r, cc) < g.payoff1(r, c)
               : g.payoff1(r, cc) != g.payoff1(r, c)) {
        return false;
      }
    }
  }
  return true;
}

bool cwi_at(const FiniteGame& g, int r, int c) {
  for (int rr = 0; rr < g.rows(); ++rr) {
    if (g.payoff1(rr, c) >= g.payoff1(r, c) &&
        g.payoff2(rr, c) < g.payoff2(r, c)) {
      return false;
    }
  }
  for (int cc = 0; cc < g.cols(); ++cc) {
    if (g.payoff2(r, cc) >= g.payoff2(r, c) &&
        g.payoff1(r, cc) < g.payoff1(r, c)) {
      return false;
    }
  }
  return true;
}

// Sorted distinct payoff pairs with, per pair, the running maximum of the
// second coordinate over strictly larger first coordinates, and over weakly
// larger first coordinates excluding ties of the full pair. Used for the
// O(N log N) Pareto scans.
struct ParetoIndex {
  // pairs sorted ascending by (P1, P2)
  std::vector<std::pair<Rational, Rational>> sorted;
  // max P2 among pairs with strictly larger P1 (same length as groups)
  std::vector<Rational> max2_above;  // aligned with group starts
  std::vector<size_t> group_start;   // indices into sorted, one per P1 group
  std::vector<Rational> group_max2;  // max P2 within the P1 group
  bool has_above(size_t group) const { return group + 1 < group_start.size(); }
};

ParetoIndex build_pareto_index(const FiniteGame& g) {
  ParetoIndex ix;
  ix.sorted.reserve(g.rows() * g.cols());
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      ix.sorted.emplace_back(g.payoff1(r, c), g.payoff2(r, c));
    }
  }
  std::sort(ix.sorted.begin(), ix.sorted.end());
  for (size_t i = 0; i < ix.sorted.size();) {
    size_t j = i;
    Rational m = ix.sorted[i].second;
    while (j < ix.sorted.size() && ix.sorted[j].first == ix.sorted[i].first) {
      m = max(m, ix.sorted[j].second);
      ++j;
    }
    ix.group_start.push_back(i);
    ix.group_max2.push_back(m);
    i = j;
  }
  // suffix maxima of group_max2 over strictly larger P1
  ix.max2_above.resize(ix.group_start.size());
  for (size_t gi = ix.group_start.size(); gi-- > 0;) {
    if (gi + 1 == ix.group_start.size()) continue;
    ix.max2_above[gi] = ix.group_max2[gi + 1];
    if (gi + 2 < ix.group_start.size()) {
      ix.max2_above[gi] = max(ix.max2_above[gi], ix.max2_above[gi + 1]);
    }
  }
  return ix;
}

size_t group_of(const ParetoIndex& ix, const Rational& p1) {
  size_t lo = 0, hi = ix.group_start.size();
  while (lo + 1 < hi) {
    size_t mid = (lo + hi) / 2;
    if (ix.sorted[ix.group_start[mid]].first <= p1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

std::vector<PureProfile> pareto_optima(const FiniteGame& g) {
  ParetoIndex ix = build_pareto_index(g);
  return collect(g, [&](int r, int c) {
    size_t gi = group_of(ix, g.payoff1(r, c));
    if (!ix.has_above(gi)) return true;
    return !(g.payoff2(r, c) < ix.max2_above[gi]);
  });
}

std::vector<PureProfile> strong_pareto_optima(const FiniteGame& g) {
  ParetoIndex ix = build_pareto_index(g);
  return collect(g, [&](int r, int c) {
    size_t gi = group_of(ix, g.payoff1(r, c));
    // strictly better in P1, weakly in P2
    if (ix.has_above(gi) && !(ix.max2_above[gi] < g.payoff2(r, c))) {
      return false;
    }
    // weakly better in P1 (same group), strictly in P2
    if (g.payoff2(r, c) < ix.group_max2[gi]) return false;
    return true;
  });
}

namespace {

struct Security {
  Rational value1, value2;              // max-min security levels
  std::vector<char> best1, best2;       // argmax indicator per strategy
};

Security security_levels(const FiniteGame& g) {
  Security s;
  std::vector<Rational> worst1(g.rows()), worst2(g.cols());
  for (int r = 0; r < g.rows(); ++r) {
    worst1[r] = g.payoff1(r, 0);
    for (int c = 1; c < g.cols(); ++c) worst1[r] = min(worst1[r], g.payoff1(r, c));
  }
  for (int c = 0; c < g.cols(); ++c) {
    worst2[c] = g.payoff2(0, c);
    for (int r = 1; r < g.rows(); ++r) worst2[c] = min(worst2[c], g.payoff2(r, c));
  }
  s.value1 = *std::max_element(worst1.begin(), worst1.end());
  s.value2 = *std::max_element(worst2.begin(), worst2.end());
  s.best1.resize(g.rows());
  s.best2.resize(g.cols());
  for (int r = 0; r < g.rows(); ++r) s.best1[r] = worst1[r] == s.value1;
  for (int c = 0; c < g.cols(); ++c) s.best2[c] = worst2[c] == s.value2;
  return s;
}

}  // namespace

std::vector<PureProfile> wald_solutions(const FiniteGame& g) {
  Security s = security_levels(g);
  return collect(g, [&](int r, int c) { return s.best1[r] && s.best2[c]; });
}

bool is_maximin(const FiniteGame& g, PureProfile p) {
  g.require_in_range(p);
  Security s = security_levels(g);
  return s.best1[p.row] && s.best2[p.col] &&
         g.payoff1(p.row, p.col) == s.value1 &&
         g.payoff2(p.row, p.col) == s.value2;
}

std::vector<PureProfile> nash_equilibria(const FiniteGame& g) {
  BestValues b = best_values(g);
  return collect(g, [&](int r, int c) {
    return g.payoff1(r, c) == b.col_max1[c] && g.payoff2(r, c) == b.row_max2[r];
  });
}

std::vector<PureProfile> strict_ne(const FiniteGame& g) {
  BestValues b = best_values(g);
  return collect(g, [&](int r, int c) {
    return g.payoff1(r, c) == b.col_max1[c] && b.col_max1_count[c] == 1 &&
           g.payoff2(r, c) == b.row_max2[r] && b.row_max2_count[r] == 1;
  });
}

std::vector<PureProfile> semi_strict_ne(const FiniteGame& g) {
  BestValues b = best_values(g);
  return collect(g, [&](int r, int c) {
    return g.payoff1(r, c) == b.col_max1[c] &&
           g.payoff2(r, c) == b.row_max2[r] &&
           semi_strict_at(g, r, c, /*weak=*/false);
  });
}

std::vector<PureProfile> weakly_semi_strict_ne(const FiniteGame& g) {
  BestValues b = best_values(g);
  return collect(g, [&](int r, int c) {
    return g.payoff1(r, c) == b.col_max1[c] &&
           g.payoff2(r, c) == b.row_max2[r] &&
           semi_strict_at(g, r, c, /*weak=*/true);
  });
}

std::vector<PureProfile> cwi_profiles(const FiniteGame& g) {
  return collect(g, [&](int r, int c) { return cwi_at(g, r, c); });
}

const char* flag_name(ProfileFlag f) {
  switch (f) {
    case ProfileFlag::kPO: return "PO";
    case ProfileFlag::kSPO: return "SPO";
    case ProfileFlag::kWald: return "WALD";
    case ProfileFlag::kMaximin: return "MAXIMIN";
    case ProfileFlag::kNE: return "NE";
    case ProfileFlag::kSNE: return "SNE";
    case ProfileFlag::kSSNE: return "SSNE";
    case ProfileFlag::kWSSNE: return "WSSNE";
    case ProfileFlag::kCWI: return "CWI";
    case ProfileFlag::kME: return "ME";
  }
  return "?";
}

std::vector<ProfileFlag> all_flags() {
  return {ProfileFlag::kPO,   ProfileFlag::kSPO,   ProfileFlag::kWald,
          ProfileFlag::kMaximin, ProfileFlag::kNE, ProfileFlag::kSNE,
          ProfileFlag::kSSNE, ProfileFlag::kWSSNE, ProfileFlag::kCWI,
          ProfileFlag::kME};
}

std::vector<PureProfile> ClassificationReport::with(ProfileFlag f) const {
  std::vector<PureProfile> out;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (has({r, c}, f)) out.push_back({r, c});
    }
  }
  return out;
}

ClassificationReport classify(const FiniteGame& g) {
  ClassificationReport report;
  report.title = g.title();
  report.rows = g.rows();
  report.cols = g.cols();
  report.masks.assign(g.rows() * g.cols(), 0);
  auto mark = [&](const std::vector<PureProfile>& ps, ProfileFlag f) {
    for (const PureProfile& p : ps) {
      report.masks[p.row * g.cols() + p.col] |= static_cast<std::uint16_t>(f);
    }
  };
  mark(pareto_optima(g), ProfileFlag::kPO);
  mark(strong_pareto_optima(g), ProfileFlag::kSPO);
  mark(wald_solutions(g), ProfileFlag::kWald);
  mark(nash_equilibria(g), ProfileFlag::kNE);
  mark(strict_ne(g), ProfileFlag::kSNE);
  mark(semi_strict_ne(g), ProfileFlag::kSSNE);
  mark(weakly_semi_strict_ne(g), ProfileFlag::kWSSNE);
  mark(cwi_profiles(g), ProfileFlag::kCWI);
  mark(m_equilibria(g), ProfileFlag::kME);
  Security s = security_levels(g);
  for (int r = 0; r < g.rows(); ++r) {
    for (int c = 0; c < g.cols(); ++c) {
      if (s.best1[r] && s.best2[c] && g.payoff1(r, c) == s.value1 &&
          g.payoff2(r, c) == s.value2) {
        report.masks[r * g.cols() + c] |=
            static_cast<std::uint16_t>(ProfileFlag::kMaximin);
      }
    }
  }
  return report;
}

}  // namespace flatgame
