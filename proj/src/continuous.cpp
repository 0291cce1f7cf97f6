#include "flatgame/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "flatgame/errors.hpp"
#include "flatgame/flatten.hpp"

namespace flatgame {

ParametricDuopoly ParametricDuopoly::cournot(const Rational& L) {
  if (!(Rational(0) < L)) throw BadParamsError("cournot requires L > 0");
  return ParametricDuopoly(DuopolyModel::kCournot, L, Rational(0), L);
}

ParametricDuopoly ParametricDuopoly::puu(const Rational& L) {
  if (!(Rational(1) < L)) throw BadParamsError("puu requires L > 1");
  return ParametricDuopoly(DuopolyModel::kPuu, L, Rational(0), L);
}

ParametricDuopoly ParametricDuopoly::diminishing_cost(
    const Rational& L, const Rational& C, std::optional<Rational> xmax) {
  if (!(Rational(0) < C)) {
    throw BadParamsError("diminishing-cost requires C > 0");
  }
  if (L < C * Rational(2)) {
    throw BadParamsError("diminishing-cost requires L >= 2C");
  }
  Rational upper = xmax.value_or(L * Rational(100));
  if (!(Rational(0) < upper)) {
    throw BadParamsError("truncation bound must be positive");
  }
  return ParametricDuopoly(DuopolyModel::kDiminishingCost, L, C, upper);
}

std::string ParametricDuopoly::name() const {
  std::ostringstream os;
  switch (model_) {
    case DuopolyModel::kCournot:
      os << "cournot(L=" << L_.str() << ")";
      break;
    case DuopolyModel::kPuu:
      os << "puu(L=" << L_.str() << ")";
      break;
    case DuopolyModel::kDiminishingCost:
      os << "dimcost(L=" << L_.str() << ",C=" << C_.str()
         << ",Xmax=" << upper_.str() << ")";
      break;
  }
  return os.str();
}

bool ParametricDuopoly::in_domain(double x, double y) const {
  double u = domain_upper();
  return x >= 0 && y >= 0 && x <= u && y <= u;
}

void ParametricDuopoly::require_in_domain(double x, double y) const {
  if (!in_domain(x, y)) {
    std::ostringstream os;
    os << "point (" << x << "," << y << ") outside [0," << domain_upper()
       << "]^2";
    throw DomainError(os.str());
  }
}

double ParametricDuopoly::payoff1(double x, double y) const {
  switch (model_) {
    case DuopolyModel::kCournot:
      return x * (L() - (x + y));
    case DuopolyModel::kPuu:
      if (x + y == 0) return 0.0;
      return (L() / (x + y) - 1.0) * x;
    case DuopolyModel::kDiminishingCost:
      if (x == 0) return 0.0;
      return L() * x / (x + y) - C() / x;
  }
  return 0.0;
}

double ParametricDuopoly::flat1(double x, double y) const {
  switch (model_) {
    case DuopolyModel::kCournot:
      return x * std::min(y, L() - (x + y));
    case DuopolyModel::kPuu:
      return std::min(y, payoff1(x, y));
    case DuopolyModel::kDiminishingCost:
      return x == 0 ? 0.0 : -C() / x;
  }
  return 0.0;
}

double ParametricDuopoly::payoff(double x, double y, int player) const {
  require_in_domain(x, y);
  return player == 1 ? payoff1(x, y) : payoff1(y, x);
}

double ParametricDuopoly::flat_payoff(double x, double y, int player) const {
  require_in_domain(x, y);
  return player == 1 ? flat1(x, y) : flat1(y, x);
}

Rational ParametricDuopoly::payoff_exact(const Rational& x, const Rational& y,
                                         int player) const {
  if (player == 2) return payoff_exact(y, x, 1);
  const Rational zero(0);
  if (x < zero || y < zero || upper_ < x || upper_ < y) {
    throw DomainError("exact payoff request outside the model domain");
  }
  switch (model_) {
    case DuopolyModel::kCournot:
      return x * (L_ - (x + y));
    case DuopolyModel::kPuu: {
      Rational total = x + y;
      if (total.is_zero()) return zero;
      return (L_ / total - Rational(1)) * x;
    }
    case DuopolyModel::kDiminishingCost: {
      if (x.is_zero()) return zero;
      return L_ * x / (x + y) - C_ / x;
    }
  }
  return zero;
}

GridSpec GridSpec::over(const Rational& lower, const Rational& upper,
                        int points) {
  if (points < 2) throw BadParamsError("grid needs at least two points");
  if (!(lower < upper)) throw BadParamsError("grid needs lower < upper");
  return GridSpec{lower, upper, points};
}

Rational GridSpec::step_exact() const {
  return (upper - lower) / Rational(points - 1);
}

std::vector<Rational> GridSpec::nodes() const {
  std::vector<Rational> out;
  out.reserve(points);
  Rational step = step_exact();
  for (int i = 0; i < points; ++i) {
    out.push_back(i + 1 == points ? upper : lower + step * Rational(i));
  }
  return out;
}

namespace {

double segment_distance(double px, double py, double ax, double ay, double bx,
                        double by) {
  double vx = bx - ax, vy = by - ay;
  double len2 = vx * vx + vy * vy;
  double t = len2 == 0 ? 0.0 : ((px - ax) * vx + (py - ay) * vy) / len2;
  t = std::clamp(t, 0.0, 1.0);
  double dx = px - (ax + t * vx), dy = py - (ay + t * vy);
  return std::hypot(dx, dy);
}

constexpr double kLstarWindow = 1e-9;
constexpr double kLstarPointTol = 1e-4;

}  // namespace

MeRegion analytic_me_set(const ParametricDuopoly& d) {
  MeRegion region;
  region.model_ = d.model();
  region.L_ = d.L();
  std::ostringstream os;
  switch (d.model()) {
    case DuopolyModel::kCournot:
      os << "{(x, L-2x) : 0 <= x <= L/3} U {(x, (L-x)/2) : L/3 <= x <= L}, L="
         << d.L();
      break;
    case DuopolyModel::kPuu: {
      region.at_lstar_ = std::abs(d.L() - lstar(1e-12)) <= kLstarWindow;
      os << "{x,y >= 0, x+y <= sqrt(L)}";
      if (region.at_lstar_) {
        os << " U {(sqrt(L), sqrt(L)(L^(1/4)-1)), (sqrt(L)(L^(1/4)-1), "
              "sqrt(L))}";
      }
      if (d.L() > 16.0) os << " U {(L/4, L/4)}";
      os << ", L=" << d.L();
      break;
    }
    case DuopolyModel::kDiminishingCost:
      os << "{(0, 0)}";
      break;
  }
  region.description_ = os.str();
  return region;
}

bool MeRegion::contains(double x, double y, double tol) const {
  switch (model_) {
    case DuopolyModel::kCournot: {
      double third = L_ / 3.0;
      return segment_distance(x, y, 0.0, L_, third, third) <= tol ||
             segment_distance(x, y, third, third, L_, 0.0) <= tol;
    }
    case DuopolyModel::kPuu: {
      double root = std::sqrt(L_);
      if (x >= -tol && y >= -tol && x + y <= root + tol) return true;
      if (at_lstar_) {
        double wide = std::max(tol, kLstarPointTol);
        double a = root;
        double b = root * (std::pow(L_, 0.25) - 1.0);
        if (std::hypot(x - a, y - b) <= wide) return true;
        if (std::hypot(x - b, y - a) <= wide) return true;
      }
      if (L_ > 16.0 && std::hypot(x - L_ / 4.0, y - L_ / 4.0) <= tol) {
        return true;
      }
      return false;
    }
    case DuopolyModel::kDiminishingCost:
      return std::hypot(x, y) <= tol;
  }
  return false;
}

double lstar_polynomial(double L) {
  // Horner form of 1 + 4L + 6L^2 + 4L^3 + L^4 - L^5
  return 1.0 + L * (4.0 + L * (6.0 + L * (4.0 + L * (1.0 - L))));
}

double lstar(double tolerance) {
  if (!(tolerance > 0)) throw BadParamsError("tolerance must be positive");
  double lo = 3.0, hi = 4.0;
  double flo = lstar_polynomial(lo);
  double fhi = lstar_polynomial(hi);
  if (!(flo > 0.0 && fhi < 0.0)) {
    throw Error("lstar bracket [3,4] lost its sign change");
  }
  while (hi - lo > tolerance) {
    double mid = 0.5 * (lo + hi);
    double fmid = lstar_polynomial(mid);
    if (fmid == 0.0) return mid;
    if (fmid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace {

void require_grid_in_domain(const ParametricDuopoly& d, const GridSpec& grid) {
  if (grid.lower < Rational(0) || d.domain_upper_exact() < grid.upper) {
    throw DomainError("grid bounds [" + grid.lower.str() + "," +
                      grid.upper.str() + "] outside the model domain [0," +
                      d.domain_upper_exact().str() + "]");
  }
}

}  // namespace

FiniteGame discretize(const ParametricDuopoly& d, const GridSpec& grid) {
  require_grid_in_domain(d, grid);
  std::vector<Rational> nodes = grid.nodes();
  const int n = static_cast<int>(nodes.size());
  Matrix p1(n, std::vector<Rational>(n));
  Matrix p2(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      p1[i][j] = d.payoff_exact(nodes[i], nodes[j], 1);
      p2[i][j] = d.payoff_exact(nodes[i], nodes[j], 2);
    }
  }
  FiniteGame g(p1, p2,
               d.name() + " grid " + std::to_string(n) + "x" + std::to_string(n));
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = nodes[i].str();
  g.set_labels(labels, labels);
  return g;
}

double verify_flat_closed_form(const ParametricDuopoly& d,
                               const GridSpec& grid) {
  require_grid_in_domain(d, grid);
  FiniteGame game = discretize(d, grid);
  FiniteGame flat = detail::flatten_once(game);
  std::vector<Rational> nodes = grid.nodes();
  const int n = static_cast<int>(nodes.size());
  double worst = 0.0;
  const double xmax = d.domain_upper();
  for (int i = 0; i < n; ++i) {
    double x = nodes[i].to_double();
    double budget = 0.0;
    if (d.model() == DuopolyModel::kDiminishingCost && x > 0) {
      budget = d.L() * x / (x + xmax);
    }
    for (int j = 0; j < n; ++j) {
      double y = nodes[j].to_double();
      double dev = std::abs(flat.payoff1(i, j).to_double() -
                            d.flat_payoff(x, y, 1));
      worst = std::max(worst, dev - budget);
    }
  }
  return worst;
}

namespace {

bool membership_check(const ParametricDuopoly& d, double x, double y,
                      int samples, double tol, bool use_flat) {
  d.require_in_domain(x, y);
  if (samples < 2) throw BadParamsError("need at least two deviation samples");
  auto value = [&](double a, double b, int player) {
    return use_flat ? d.flat_payoff(a, b, player) : d.payoff(a, b, player);
  };
  const double base1 = value(x, y, 1);
  const double base2 = value(x, y, 2);
  const double upper = d.domain_upper();
  for (int k = 0; k < samples; ++k) {
    double s = upper * k / (samples - 1);
    if (value(s, y, 1) - base1 > tol) return false;
    if (value(x, s, 2) - base2 > tol) return false;
  }
  return true;
}

}  // namespace

bool verify_ne_membership(const ParametricDuopoly& d, double x, double y,
                          int samples, double tol) {
  return membership_check(d, x, y, samples, tol, /*use_flat=*/false);
}

bool verify_me_membership(const ParametricDuopoly& d, double x, double y,
                          int samples, double tol) {
  return membership_check(d, x, y, samples, tol, /*use_flat=*/true);
}

}  // namespace flatgame
