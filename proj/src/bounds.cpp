#include "abharm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "abharm/errors.hpp"
#include "abharm/quadrature.hpp"
#include "abharm/specfun.hpp"

namespace abharm {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Kinks of |cos|, |sin| and the r = 1 singularity of powers of w all sit on these.
const std::vector<double> kBreaks{kPi / 2.0, kPi, 3.0 * kPi / 2.0};

// 1 + r^2 + 2r cos s, written so it stays non-negative near s = pi, r = 1.
double wfun(double r, double s) {
  const double c = std::cos(s / 2.0);
  // Floored so quadrature abscissae that round onto the singular point stay finite.
  return std::max((1.0 - r) * (1.0 - r) + 4.0 * r * c * c, std::numeric_limits<double>::min());
}

double circle_mean(const std::function<double(double)>& f) { return quad::circle_integral(f, kBreaks) / (2.0 * kPi); }

double hyp(double a, double b, double c, double x) {
  const HypParams hp(a, b, c);
  return x >= 1.0 ? gauss_2f1_at_one(hp) : gauss_2f1(hp, x);
}

void check_radius(double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("radius must lie in [0, 1]");
}

// Powers w^e are integrable over the circle at r = 1 only when e > -1/2.
bool diverges_at_one(double r, double e) { return r >= 1.0 && e <= -0.5; }

SupValue grid_sup(const std::function<double(double)>& f) {
  SupValue s;
  s.value = -kInfinity;
  for (int j = 1; j <= kSupGridPoints; ++j) {
    const double r = static_cast<double>(j) / kSupGridPoints;
    const double v = f(r);
    if (v > s.value || std::isnan(v)) {
      s.value = v;
      s.at_r = r;
    }
  }
  s.grid_points = kSupGridPoints;
  return s;
}

void attach_printed(SupValue& s, std::optional<double> printed) {
  s.printed = printed;
  s.flag = printed ? compare_printed(s.value, *printed) : "not_applicable";
}

double safe_gamma_ratio2(double num, double den) {
  // Gamma(num) / Gamma(den)^2
  const double g = gamma(den);
  return gamma(num) / (g * g);
}


}  // namespace

// ---------------------------------------------------------------------------

HolderPair::HolderPair(double p) {
  if (std::isnan(p) || p < 1.0) throw ParameterError("p must satisfy p >= 1 (or be inf)");
  if (std::isinf(p)) {
    kind_ = Kind::Infinity;
    inv_p_ = 0.0;
  } else if (p == 1.0) {
    kind_ = Kind::One;
    inv_p_ = 1.0;
  } else {
    kind_ = Kind::Finite;
    inv_p_ = 1.0 / p;
  }
}

double HolderPair::p() const { return kind_ == Kind::Infinity ? kInfinity : 1.0 / inv_p_; }

double HolderPair::q() const {
  switch (kind_) {
    case Kind::One: return kInfinity;
    case Kind::Infinity: return 1.0;
    case Kind::Finite: break;
  }
  return 1.0 / (1.0 - inv_p_);
}

std::string HolderPair::label() const { return kind_ == Kind::Infinity ? "inf" : format_number(p()); }

const BoundEntry* BoundReport::find(const std::string& name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

Json BoundReport::to_json() const {
  Json arr = Json::array();
  for (const auto& e : entries) {
    Json o = Json::object();
    o.set("name", e.name);
    o.set("value", e.value);
    o.set("source", e.source);
    o.set("method", e.method);
    if (e.nodes) o.set("nodes", *e.nodes);
    if (e.reference) o.set("reference", *e.reference);
    if (e.flag) o.set("flag", *e.flag);
    arr.push(std::move(o));
  }
  return arr;
}

std::string compare_printed(double grid, double printed) {
  if (std::isnan(printed)) return "understates";
  if (std::isinf(grid) && std::isinf(printed)) return "exact";
  if (std::abs(printed - grid) <= kSupFlagTolerance * std::max(1.0, std::abs(grid))) return "exact";
  return printed > grid ? "conservative" : "understates";
}

// ---- section 2 ------------------------------------------------------------

double heinz_functional(const AlphaBeta& p, cplx c0, cplx c1, cplx cm1) {
  const double a = p.alpha();
  const double b = p.beta();
  const double scale = 1.0 / p.c_norm();
  const double body = std::norm(c1) / ((1.0 + a) * (1.0 + a)) + 3.0 * std::sqrt(3.0) / kPi * std::norm(c0) +
                      std::norm(cm1) / ((1.0 + b) * (1.0 + b));
  return scale * scale * body;
}

double heinz_rhs() { return 27.0 / (4.0 * kPi * kPi); }

CoefficientKind parse_coefficient_kind(const std::string& name) {
  if (name == "typically_real") return CoefficientKind::TypicallyReal;
  if (name == "c_minus2") return CoefficientKind::CMinus2;
  if (name == "c2") return CoefficientKind::C2;
  if (name == "starlike_ck") return CoefficientKind::StarlikeCk;
  if (name == "starlike_cmk") return CoefficientKind::StarlikeCmk;
  if (name == "conjecture_ck") return CoefficientKind::ConjectureCk;
  if (name == "conjecture_cmk") return CoefficientKind::ConjectureCmk;
  throw ParameterError("unknown coefficient bound kind '" + name + "'");
}

std::string to_string(CoefficientKind kind) {
  switch (kind) {
    case CoefficientKind::TypicallyReal: return "typically_real";
    case CoefficientKind::CMinus2: return "c_minus2";
    case CoefficientKind::C2: return "c2";
    case CoefficientKind::StarlikeCk: return "starlike_ck";
    case CoefficientKind::StarlikeCmk: return "starlike_cmk";
    case CoefficientKind::ConjectureCk: return "conjecture_ck";
    case CoefficientKind::ConjectureCmk: return "conjecture_cmk";
  }
  return "?";
}

namespace {

bool negative_ordered(const AlphaBeta& p) { return -1.0 < p.beta() && p.beta() < p.alpha() && p.alpha() < 0.0; }

}  // namespace

double conjecture_infimum(const AlphaBeta& p, int k, bool negative) {
  if (k < 2) throw ParameterError("coefficient index k must be at least 2");
  const double a = p.alpha();
  const double b = p.beta();
  if (negative_ordered(p)) {
    if (!negative) return std::abs(gamma(k + 1.0 + a) / (gamma(k + 1.0) * gamma(2.0 + a)));
    return std::abs(gamma(k + 1.0 + b) / ((1.0 + a) * gamma(k + 1.0) * gamma(1.0 + b)));
  }
  auto ratio = [&](double x) {
    const double num = hyp(-a, 1.0 - b, 2.0, x);
    const double den = negative ? hyp(-b, k - a, k + 1.0, x) : hyp(-a, k - b, k + 1.0, x);
    return std::abs(num / den);
  };
  double best = 1.0;  // r -> 0
  for (int j = 0; j < kSupGridPoints; ++j) {
    const double r = 1.0 - std::pow(10.0, -6.0 * j / (kSupGridPoints - 1));
    best = std::min(best, ratio(r * r));
  }
  return std::min(best, ratio(1.0));
}

double coefficient_bound(const AlphaBeta& p, CoefficientKind kind, int k, std::optional<cplx> extra) {
  if (k < 2) throw ParameterError("coefficient index k must be at least 2");
  const double a = p.alpha();
  const double b = p.beta();
  const double kf = gamma(k + 1.0);
  switch (kind) {
    case CoefficientKind::TypicallyReal: {
      if (!extra) throw ParameterError("typically_real needs c_{-1}");
      return std::abs(1.0 / (1.0 + a) - *extra / (1.0 + b)) / gamma(k);
    }
    case CoefficientKind::CMinus2:
    case CoefficientKind::C2: {
      if (!negative_ordered(p)) throw ParameterError("this bound requires -1 < beta < alpha < 0");
      if (k != 2) throw ParameterError("this bound is stated for k = 2 only");
      if (kind == CoefficientKind::CMinus2) return (2.0 + b) * (1.0 + b) / (4.0 * (1.0 + a));
      return 20.9197 * (1.0 + a / 2.0);
    }
    case CoefficientKind::StarlikeCk:
      return std::abs((2.0 * k + 1.0) * (k + 1.0) * gamma(k + 1.0 + a) / (6.0 * kf * gamma(2.0 + a)));
    case CoefficientKind::StarlikeCmk:
      return std::abs((2.0 * k - 1.0) * (k - 1.0) * gamma(k + 1.0 + b) / (6.0 * (1.0 + a) * kf * gamma(1.0 + b)));
    case CoefficientKind::ConjectureCk:
      return (2.0 * k + 1.0) * (k + 1.0) / 6.0 * conjecture_infimum(p, k, false);
    case CoefficientKind::ConjectureCmk:
      return (2.0 * k - 1.0) * (k - 1.0) / 6.0 * conjecture_infimum(p, k, true);
  }
  throw ParameterError("unknown coefficient bound kind");
}

double normalized_a1_limit(const AlphaBeta& p) {
  return gamma(1.0 + p.alpha() + p.beta()) / std::abs(gamma(2.0 + p.alpha()) * gamma(1.0 + p.beta()));
}

BoundReport geometric_constants(const AlphaBeta& p) {
  const double f = normalized_a1_limit(p);
  BoundReport rep;
  rep.add({"omit_S", 2.0 * kPi * std::sqrt(6.0) / 9.0 * f, "Koebe-type omitted circle, normalized class",
           "closed_form", {}, {}, {}});
  rep.add({"omit_S0", 2.0 * kPi * std::sqrt(3.0) / 9.0 * f,
           "Koebe-type omitted circle, class with vanishing c_-1", "closed_form", {}, {}, {}});
  rep.add({"covering", f / 16.0, "covering disk radius", "closed_form", {}, {}, {}});
  rep.add({"area", kPi / 2.0 * f, "minimal image area", "closed_form", {}, {}, {}});
  return rep;
}

double covering_growth_lower_bound(const AlphaBeta& p, double r) {
  check_radius(r);
  return std::abs(hyp(-p.alpha(), 1.0 - p.beta(), 2.0, r * r) * r) / 16.0;
}

double rado_radius_bound(const AlphaBeta& p, cplx c1, cplx cm1) {
  const double a = p.alpha();
  const double b = p.beta();
  const double g = gamma(1.0 + a + b);
  const double t1 = std::abs(c1) * g / std::abs(gamma(2.0 + a) * gamma(1.0 + b));
  const double t2 = std::abs(cm1) * g / std::abs(gamma(1.0 + a) * gamma(2.0 + b));
  return std::sqrt((t1 * t1 + t2 * t2) / heinz_rhs());
}

// ---- growth ---------------------------------------------------------------

double growth_constant(const AlphaBeta& p, const HolderPair& hp, double r) {
  check_radius(r);
  const double c = std::abs(p.c_norm());
  const double S = p.alpha() + p.beta();
  if (hp.q_infinite()) return c * std::pow(1.0 + r, S + 2.0);
  const double q = hp.q();
  const double m = q * (1.0 + S / 2.0) - 1.0;
  if (diverges_at_one(r, m)) return kInfinity;
  const double d = (1.0 - r * r) / (1.0 + r * r);
  const double x = 1.0 - d * d;
  const double F = hyp((1.0 - m) / 2.0, -m / 2.0, 1.0, x);
  return c * std::pow(std::pow(1.0 + r * r, m) * F, 1.0 / q);
}

double growth_integral(const AlphaBeta& p, const HolderPair& hp, double r) {
  check_radius(r);
  const double c = std::abs(p.c_norm());
  const double S = p.alpha() + p.beta();
  if (hp.q_infinite()) return c * quad::circle_max([&](double s) { return std::pow(wfun(r, s), (S + 2.0) / 2.0); });
  const double q = hp.q();
  const double m = q * (1.0 + S / 2.0) - 1.0;
  if (diverges_at_one(r, m)) return kInfinity;
  return c * std::pow(circle_mean([&](double s) { return std::pow(wfun(r, s), m); }), 1.0 / q);
}

std::optional<double> growth_sup_printed(const AlphaBeta& p, const HolderPair& hp) {
  if (hp.q_infinite()) return std::nullopt;
  const double q = hp.q();
  const double S = p.alpha() + p.beta();
  try {
    const double base = std::pow(2.0, (S + 2.0) * q / 2.0 - 1.0) * gamma(-0.5 + q + S * q / 2.0) /
                        (2.0 * std::sqrt(kPi) * gamma(q + S * q / 2.0));
    if (!(base > 0.0)) return std::nullopt;
    return std::abs(p.c_norm()) * std::pow(base, 1.0 / q);
  } catch (const PoleError&) {
    return std::nullopt;
  }
}

SupValue growth_sup(const AlphaBeta& p, const HolderPair& hp) {
  SupValue s = grid_sup([&](double r) { return growth_constant(p, hp, r); });
  attach_printed(s, growth_sup_printed(p, hp));
  return s;
}

double mp_growth_factor(const AlphaBeta& p, double r) { return kernel_modulus_mean(p, r); }

// ---- distortion -----------------------------------------------------------

double distortion_u(const HolderPair& hp, double beta) {
  if (hp.q_infinite()) throw DomainError("U_p has no finite form at p = 1");
  const double a = hp.q() * (beta + 1.0);
  if (a <= 0.5) return kInfinity;
  return std::pow(2.0, -1.0 + 2.0 * a) * std::sqrt(kPi) * gamma(a - 0.5) / gamma(a);
}

double distortion_u_integral(const HolderPair& hp, double beta) {
  if (hp.q_infinite()) throw DomainError("U_p has no finite form at p = 1");
  const double m = hp.q() * (beta + 1.0) - 1.0;
  if (m <= -0.5) return kInfinity;
  return quad::circle_integral([&](double b) { return std::pow(wfun(1.0, b), m); }, kBreaks);
}

double distortion_l(const AlphaBeta& p, const HolderPair& hp, double r, double eta) {
  check_radius(r);
  if (hp.q_infinite()) throw DomainError("L is a finite-q quantity");
  const double q = hp.q();
  const double d = std::abs(p.beta() - p.alpha());
  const double m = q * p.beta() + q - 1.0;
  if (diverges_at_one(r, m)) return kInfinity;
  std::vector<double> breaks = kBreaks;
  breaks.push_back(kPi / 2.0 - eta);
  breaks.push_back(3.0 * kPi / 2.0 - eta);
  return quad::circle_integral(
      [&](double b) {
        return std::pow(wfun(r, b), m) * std::pow((d + 1.0) * std::abs(std::cos(b + eta)) + d * kPi, q);
      },
      breaks);
}

DistortionParts distortion_parts(const AlphaBeta& p, const HolderPair& hp, double r) {
  check_radius(r);
  const double a = p.alpha();
  const double b = p.beta();
  if (!(b > -1.0)) throw ParameterError("the distortion bound needs beta > -1");
  const double c = std::abs(p.c_norm());
  const double d = std::abs(b - a);
  DistortionParts out;
  if (hp.q_infinite()) {
    auto g = [&](double eta) {
      return quad::circle_max([&](double s) {
        return std::pow(wfun(r, s), b + 1.0) * ((d + 1.0) * std::abs(std::cos(s + eta)) + d * kPi);
      });
    };
    out.m = kInfinity;
    out.P = std::abs(a * r + b + 1.0);
    out.Q = std::abs(b + 1.0);
    out.U = std::pow(4.0, b + 1.0);
    out.L0 = g(0.0);
    out.Lhalf = g(kPi / 2.0);
    out.V = std::max(out.L0, out.Lhalf);
    out.printed_choice_is_max = out.Lhalf >= out.V;
    const double t1 = a * r != 0.0 ? out.P * out.U : 0.0;
    out.value = 2.0 * c * std::max(t1, out.Q * out.V);
    return out;
  }
  const double q = hp.q();
  out.m = q * b + q - 1.0;
  out.P = q * std::pow(std::abs(a * r + b + 1.0), q - 1.0) * std::abs(a) * r;
  out.Q = std::pow(std::abs(b + 1.0), q);
  out.U = distortion_u(hp, b);
  out.L0 = distortion_l(p, hp, r, 0.0);
  out.Lhalf = distortion_l(p, hp, r, kPi / 2.0);
  out.V = std::max(out.L0, out.Lhalf);
  const double chosen = out.m < 1.0 ? out.L0 : out.Lhalf;
  out.printed_choice_is_max = chosen >= out.V * (1.0 - 1e-12);
  const double pu = out.P == 0.0 ? 0.0 : out.P * out.U;
  out.value = 2.0 * c * std::pow((pu + out.Q * out.V) / (2.0 * kPi), 1.0 / q);
  out.printed = 2.0 * c * (pu + out.Q * chosen) / std::pow(2.0 * kPi, 1.0 / q);
  return out;
}

double distortion_constant(const AlphaBeta& p, const HolderPair& hp, double r) {
  return distortion_parts(p, hp, r).value;
}

SupValue distortion_sup(const AlphaBeta& p, const HolderPair& hp) {
  SupValue s = grid_sup([&](double r) { return distortion_constant(p, hp, r); });
  attach_printed(s, distortion_parts(p, hp, 1.0).printed);
  return s;
}

// ---- partial derivatives --------------------------------------------------

Derivative parse_derivative(const std::string& name) {
  if (name == "radial") return Derivative::Radial;
  if (name == "angular") return Derivative::Angular;
  if (name == "wirtinger") return Derivative::Wirtinger;
  if (name == "wirtinger_bar") return Derivative::WirtingerBar;
  throw ParameterError("unknown derivative '" + name + "'");
}

std::string to_string(Derivative d) {
  switch (d) {
    case Derivative::Radial: return "radial";
    case Derivative::Angular: return "angular";
    case Derivative::Wirtinger: return "wirtinger";
    case Derivative::WirtingerBar: return "wirtinger_bar";
  }
  return "?";
}

double partial_g(const AlphaBeta& p, const HolderPair& hp, double r, double x) {
  check_radius(r);
  if (hp.q_infinite()) throw DomainError("G is a finite-q quantity");
  const double q = hp.q();
  const double S = p.alpha() + p.beta();
  const double d = std::abs(p.alpha() - p.beta());
  const double e = ((S + 2.0) * q - 2.0) / 2.0;
  if (diverges_at_one(r, e)) return kInfinity;
  std::vector<double> breaks = kBreaks;
  breaks.push_back(x + kPi / 2.0);
  breaks.push_back(x + 3.0 * kPi / 2.0);
  return quad::circle_integral(
      [&](double s) { return std::pow(std::abs((S + 2.0) * std::cos(s - x)) + d, q) * std::pow(wfun(r, s), e); },
      breaks);
}

double partial_i12(const AlphaBeta& p, const HolderPair& hp, double r) {
  check_radius(r);
  const double S = p.alpha() + p.beta();
  if (hp.q_infinite()) throw DomainError("I12 is a finite-q quantity");
  const double a = 1.0 - (S + 2.0) * hp.q() / 2.0;
  return hyp(a, a, 1.0, r * r);
}

double partial_i12_integral(const AlphaBeta& p, const HolderPair& hp, double r) {
  check_radius(r);
  const double S = p.alpha() + p.beta();
  if (hp.q_infinite()) throw DomainError("I12 is a finite-q quantity");
  const double e = ((S + 2.0) * hp.q() - 2.0) / 2.0;
  if (diverges_at_one(r, e)) return kInfinity;
  return circle_mean([&](double s) { return std::pow(wfun(r, s), e); });
}

double wirtinger_integral(const AlphaBeta& p, const HolderPair& hp, double r) {
  check_radius(r);
  const double c = std::abs(p.c_norm());
  const double lead = std::abs(p.alpha() + 1.0) + std::abs(p.beta()) * r;
  const double S = p.alpha() + p.beta();
  if (hp.q_infinite()) {
    return c * lead * quad::circle_max([&](double s) { return std::pow(wfun(r, s), (S + 2.0) / 2.0); });
  }
  return c * lead * std::pow(partial_i12_integral(p, hp, r), 1.0 / hp.q());
}

double partial_constant(const AlphaBeta& p, const HolderPair& hp, Derivative which, double r) {
  check_radius(r);
  const double a = p.alpha();
  const double b = p.beta();
  const double S = a + b;
  const double d = std::abs(a - b);
  const double c = std::abs(p.c_norm());
  switch (which) {
    case Derivative::Wirtinger:
    case Derivative::WirtingerBar: {
      const AlphaBeta& use = which == Derivative::Wirtinger ? p : p.swapped();
      const double lead = std::abs(use.alpha() + 1.0) + std::abs(use.beta()) * r;
      if (hp.q_infinite()) return c * lead * std::pow(1.0 + r, S + 2.0);
      return c * lead * std::pow(partial_i12(p, hp, r), 1.0 / hp.q());
    }
    case Derivative::Radial: {
      if (hp.q_infinite()) {
        const double t1 = quad::circle_max(
            [&](double s) { return (std::abs((S + 2.0) * std::cos(s)) + d) * std::pow(wfun(r, s), (S + 2.0) / 2.0); });
        const double t2 =
            (S != 0.0 && r > 0.0) ? (std::abs(S) * r + std::abs(S + 2.0) + d) * std::pow(1.0 + r, S + 2.0) : 0.0;
        return c * std::max(t1, t2);
      }
      const double q = hp.q();
      const double c1 = S == 0.0 ? 0.0 : q * std::pow(std::abs(S) * r + std::abs(S + 2.0) + d, q - 1.0) * std::abs(S) * r;
      const double i12 = c1 == 0.0 ? 0.0 : partial_i12(p, hp, r);
      return c * std::pow(partial_g(p, hp, r, 0.0) / (2.0 * kPi) + c1 * i12, 1.0 / q);
    }
    case Derivative::Angular: {
      if (hp.q_infinite()) {
        const double t1 = quad::circle_max(
            [&](double s) { return (d + std::abs((S + 2.0) * std::sin(s))) * std::pow(wfun(r, s), (S + 2.0) / 2.0); });
        const double t2 = (d != 0.0 && r > 0.0) ? (d + std::abs(S + 2.0) + d * r) * std::pow(1.0 + r, S + 2.0) : 0.0;
        return c * r * std::max(t1, t2);
      }
      const double q = hp.q();
      const double c2 = d == 0.0 ? 0.0 : q * std::pow(d + std::abs(S + 2.0) + d * r, q - 1.0) * d * r;
      const double i12 = c2 == 0.0 ? 0.0 : partial_i12(p, hp, r);
      return c * r * std::pow(partial_g(p, hp, r, kPi / 2.0) / (2.0 * kPi) + c2 * i12, 1.0 / q);
    }
  }
  throw ParameterError("unknown derivative");
}

namespace {

std::optional<double> partial_sup_printed(const AlphaBeta& p, const HolderPair& hp, Derivative which) {
  if (hp.q_infinite()) return std::nullopt;
  const double q = hp.q();
  const double a = p.alpha();
  const double b = p.beta();
  const double S = a + b;
  const double d = std::abs(a - b);
  const double c = std::abs(p.c_norm());
  const double gam = safe_gamma_ratio2((S + 2.0) * q - 1.0, (S + 2.0) * q / 2.0);
  switch (which) {
    case Derivative::Wirtinger:
      return c * (std::abs(a + 1.0) + std::abs(b)) * std::pow(gam, 1.0 / q);
    case Derivative::WirtingerBar:
      return c * (std::abs(b + 1.0) + std::abs(a)) * std::pow(gam, 1.0 / q);
    case Derivative::Radial: {
      const double c1 = q * std::pow(std::abs(S) + std::abs(S + 2.0) + d, q - 1.0) * std::abs(S);
      const double g = (S + 2.0) * q <= 4.0 ? partial_g(p, hp, 1.0, kPi / 2.0) : partial_g(p, hp, 1.0, 0.0);
      return c * std::pow(c1 * gam + g / (2.0 * kPi), 1.0 / q);
    }
    case Derivative::Angular: {
      const double c2 = q * std::pow(d + std::abs(S + 2.0) + d, q - 1.0) * d;
      const double g = (S + 2.0) * q <= 4.0 ? partial_g(p, hp, 1.0, kPi / 2.0) : partial_g(p, hp, 1.0, 0.0);
      return c * std::pow(g / (2.0 * kPi) + c2 * gam, 1.0 / q);
    }
  }
  return std::nullopt;
}

}  // namespace

SupValue partial_sup(const AlphaBeta& p, const HolderPair& hp, Derivative which) {
  SupValue s = grid_sup([&](double r) { return partial_constant(p, hp, which, r); });
  attach_printed(s, partial_sup_printed(p, hp, which));
  return s;
}

double angular_equal_closed_form(const AlphaBeta& p, const HolderPair& hp, double r) {
  check_radius(r);
  const double a = p.alpha();
  if (std::abs(a - p.beta()) > 1e-12) throw ParameterError("closed form needs alpha = beta");
  const double c = std::abs(p.c_norm());
  if (hp.q_infinite()) {
    const double mx = quad::interval_max(
        [&](double t) { return std::sin(t) * std::pow(wfun(r, kPi - t), a + 1.0); }, 0.0, kPi);
    return c * r * (2.0 * a + 2.0) * mx;
  }
  const double q = hp.q();
  const double F = hyp(1.0 - (a + 1.0) * q, 1.0 - (a + 1.5) * q, 1.0 + q / 2.0, r * r);
  return c * r * (2.0 * a + 2.0) * std::pow(beta((1.0 + q) / 2.0, 0.5) * F / kPi, 1.0 / q);
}

double radial_classical(const HolderPair& hp, double r) {
  check_radius(r);
  if (hp.q_infinite()) return 2.0 * (1.0 + r) * (1.0 + r);
  const double q = hp.q();
  return 2.0 * std::pow(circle_mean([&](double s) {
                          return std::pow(std::abs(std::cos(s)), q) * std::pow(wfun(r, s), q - 1.0);
                        }),
                        1.0 / q);
}

double radial_classical_sup(const HolderPair& hp) {
  if (hp.q_infinite()) return 8.0;
  const double q = hp.q();
  const double integral = quad::circle_integral(
      [&](double s) { return std::pow(std::abs(std::cos(s)), q) * std::pow(1.0 + std::cos(s), q - 1.0); }, kBreaks);
  return std::pow(4.0, hp.inv_p()) / std::pow(kPi, hp.inv_q()) * std::pow(integral, 1.0 / q);
}

// ---- integral means of derivatives ----------------------------------------

double means_constant(const AlphaBeta& p, Derivative which, double r) {
  check_radius(r);
  const double a = p.alpha();
  const double b = p.beta();
  const double S = a + b;
  const double d = std::abs(a - b);
  const double c = std::abs(p.c_norm());
  const double m0 = hyp(-S / 2.0, -S / 2.0, 1.0, r * r);
  auto moment = [&](bool use_cos) {
    return circle_mean([&](double s) {
      return std::abs(use_cos ? std::cos(s) : std::sin(s)) * std::pow(wfun(r, s), S / 2.0);
    });
  };
  switch (which) {
    case Derivative::Radial: return c * (std::abs(S) * r * m0 + (S + 2.0) * moment(true) + d * moment(false));
    case Derivative::Angular: return c * r * (d * r * m0 + (S + 2.0) * moment(false) + d * moment(true));
    case Derivative::Wirtinger: return c * (std::abs(a + 1.0) + std::abs(b) * r) * m0;
    case Derivative::WirtingerBar: return c * (std::abs(b + 1.0) + std::abs(a) * r) * m0;
  }
  throw ParameterError("unknown derivative");
}

std::optional<double> means_sup_printed(const AlphaBeta& p, Derivative which) {
  const double a = p.alpha();
  const double b = p.beta();
  const double S = a + b;
  const double d = std::abs(a - b);
  const double c = std::abs(p.c_norm());
  const double gam = safe_gamma_ratio2(S + 1.0, (S + 2.0) / 2.0);
  if (which == Derivative::Wirtinger) return c * (std::abs(a + 1.0) + std::abs(b)) * gam;
  if (which == Derivative::WirtingerBar) return c * (std::abs(b + 1.0) + std::abs(a)) * gam;
  const bool use_cos = S >= 2.0;
  const double J = quad::circle_integral(
      [&](double s) {
        return std::abs(use_cos ? std::cos(s) : std::sin(s)) * std::pow(wfun(1.0, s) / 2.0, S / 2.0);
      },
      kBreaks);
  const double head = (S + 2.0 + d) / kPi * std::pow(2.0, S / 2.0 - 1.0) * J;
  if (which == Derivative::Radial) return c * (head + std::abs(S) * gam);
  return c * (head + d * gam);
}

SupValue means_sup(const AlphaBeta& p, Derivative which) {
  SupValue s = grid_sup([&](double r) { return means_constant(p, which, r); });
  attach_printed(s, means_sup_printed(p, which));
  return s;
}

// ---- report ---------------------------------------------------------------

BoundReport full_report(const AlphaBeta& p, const HolderPair& hp) {
  BoundReport rep;
  auto add_sup = [&](const std::string& name, const std::string& source, const SupValue& s) {
    BoundEntry e{name, s.value, source, "sup_over_grid", s.grid_points, s.printed, s.flag};
    rep.add(std::move(e));
  };

  rep.add({"heinz_rhs", heinz_rhs(), "Heinz inequality lower bound", "closed_form", {}, {}, {}});
  rep.add({"heinz_scale", 1.0 / (p.c_norm() * p.c_norm()), "Heinz inequality gamma prefactor", "closed_form", {}, {},
           {}});
  for (auto& e : geometric_constants(p).entries) rep.add(e);
  rep.add({"rado_radius_identity", rado_radius_bound(p, 1.0, 0.0), "Rado-type radius bound with c_1 = 1, c_-1 = 0",
           "closed_form", {}, {}, {}});

  rep.add({"starlike_c2", coefficient_bound(p, CoefficientKind::StarlikeCk, 2), "starlike coefficient bound, c_2",
           "closed_form", {}, {}, {}});
  rep.add({"starlike_c_minus2", coefficient_bound(p, CoefficientKind::StarlikeCmk, 2),
           "starlike coefficient bound, c_-2", "closed_form", {}, {}, {}});
  const bool closed = negative_ordered(p);
  rep.add({"conjecture_c2", coefficient_bound(p, CoefficientKind::ConjectureCk, 2),
           "coefficient conjecture, c_2", closed ? "closed_form" : "sup_over_grid",
           closed ? std::optional<int>{} : std::optional<int>{kSupGridPoints + 1}, {}, {}});
  rep.add({"conjecture_c_minus2", coefficient_bound(p, CoefficientKind::ConjectureCmk, 2),
           "coefficient conjecture, c_-2", closed ? "closed_form" : "sup_over_grid",
           closed ? std::optional<int>{} : std::optional<int>{kSupGridPoints + 1}, {}, {}});
  if (closed) {
    rep.add({"c_minus2", coefficient_bound(p, CoefficientKind::CMinus2, 2), "second co-analytic coefficient bound",
             "closed_form", {}, {}, {}});
    rep.add({"c2", coefficient_bound(p, CoefficientKind::C2, 2), "second analytic coefficient bound", "closed_form",
             {}, {}, {}});
  }

  rep.add({"mp_growth_limit", mp_growth_factor(p, 1.0), "sharp integral-means growth factor, r -> 1", "closed_form",
           {}, {}, {}});
  add_sup("growth_sup", "pointwise growth constant, sup over r", growth_sup(p, hp));
  if (p.beta() > -1.0) add_sup("distortion_sup", "Jacobian norm constant, sup over r", distortion_sup(p, hp));
  if (!hp.q_infinite()) {
    const double b = p.beta();
    rep.add({"distortion_U", distortion_u(hp, b), "distortion auxiliary U_p", "closed_form", {}, {}, {}});
  }
  for (Derivative d : {Derivative::Radial, Derivative::Angular, Derivative::Wirtinger, Derivative::WirtingerBar}) {
    add_sup("partial_" + to_string(d) + "_sup", "pointwise " + to_string(d) + " derivative constant, sup over r",
            partial_sup(p, hp, d));
  }
  for (Derivative d : {Derivative::Radial, Derivative::Angular, Derivative::Wirtinger, Derivative::WirtingerBar}) {
    add_sup("means_" + to_string(d) + "_sup", "integral means of the " + to_string(d) + " derivative, sup over r",
            means_sup(p, d));
  }
  return rep;
}

}  // namespace abharm
