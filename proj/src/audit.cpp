#include "abharm/audit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <ostream>
#include <tuple>

#include "abharm/errors.hpp"
#include "abharm/quadrature.hpp"
#include "abharm/specfun.hpp"

namespace abharm {
namespace {

constexpr double kPi = std::numbers::pi;

std::string short_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

std::string point_id(const DiskPoint& z) { return "z=" + short_number(z.r()) + "@" + short_number(z.theta()); }

double relative_error(double observed, double expected) {
  if (observed == expected) return 0.0;
  return std::abs(observed - expected) / std::max(1.0, std::abs(expected));
}

// Bound constants are pure functions of (kind, alpha, beta, p, r); audits revisit the same
// radii for every boundary function, so they are memoized here.
using MemoKey = std::tuple<int, double, double, double, double>;

double memo(int kind, const AlphaBeta& p, double pp, double r, const std::function<double()>& compute) {
  static std::mutex mutex;
  static std::map<MemoKey, double> table;
  const MemoKey key{kind, p.alpha(), p.beta(), pp, r};
  {
    std::lock_guard lock(mutex);
    if (auto it = table.find(key); it != table.end()) return it->second;
  }
  const double v = compute();
  std::lock_guard lock(mutex);
  table.emplace(key, v);
  return v;
}

enum MemoKind { kGrowth, kDistortion, kPartial0, kMeans0 = kPartial0 + 4 };

const PoissonSolver& solver_for(const AlphaBeta& p, const BoundaryFunction& f, const PoissonSolver* given,
                                std::optional<PoissonSolver>& local) {
  if (given) {
    if (given->order() < f.order()) throw ParameterError("solver order is below the boundary order");
    if (given->params().alpha() != p.alpha() || given->params().beta() != p.beta()) {
      throw ParameterError("solver parameters differ from the audited pair");
    }
    return *given;
  }
  local.emplace(p, std::max(1, f.order()));
  return *local;
}

bool is_constant(const BoundaryFunction& f) {
  for (const auto& [k, v] : f.fourier()) {
    if (k != 0 && v != cplx(0.0)) return false;
  }
  return true;
}

// u on |z| = r as a trigonometric polynomial: coef[k + K] multiplies e^{ik theta}.
// Rotating z rotates the kernel, so a single response at z = r determines the whole circle.
struct CirclePoly {
  int K = 0;
  std::vector<cplx> coef;

  cplx operator()(double theta) const {
    const cplx w = std::polar(1.0, theta);
    cplx acc = coef[2 * K];
    for (int j = 2 * K - 1; j >= 0; --j) acc = acc * w + coef[j];
    return acc * std::polar(1.0, -K * theta);
  }
};

const std::vector<cplx>& roots_of_unity(int n) {
  thread_local std::map<int, std::vector<cplx>> tables;
  auto& t = tables[n];
  if (t.empty()) {
    t.resize(n);
    for (int j = 0; j < n; ++j) t[j] = std::polar(1.0, quad::kTwoPi * j / n);
  }
  return t;
}

CirclePoly circle_poly(const PoissonSolver& s, const BoundaryFunction& f, double r) {
  const int K = s.order();
  const auto resp = s.response(cplx(r, 0.0));
  CirclePoly out{K, std::vector<cplx>(2 * K + 1)};
  for (const auto& [k, v] : f.fourier()) out.coef[k + K] = v * (*resp)[k + K];
  return out;
}

CirclePoly combine(const CirclePoly& a, cplx wa, const CirclePoly& b, cplx wb) {
  CirclePoly out{a.K, std::vector<cplx>(a.coef.size())};
  for (std::size_t i = 0; i < a.coef.size(); ++i) out.coef[i] = wa * a.coef[i] + wb * b.coef[i];
  return out;
}

// d/dr by central differences at steps h and h/2, Richardson-combined.
CirclePoly circle_poly_dr(const PoissonSolver& s, const BoundaryFunction& f, double r, double h) {
  auto central = [&](double step) {
    return combine(circle_poly(s, f, r + step), 1.0 / (2.0 * step), circle_poly(s, f, r - step),
                   -1.0 / (2.0 * step));
  };
  return combine(central(h / 2.0), 4.0 / 3.0, central(h), -1.0 / 3.0);
}

CirclePoly circle_poly_dtheta(const CirclePoly& u) {
  CirclePoly out = u;
  for (int k = -u.K; k <= u.K; ++k) out.coef[k + u.K] *= cplx(0.0, k);
  return out;
}

// |g| of a degree <= 8 trigonometric polynomial is analytic away from zeros of g, so the
// trapezoid rule on kCircleNodes points is far below audit tolerances.
constexpr int kCircleNodes = 1024;

double circle_lp(const CirclePoly& g, const HolderPair& hp) {
  if (hp.kind() == HolderPair::Kind::Infinity) {
    return quad::circle_max([&](double t) { return std::abs(g(t)); });
  }
  const double p = hp.p();
  if (p == 2.0) {
    double acc = 0.0;
    for (const auto& c : g.coef) acc += std::norm(c);
    return std::sqrt(acc);
  }
  const auto& omega = roots_of_unity(kCircleNodes);
  double acc = 0.0;
  for (int j = 0; j < kCircleNodes; ++j) {
    const cplx w = omega[j];
    cplx v = g.coef[2 * g.K];
    for (int i = 2 * g.K - 1; i >= 0; --i) v = v * w + g.coef[i];
    const double n2 = std::norm(v);  // the e^{-iK theta} factor has modulus one
    acc += p == 1.0 ? std::sqrt(n2) : std::pow(n2, p / 2.0);
  }
  return std::pow(acc / kCircleNodes, 1.0 / p);
}

double denominator(double r, double power) { return std::pow(1.0 - r * r, power); }

}  // namespace

double audit_margin(double bound, double observed) {
  if (std::isinf(bound) && bound > 0) return 1.0;
  return (bound - observed) / std::max(1.0, std::abs(bound));
}

// ---- AuditResult ----------------------------------------------------------

void AuditResult::record(const std::string& id, double r, double margin, const std::string& kind) {
  ++cases_total;
  const bool violated = margin < -tolerance || std::isnan(margin);
  if (violated) {
    ++cases_violated;
  } else if (margin < 0.0) {
    ++cases_within_noise;
  }
  if (margin < worst_margin || std::isnan(margin)) {
    worst_margin = margin;
    worst_case = id + "," + kind;
  }
  if (violated || cases.size() < kMaxStoredCases) cases.push_back({id, r, margin, kind});
}

void AuditResult::witness(const std::string& id, double observed, double expected, double tol) {
  witnesses.push_back({id, observed, expected, relative_error(observed, expected), tol});
}

void AuditResult::merge(const AuditResult& other) {
  cases_total += other.cases_total;
  cases_violated += other.cases_violated;
  cases_within_noise += other.cases_within_noise;
  if (other.worst_margin < worst_margin || std::isnan(other.worst_margin)) {
    worst_margin = other.worst_margin;
    worst_case = other.worst_case;
  }
  std::size_t kept = std::count_if(cases.begin(), cases.end(), [&](const AuditCase& c) { return c.margin >= -tolerance; });
  for (const auto& c : other.cases) {
    const bool violated = !(c.margin >= -tolerance);
    if (violated) {
      cases.push_back(c);
    } else if (kept < kMaxStoredCases) {
      cases.push_back(c);
      ++kept;
    }
  }
  witnesses.insert(witnesses.end(), other.witnesses.begin(), other.witnesses.end());
}

int AuditResult::witnesses_failed() const {
  return static_cast<int>(std::count_if(witnesses.begin(), witnesses.end(), [](const WitnessCheck& w) { return !w.passed(); }));
}

Json AuditResult::to_json() const {
  Json o = Json::object();
  o.set("name", name);
  o.set("passed", passed());
  o.set("cases_total", cases_total);
  o.set("cases_violated", cases_violated);
  o.set("cases_within_noise", cases_within_noise);
  o.set("worst_margin", cases_total > 0 ? Json(worst_margin) : Json());
  o.set("worst_case", worst_case);
  o.set("tolerance", tolerance);
  if (seed) o.set("seed", static_cast<unsigned long>(*seed));
  Json ws = Json::array();
  for (const auto& w : witnesses) {
    Json x = Json::object();
    x.set("id", w.id);
    x.set("observed", w.observed);
    x.set("expected", w.expected);
    x.set("error", w.error);
    x.set("tolerance", w.tolerance);
    x.set("passed", w.passed());
    ws.push(std::move(x));
  }
  o.set("witnesses_failed", witnesses_failed());
  o.set("witnesses", std::move(ws));
  Json cs = Json::array();
  for (const auto& c : cases) {
    Json x = Json::object();
    x.set("id", c.id);
    x.set("r", c.r);
    x.set("margin", c.margin);
    x.set("kind", c.kind);
    cs.push(std::move(x));
  }
  o.set("cases", std::move(cs));
  return o;
}

void AuditResult::write_csv(std::ostream& os) const {
  os << "id,r,margin,kind\n";
  for (const auto& c : cases) {
    os << '"' << name << ':' << c.id << "\"," << format_number(c.r) << ',' << format_number(c.margin) << ','
       << c.kind << '\n';
  }
}

// ---- generators and grids -------------------------------------------------

BoundaryFunction random_trig_polynomial(std::mt19937_64& rng, int max_order) {
  if (max_order < 1) throw ParameterError("max_order must be at least 1");
  std::uniform_int_distribution<int> order_dist(1, max_order);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int order = order_dist(rng);
  std::map<int, cplx> coeffs;
  for (int k = -order; k <= order; ++k) {
    const double rho = std::sqrt(unit(rng));
    const double phi = 2.0 * kPi * unit(rng);
    coeffs[k] = std::polar(rho, phi) / (1.0 + std::abs(k));
  }
  return BoundaryFunction::from_fourier(coeffs);
}

std::vector<DiskPoint> standard_z_grid() {
  std::vector<DiskPoint> out;
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (int j = 0; j < 8; ++j) out.emplace_back(std::polar(r, 2.0 * kPi * j / 8.0));
  }
  return out;
}

std::vector<double> standard_r_grid() {
  std::vector<double> out;
  for (int i = 1; i <= 9; ++i) out.push_back(i / 10.0);
  return out;
}

std::vector<double> standard_t_grid() {
  std::vector<double> out;
  for (int i = 1; i <= 99; ++i) out.push_back(i / 100.0);
  return out;
}

// ---- inequality audits ----------------------------------------------------

AuditResult check_growth(const AlphaBeta& p, const BoundaryFunction& f, const HolderPair& hp,
                         const std::vector<DiskPoint>& z_grid, const PoissonSolver* solver) {
  std::optional<PoissonSolver> local;
  const PoissonSolver& s = solver_for(p, f, solver, local);
  AuditResult res("growth", kValueTolerance);
  const double norm = lp_norm(f, hp.p());
  const bool sup_norm = hp.kind() == HolderPair::Kind::Infinity;
  for (const auto& z : z_grid) {
    const double r = z.r();
    const double observed = std::abs(s(f, z.z()));
    const double A = memo(kGrowth, p, hp.p(), r, [&] { return growth_constant(p, hp, r); });
    res.record(point_id(z), r, audit_margin(A * norm / denominator(r, hp.inv_p()), observed), "general");
    // The p = inf statement also asserts a maximum principle |u| <= ||f||_inf.
    if (sup_norm) res.record(point_id(z), r, audit_margin(norm, observed), "corollary");
  }
  return res;
}

AuditResult check_integral_means(const AlphaBeta& p, const BoundaryFunction& f, const HolderPair& hp,
                                 const std::vector<double>& r_grid, const PoissonSolver* solver) {
  std::optional<PoissonSolver> local;
  const PoissonSolver& s = solver_for(p, f, solver, local);
  AuditResult res("integral_means", kValueTolerance);
  const double norm = lp_norm(f, hp.p());
  const bool constant = is_constant(f);
  for (double r : r_grid) {
    const double observed = circle_lp(circle_poly(s, f, r), hp);
    const double bound = mp_growth_factor(p, r) * norm;
    const std::string id = "r=" + short_number(r);
    res.record(id, r, audit_margin(bound, observed), "means");
    if (constant) res.witness("constant_boundary_equality," + id, observed, bound, kValueTolerance);
  }
  return res;
}

AuditResult check_distortion(const AlphaBeta& p, const BoundaryFunction& f, const HolderPair& hp,
                             const std::vector<DiskPoint>& z_grid, const PoissonSolver* solver) {
  std::optional<PoissonSolver> local;
  const PoissonSolver& s = solver_for(p, f, solver, local);
  AuditResult res("distortion", kDerivativeTolerance);
  const double norm = lp_norm(f, hp.p());
  const DiskFunction u = s.extension(f);
  for (const auto& z : z_grid) {
    const double r = z.r();
    const double observed = jacobian_norm(u, z, kDefaultStep, true);
    const double B = memo(kDistortion, p, hp.p(), r, [&] { return distortion_constant(p, hp, r); });
    res.record(point_id(z), r, audit_margin(B * norm / denominator(r, 1.0 + hp.inv_p()), observed), "jacobian");
  }
  return res;
}

AuditResult check_partials(const AlphaBeta& p, const BoundaryFunction& f, const HolderPair& hp,
                           const std::vector<DiskPoint>& z_grid, const PoissonSolver* solver) {
  std::optional<PoissonSolver> local;
  const PoissonSolver& s = solver_for(p, f, solver, local);
  AuditResult res("partials", kDerivativeTolerance);
  const double norm = lp_norm(f, hp.p());
  const DiskFunction u = s.extension(f);
  for (const auto& z : z_grid) {
    const double r = z.r();
    const auto [ur, ut] = radial_angular_derivatives(u, z, kDefaultStep, true);
    const auto [uz, uzb] = wirtinger_derivatives(u, z, kDefaultStep, true);
    const double observed[4] = {std::abs(ur), std::abs(ut), std::abs(uz), std::abs(uzb)};
    const Derivative which[4] = {Derivative::Radial, Derivative::Angular, Derivative::Wirtinger,
                                 Derivative::WirtingerBar};
    for (int i = 0; i < 4; ++i) {
      const double C = memo(kPartial0 + i, p, hp.p(), r, [&] { return partial_constant(p, hp, which[i], r); });
      res.record(point_id(z), r, audit_margin(C * norm / denominator(r, 1.0 + hp.inv_p()), observed[i]),
                 to_string(which[i]));
    }
  }
  return res;
}

AuditResult check_means_partials(const AlphaBeta& p, const BoundaryFunction& f, const HolderPair& hp,
                                 const std::vector<double>& r_grid, const PoissonSolver* solver) {
  std::optional<PoissonSolver> local;
  const PoissonSolver& s = solver_for(p, f, solver, local);
  AuditResult res("means_partials", kDerivativeTolerance);
  const double norm = lp_norm(f, hp.p());
  for (double r : r_grid) {
    if (r <= kDefaultStep || r + kDefaultStep >= 1.0) throw DomainError("radius too close to 0 or 1 for differencing");
    const CirclePoly u = circle_poly(s, f, r);
    const CirclePoly ur = circle_poly_dr(s, f, r, kDefaultStep);
    const CirclePoly ut = circle_poly_dtheta(u);
    // |u_z| = |u_r - i u_theta / r| / 2 and |u_zbar| = |u_r + i u_theta / r| / 2 on the circle.
    const CirclePoly uz = combine(ur, 0.5, ut, cplx(0.0, -0.5 / r));
    const CirclePoly uzb = combine(ur, 0.5, ut, cplx(0.0, 0.5 / r));
    const CirclePoly* polys[4] = {&ur, &ut, &uz, &uzb};
    const Derivative which[4] = {Derivative::Radial, Derivative::Angular, Derivative::Wirtinger,
                                 Derivative::WirtingerBar};
    for (int i = 0; i < 4; ++i) {
      const double observed = circle_lp(*polys[i], hp);
      const double C = memo(kMeans0 + i, p, 0.0, r, [&] { return means_constant(p, which[i], r); });
      res.record("r=" + short_number(r), r, audit_margin(C * norm / denominator(r, 1.0), observed),
                 to_string(which[i]));
    }
  }
  return res;
}

// ---- lemma audits ---------------------------------------------------------

AuditResult check_hypergeometric_ratio_lemma(const AlphaBeta& p, int k, const std::vector<double>& t_grid) {
  if (k < 1) throw ParameterError("k must be at least 1");
  const double a = p.alpha();
  const double b = p.beta();
  AuditResult res("hypergeometric_ratio", kLemmaTolerance);
  auto Fk = [&](int n, double t) { return gauss_2f1(HypParams(-a, n - b, n + 1.0), t); };
  auto Ek = [&](int n, double t) { return gauss_2f1(HypParams(-b, n - a, n + 1.0), t); };
  const std::string tag = "k=" + std::to_string(k);

  auto monotone = [&](const std::string& kind, const std::function<double(double)>& ratio, double sign) {
    double prev = ratio(t_grid.front());
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
      const double cur = ratio(t_grid[i]);
      res.record(tag + ",t=" + short_number(t_grid[i]), t_grid[i], sign * (cur - prev) / std::max(1.0, std::abs(prev)),
                 kind);
      prev = cur;
    }
  };

  if (a == 0.0 || k == 1) {
    for (double t : t_grid) {
      const double ratio = Fk(k, t) / Fk(1, t);
      res.record(tag + ",t=" + short_number(t), t, -std::abs(ratio - 1.0), "F_ratio_identically_one");
    }
  }
  if (k >= 2 && a < 0.0 && b > -1.0 && b < 1.0) {
    monotone("F_ratio_increasing", [&](double t) { return Fk(k, t) / Fk(1, t); }, 1.0);
  }
  if (k >= 2 && -1.0 < b && b < a && a < 0.0) {
    monotone("E_ratio_increasing", [&](double t) { return Ek(k, t) / Fk(1, t); }, 1.0);
  }
  if (k >= 2 && a == 0.0) {
    if (b <= 0.0) monotone("E_increasing", [&](double t) { return Ek(k, t); }, 1.0);
    if (b >= 0.0) monotone("E_decreasing", [&](double t) { return Ek(k, t); }, -1.0);
  }
  return res;
}

namespace {

double weight(double r, double b) {
  const double c = std::cos(b / 2.0);
  return std::max((1.0 - r) * (1.0 - r) + 4.0 * r * c * c, std::numeric_limits<double>::min());
}

double cos_shift_integral(double r, double x, double m, const std::function<double(double)>& profile) {
  return quad::circle_integral([&](double b) { return profile(std::abs(std::cos(b - x))) * std::pow(weight(r, b), m); },
                               {x + kPi / 2.0, x + 3.0 * kPi / 2.0, kPi});
}

}  // namespace

AuditResult check_oscillatory_maximum_lemmas(double m, double k, double A, double B, const std::vector<double>& r_grid,
                                             const std::vector<double>& x_grid) {
  if (!(m > -1.0) || k < 0.0 || A < 0.0 || !(B > 0.0)) {
    throw ParameterError("need m > -1, k >= 0, A >= 0 and B > 0");
  }
  AuditResult res("oscillatory_maximum", kLemmaTolerance);
  const std::string tag = "m=" + short_number(m) + ",k=" + short_number(k);
  auto pure = [&](double c) { return std::pow(c, k); };
  auto affine = [&](double c) { return std::pow(A + B * c, k); };

  // Weighted |cos|^k integral in the shift x: bounded by its r = 1 value at the claimed extremal shift.
  const double x_claim = m > 1.0 ? 0.0 : kPi / 2.0;
  const double pure_bound = cos_shift_integral(1.0, x_claim, m, pure);
  const double affine_bound = cos_shift_integral(1.0, x_claim, m, affine);
  for (double r : r_grid) {
    for (double x : x_grid) {
      const std::string id = tag + ",r=" + short_number(r) + ",x=" + short_number(x);
      res.record(id, r, audit_margin(pure_bound, cos_shift_integral(r, x, m, pure)), "cos_power_bound");
      res.record(id, r, audit_margin(affine_bound, cos_shift_integral(r, x, m, affine)), "affine_cos_bound");
    }
  }

  // Shifted weight: L(y) = int (A + B|cos x|)^k w(r, x - y)^m dx, claimed maximal at y = 0 (m < 1) or pi/2.
  const double y_claim = m < 1.0 ? 0.0 : kPi / 2.0;
  for (double r : r_grid) {
    auto L = [&](double y) {
      return quad::circle_integral([&](double x) { return affine(std::abs(std::cos(x))) * std::pow(weight(r, x - y), m); },
                                   {kPi / 2.0, 3.0 * kPi / 2.0, y + kPi});
    };
    const double at_claim = L(y_claim);
    double lo = at_claim;
    double hi = at_claim;
    for (double y : x_grid) {
      const double v = L(y);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
      res.record(tag + ",r=" + short_number(r) + ",y=" + short_number(y), r, audit_margin(at_claim, v),
                 "shifted_weight_maximum");
    }
    if (m == 1.0) res.witness(tag + ",r=" + short_number(r) + ",constant_in_y", lo, hi, kLemmaTolerance);
  }
  return res;
}

double sine_power_integral(double mu, double nu, double r) {
  // Fold [pi/2, pi] onto [0, pi/2] so both endpoint singularities of sin^{mu-1} sit at 0.
  return quad::integrate(
      [&](double t) {
        const double s = std::pow(std::sin(t), mu - 1.0);
        return s / std::pow(weight(r, kPi - t), nu) + s / std::pow(weight(r, t), nu);
      },
      0.0, kPi / 2.0);
}

double sine_power_closed_form(double mu, double nu, double r) {
  const HypParams hp(nu, nu + (1.0 - mu) / 2.0, (1.0 + mu) / 2.0);
  return beta(mu / 2.0, 0.5) * (r >= 1.0 ? gauss_2f1_at_one(hp) : gauss_2f1(hp, r * r));
}

double plain_power_integral(double nu, double r) {
  return quad::integrate([&](double t) { return 1.0 / std::pow(weight(r, kPi - t), nu); }, 0.0, kPi);
}

double plain_power_closed_form(double nu, double r) { return kPi * gauss_2f1(HypParams(nu, nu, 1.0), r * r); }

AuditResult check_integral_identities(double mu, double nu, const std::vector<double>& r_grid) {
  if (!(mu > 0.0)) throw ParameterError("mu must be positive");
  AuditResult res("integral_identities", kValueTolerance);
  const std::string tag = "mu=" + short_number(mu) + ",nu=" + short_number(nu);
  for (double r : r_grid) {
    if (!(r >= 0.0 && r < 1.0)) throw DomainError("identity radii must lie in [0, 1)");
    const std::string id = tag + ",r=" + short_number(r);
    res.record(id, r, -relative_error(sine_power_integral(mu, nu, r), sine_power_closed_form(mu, nu, r)),
               "sine_power");
    res.record(id, r, -relative_error(plain_power_integral(nu, r), plain_power_closed_form(nu, r)), "plain_power");
  }
  // Boundary case r = 1, where (1 + r^2 - 2r cos t) = 2(1 - cos t); finite only for mu > 2 nu.
  if (mu > 2.0 * nu) {
    const double lhs = quad::integrate(
        [&](double t) {
          // Folded at pi/2 and taken in logs: 1 - cos t underflows long before the integrand does.
          const double log_sin = (mu - 1.0) * std::log(std::sin(t));
          const double near = std::log(2.0) + 2.0 * std::log(std::sin(t / 2.0));
          const double far = std::log(2.0) + 2.0 * std::log(std::cos(t / 2.0));
          return std::exp(log_sin - nu * near) + std::exp(log_sin - nu * far);
        },
        0.0, kPi / 2.0);
    const double rhs = std::pow(2.0, nu) * sine_power_closed_form(mu, nu, 1.0);
    res.record(tag + ",r=1", 1.0, -relative_error(lhs, rhs), "sine_power_boundary");
  }
  return res;
}

AuditResult check_kernel_mean_and_residual(const AlphaBeta& p, const BoundaryFunction& f,
                                           const std::vector<double>& r_grid, const std::vector<DiskPoint>& z_points) {
  AuditResult res("kernel_mean_and_residual", kValueTolerance);
  for (double r : r_grid) {
    const double closed = kernel_modulus_mean(p, r);
    const double quadrature = kernel_modulus_mean_quadrature(p, r, quad::kDefaultNodes);
    res.record("r=" + short_number(r), r, -relative_error(quadrature, closed), "kernel_mean");
  }

  const PoissonSolver solver(p, std::max(1, f.order()));
  const SeriesCoefficients coeffs = coefficients_from_boundary(p, f);
  const DiskFunction paths[2] = {solver.extension(f),
                                 [p, coeffs](cplx z) { return evaluate_expansion(p, coeffs, DiskPoint(z)); }};
  const char* names[2] = {"residual_order_solver", "residual_order_series"};
  const double steps[3] = {1e-2, 5e-3, 2.5e-3};
  constexpr double kOrderWindow = 0.3;
  constexpr double kResidualFloor = 1e-9;
  for (int path = 0; path < 2; ++path) {
    for (const auto& z : z_points) {
      double res_h[3];
      for (int i = 0; i < 3; ++i) res_h[i] = std::abs(operator_residual(p, paths[path], z, steps[i]));
      if (res_h[0] < kResidualFloor) {
        // Annihilated up to rounding at every step; nothing to measure.
        res.record(point_id(z), z.r(), kOrderWindow, std::string(names[path]) + "_floor");
        continue;
      }
      for (int i = 0; i < 2; ++i) {
        const double order = std::log2(res_h[i] / res_h[i + 1]);
        res.record(point_id(z) + ",h=" + short_number(steps[i]), z.r(), kOrderWindow - std::abs(order - 2.0),
                   names[path]);
      }
    }
  }
  return res;
}

// ---- coefficient inequalities ---------------------------------------------

AuditResult check_coefficient_inequalities(const AlphaBeta& p, const SeriesCoefficients& c,
                                           const CoefficientFlags& flags) {
  AuditResult res("coefficient_inequalities", kValueTolerance);
  const double a = p.alpha();
  const double b = p.beta();
  const int K = c.order();
  if (flags.starlike) {
    for (int k = 2; k <= K; ++k) {
      const std::string id = "k=" + std::to_string(k);
      res.record(id, 0.0, audit_margin(coefficient_bound(p, CoefficientKind::StarlikeCk, k), std::abs(c.at(k))),
                 "starlike_ck");
      res.record(id, 0.0, audit_margin(coefficient_bound(p, CoefficientKind::StarlikeCmk, k), std::abs(c.at(-k))),
                 "starlike_cmk");
    }
  }
  if (flags.typically_real) {
    for (int k = 2; k <= K; ++k) {
      const cplx lhs = gamma(1.0 + a) * c.at(k) / gamma(k + 1.0 + a) - gamma(1.0 + b) * c.at(-k) / gamma(k + 1.0 + b);
      res.record("k=" + std::to_string(k), 0.0,
                 audit_margin(coefficient_bound(p, CoefficientKind::TypicallyReal, k, c.at(-1)), std::abs(lhs)),
                 "typically_real");
    }
  }
  if (flags.in_s0 && K >= 2) {
    res.record("k=2", 0.0, audit_margin(coefficient_bound(p, CoefficientKind::CMinus2, 2), std::abs(c.at(-2))),
               "c_minus2");
    res.record("k=2", 0.0, audit_margin(coefficient_bound(p, CoefficientKind::C2, 2), std::abs(c.at(2))), "c2");
  }
  if (flags.disk_onto_disk) {
    // Lower bound: the functional must stay above the constant.
    const double value = heinz_functional(p, c.at(0), c.at(1), c.at(-1));
    const double rhs = heinz_rhs();
    res.record("heinz", 0.0, (value - rhs) / std::max(1.0, rhs), "heinz");
  }
  return res;
}

// ---- suites ---------------------------------------------------------------

SuiteConfig standard_suite_config() {
  SuiteConfig cfg;
  cfg.params = {AlphaBeta(0.0, 0.0), AlphaBeta(0.5, 0.5), AlphaBeta(-0.5, 1.0), AlphaBeta(0.3, -0.2),
                AlphaBeta(0.0, 1.0)};
  cfg.ps = {1.0, 2.0, 4.0, std::numeric_limits<double>::infinity()};
  cfg.z_grid = standard_z_grid();
  cfg.r_grid = standard_r_grid();
  return cfg;
}

bool is_suite_name(const std::string& name) {
  return std::find(kSuiteNames.begin(), kSuiteNames.end(), name) != kSuiteNames.end();
}

namespace {

std::vector<BoundaryFunction> suite_boundaries(const SuiteConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<BoundaryFunction> out;
  for (int i = 0; i < cfg.functions; ++i) out.push_back(random_trig_polynomial(rng, cfg.max_order));
  return out;
}

std::string param_tag(const AlphaBeta& p, const HolderPair& hp) {
  return "a=" + short_number(p.alpha()) + ",b=" + short_number(p.beta()) + ",p=" + hp.label();
}

void prefix_ids(AuditResult& r, const std::string& prefix) {
  for (auto& c : r.cases) c.id = prefix + "," + c.id;
  for (auto& w : r.witnesses) w.id = prefix + "," + w.id;
  if (!r.worst_case.empty()) r.worst_case = prefix + "," + r.worst_case;
}

template <class Check>
AuditResult run_boundary_check(const std::string& name, double tol, const SuiteConfig& cfg,
                               const std::vector<BoundaryFunction>& fs, bool with_constant, Check check) {
  AuditResult total(name, tol);
  total.seed = cfg.seed;
  const BoundaryFunction constant = BoundaryFunction::from_fourier({{0, cplx(3.0)}});
  for (const auto& p : cfg.params) {
    const PoissonSolver solver(p, cfg.max_order, cfg.nodes);
    for (double pp : cfg.ps) {
      const HolderPair hp(pp);
      const std::string tag = param_tag(p, hp);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        AuditResult one = check(p, fs[i], hp, solver);
        prefix_ids(one, tag + ",f=" + std::to_string(i));
        total.merge(one);
      }
      if (with_constant) {
        AuditResult one = check(p, constant, hp, solver);
        prefix_ids(one, tag + ",f=const");
        total.merge(one);
      }
    }
  }
  return total;
}

AuditResult lemma_ratio_suite() {
  AuditResult total("hypergeometric_ratio", kLemmaTolerance);
  const std::vector<std::pair<double, double>> pairs{{0.0, 0.5}, {0.0, -0.5}, {-0.5, 0.5}, {-0.3, -0.6}, {-0.2, 0.9}};
  for (auto [a, b] : pairs) {
    for (int k : {1, 2, 3, 5}) {
      AuditResult one = check_hypergeometric_ratio_lemma(AlphaBeta(a, b), k, standard_t_grid());
      prefix_ids(one, "a=" + short_number(a) + ",b=" + short_number(b));
      total.merge(one);
    }
  }
  return total;
}

AuditResult lemma_maximum_suite() {
  AuditResult total("oscillatory_maximum", kLemmaTolerance);
  std::vector<double> r_grid{0.25, 0.5, 0.75, 1.0};
  std::vector<double> x_grid;
  for (int j = 0; j <= 16; ++j) x_grid.push_back(kPi * j / 16.0);
  for (double m : {-0.3, 0.5, 1.0, 2.0}) {
    for (double k : {1.0, 2.0}) {
      for (auto [A, B] : std::vector<std::pair<double, double>>{{0.0, 1.0}, {1.0, 2.0}}) {
        AuditResult one = check_oscillatory_maximum_lemmas(m, k, A, B, r_grid, x_grid);
        prefix_ids(one, "A=" + short_number(A) + ",B=" + short_number(B));
        total.merge(one);
      }
    }
  }
  return total;
}

std::vector<AuditResult> identity_suite(const SuiteConfig& cfg) {
  AuditResult total("integral_identities", kValueTolerance);
  for (double mu : {0.5, 1.0, 2.0, 3.0}) {
    for (double nu : {0.0, 0.5, 1.0, 1.5}) total.merge(check_integral_identities(mu, nu, cfg.r_grid));
  }
  AuditResult kernel("kernel_mean_and_residual", kValueTolerance);
  kernel.seed = cfg.seed;
  std::mt19937_64 rng(cfg.seed);
  const BoundaryFunction f = random_trig_polynomial(rng, cfg.max_order);
  std::vector<DiskPoint> points;
  for (int j = 0; j < 10; ++j) points.emplace_back(std::polar(0.08 * (j + 1), 0.7 * j + 0.3));
  for (const auto& p : cfg.params) {
    AuditResult one = check_kernel_mean_and_residual(p, f, cfg.r_grid, points);
    prefix_ids(one, "a=" + short_number(p.alpha()) + ",b=" + short_number(p.beta()));
    kernel.merge(one);
  }
  return {total, kernel};
}

}  // namespace

std::vector<AuditResult> run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (!is_suite_name(name)) throw ParameterError("unknown suite '" + name + "'");
  const bool all = name == "all";
  std::vector<AuditResult> out;
  std::vector<BoundaryFunction> fs;
  if (all || name == "growth" || name == "means" || name == "distortion" || name == "partials") {
    fs = suite_boundaries(cfg);
  }
  if (all || name == "growth") {
    out.push_back(run_boundary_check("growth", kValueTolerance, cfg, fs, true,
                                     [&](const AlphaBeta& p, const BoundaryFunction& f, const HolderPair& hp,
                                         const PoissonSolver& s) { return check_growth(p, f, hp, cfg.z_grid, &s); }));
  }
  if (all || name == "means") {
    out.push_back(run_boundary_check(
        "integral_means", kValueTolerance, cfg, fs, true,
        [&](const AlphaBeta& p, const BoundaryFunction& f, const HolderPair& hp, const PoissonSolver& s) {
          return check_integral_means(p, f, hp, cfg.r_grid, &s);
        }));
    out.push_back(run_boundary_check(
        "means_partials", kDerivativeTolerance, cfg, fs, true,
        [&](const AlphaBeta& p, const BoundaryFunction& f, const HolderPair& hp, const PoissonSolver& s) {
          return check_means_partials(p, f, hp, cfg.r_grid, &s);
        }));
  }
  if (all || name == "distortion") {
    out.push_back(run_boundary_check(
        "distortion", kDerivativeTolerance, cfg, fs, true,
        [&](const AlphaBeta& p, const BoundaryFunction& f, const HolderPair& hp, const PoissonSolver& s) {
          return check_distortion(p, f, hp, cfg.z_grid, &s);
        }));
  }
  if (all || name == "partials") {
    out.push_back(run_boundary_check(
        "partials", kDerivativeTolerance, cfg, fs, true,
        [&](const AlphaBeta& p, const BoundaryFunction& f, const HolderPair& hp, const PoissonSolver& s) {
          return check_partials(p, f, hp, cfg.z_grid, &s);
        }));
  }
  if (all || name == "lemmas") {
    out.push_back(lemma_ratio_suite());
    out.push_back(lemma_maximum_suite());
  }
  if (all || name == "identities") {
    for (auto& r : identity_suite(cfg)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace abharm
