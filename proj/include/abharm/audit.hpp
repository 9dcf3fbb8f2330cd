#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "abharm/boundary.hpp"
#include "abharm/bounds.hpp"
#include "abharm/format.hpp"
#include "abharm/harmonic.hpp"
#include "abharm/quadrature.hpp"

namespace abharm {

inline constexpr double kValueTolerance = 1e-8;
inline constexpr double kDerivativeTolerance = 1e-4;
inline constexpr double kLemmaTolerance = 1e-10;

// Relative slack of an inequality observed <= bound: (bound - observed) / max(1, bound).
double audit_margin(double bound, double observed);

struct AuditCase {
  std::string id;
  double r = 0.0;
  double margin = 0.0;
  std::string kind;  // which inequality produced the case
};

// Equality claims (sharpness witnesses, constant profiles) are not inequality cases.
struct WitnessCheck {
  std::string id;
  double observed = 0.0;
  double expected = 0.0;
  double error = 0.0;
  double tolerance = 0.0;
  bool passed() const { return error <= tolerance; }
};

struct AuditResult {
  std::string name;
  int cases_total = 0;
  int cases_violated = 0;     // margin < -tolerance
  int cases_within_noise = 0;  // -tolerance <= margin < 0
  double worst_margin = std::numeric_limits<double>::infinity();
  std::string worst_case;
  double tolerance = kValueTolerance;
  std::optional<std::uint64_t> seed;
  std::vector<AuditCase> cases;  // every violation, plus the first kMaxStoredCases others
  std::vector<WitnessCheck> witnesses;

  static constexpr std::size_t kMaxStoredCases = 256;

  AuditResult() = default;
  AuditResult(std::string name_, double tolerance_) : name(std::move(name_)), tolerance(tolerance_) {}

  void record(const std::string& id, double r, double margin, const std::string& kind);
  void witness(const std::string& id, double observed, double expected, double tolerance);
  // Order-independent except for which non-violating cases are kept.
  void merge(const AuditResult& other);

  int witnesses_failed() const;
  bool passed() const { return cases_violated == 0 && witnesses_failed() == 0; }

  Json to_json() const;
  void write_csv(std::ostream& os) const;  // id,r,margin,kind
};

// Coefficients uniform in the unit disk, scaled by 1/(1+|k|); order drawn from 1..max_order.
BoundaryFunction random_trig_polynomial(std::mt19937_64& rng, int max_order);

std::vector<DiskPoint> standard_z_grid();  // radii 0.1..0.9 step 0.2, 8 angles
std::vector<double> standard_r_grid();     // 0.1..0.9 step 0.1

// ---- inequality audits. A solver may be shared across calls; otherwise one is built. ----

AuditResult check_growth(const AlphaBeta& p, const BoundaryFunction& f, const HolderPair& hp,
                         const std::vector<DiskPoint>& z_grid, const PoissonSolver* solver = nullptr);

AuditResult check_integral_means(const AlphaBeta& p, const BoundaryFunction& f, const HolderPair& hp,
                                 const std::vector<double>& r_grid, const PoissonSolver* solver = nullptr);

AuditResult check_distortion(const AlphaBeta& p, const BoundaryFunction& f, const HolderPair& hp,
                             const std::vector<DiskPoint>& z_grid, const PoissonSolver* solver = nullptr);

AuditResult check_partials(const AlphaBeta& p, const BoundaryFunction& f, const HolderPair& hp,
                           const std::vector<DiskPoint>& z_grid, const PoissonSolver* solver = nullptr);

AuditResult check_means_partials(const AlphaBeta& p, const BoundaryFunction& f, const HolderPair& hp,
                                 const std::vector<double>& r_grid, const PoissonSolver* solver = nullptr);

// ---- lemma and identity audits ----

std::vector<double> standard_t_grid();  // 0.01..0.99

AuditResult check_hypergeometric_ratio_lemma(const AlphaBeta& p, int k, const std::vector<double>& t_grid);

AuditResult check_oscillatory_maximum_lemmas(double m, double k, double A, double B, const std::vector<double>& r_grid,
                                             const std::vector<double>& x_grid);

// Quadrature side of the sin-power identity and of the plain power identity.
double sine_power_integral(double mu, double nu, double r);
double sine_power_closed_form(double mu, double nu, double r);
double plain_power_integral(double nu, double r);
double plain_power_closed_form(double nu, double r);

AuditResult check_integral_identities(double mu, double nu, const std::vector<double>& r_grid);

// Kernel mean identity on r_grid plus second-order decay of the operator residual at z_points.
AuditResult check_kernel_mean_and_residual(const AlphaBeta& p, const BoundaryFunction& f,
                                           const std::vector<double>& r_grid, const std::vector<DiskPoint>& z_points);

struct CoefficientFlags {
  bool typically_real = false;
  bool starlike = false;
  bool in_s0 = false;          // c_{-1} = 0 class, bounds need -1 < beta < alpha < 0
  bool disk_onto_disk = false;  // enables the Heinz functional
};

AuditResult check_coefficient_inequalities(const AlphaBeta& p, const SeriesCoefficients& c,
                                           const CoefficientFlags& flags);

// ---- suites ----

struct SuiteConfig {
  std::vector<AlphaBeta> params;
  std::vector<double> ps;
  int functions = 100;
  int max_order = 8;
  std::uint64_t seed = 20240917;
  int nodes = quad::kDefaultNodes;
  std::vector<DiskPoint> z_grid;
  std::vector<double> r_grid;
};

SuiteConfig standard_suite_config();

inline const std::vector<std::string> kSuiteNames{"growth", "means", "distortion", "partials", "lemmas",
                                                  "identities", "all"};

bool is_suite_name(const std::string& name);

// One aggregated result per check in the suite.
std::vector<AuditResult> run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace abharm
