#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "abharm/format.hpp"
#include "abharm/kernel.hpp"

namespace abharm {

// Hoelder exponents 1/p + 1/q = 1. p = 1 and p = inf are explicit limits.
class HolderPair {
 public:
  enum class Kind { One, Finite, Infinity };  // p = 1 (q = inf), 1 < p < inf, p = inf (q = 1)

  explicit HolderPair(double p);

  Kind kind() const { return kind_; }
  double p() const;
  double q() const;
  double inv_p() const { return inv_p_; }
  double inv_q() const { return 1.0 - inv_p_; }
  bool q_infinite() const { return kind_ == Kind::One; }
  std::string label() const;

 private:
  Kind kind_;
  double inv_p_;
};

struct BoundEntry {
  std::string name;
  double value = 0.0;
  std::string source;
  std::string method;  // closed_form | quadrature | sup_over_grid
  std::optional<int> nodes;
  std::optional<double> reference;  // printed closed form, when it differs in kind from value
  std::optional<std::string> flag;   // exact | conservative | understates | not_applicable
};

struct BoundReport {
  std::vector<BoundEntry> entries;

  void add(BoundEntry e) { entries.push_back(std::move(e)); }
  const BoundEntry* find(const std::string& name) const;
  Json to_json() const;
};

// Result of a sup over r: grid maximum (authoritative) with the printed value alongside.
struct SupValue {
  double value = 0.0;
  double at_r = 0.0;
  int grid_points = 0;
  std::optional<double> printed;
  std::string flag = "not_applicable";
};

inline constexpr int kSupGridPoints = 512;
inline constexpr double kSupFlagTolerance = 1e-6;

// exact | conservative | understates, comparing printed against the grid sup.
std::string compare_printed(double grid, double printed);

// ---- section 2 ----

double heinz_functional(const AlphaBeta& p, cplx c0, cplx c1, cplx cm1);
double heinz_rhs();

enum class CoefficientKind { TypicallyReal, CMinus2, C2, StarlikeCk, StarlikeCmk, ConjectureCk, ConjectureCmk };

CoefficientKind parse_coefficient_kind(const std::string& name);
std::string to_string(CoefficientKind kind);

// For TypicallyReal, extra = c_{-1} and the bound applies to
// |Gamma(1+a) c_k / Gamma(k+1+a) - Gamma(1+b) c_{-k} / Gamma(k+1+b)|.
double coefficient_bound(const AlphaBeta& p, CoefficientKind kind, int k, std::optional<cplx> extra = std::nullopt);

// inf over r of F(-a,1-b;2;r^2)/F(-a,k-b;k+1;r^2) (or with E_k = F(-b,k-a;k+1;r^2) when negative).
double conjecture_infimum(const AlphaBeta& p, int k, bool negative);

// Gamma(1+a+b) / |Gamma(2+a) Gamma(1+b)|, i.e. A_1(1) for c_1 = 1.
double normalized_a1_limit(const AlphaBeta& p);
BoundReport geometric_constants(const AlphaBeta& p);
// |A_1(r)| / 16 for c_1 = 1.
double covering_growth_lower_bound(const AlphaBeta& p, double r);
double rado_radius_bound(const AlphaBeta& p, cplx c1, cplx cm1);

// ---- growth ----

// A(r), closed form; r = 1 is the limit (inf when it diverges).
double growth_constant(const AlphaBeta& p, const HolderPair& hp, double r);
// Same quantity from its defining circle integral.
double growth_integral(const AlphaBeta& p, const HolderPair& hp, double r);
SupValue growth_sup(const AlphaBeta& p, const HolderPair& hp);
// The printed sup closed form (not defined for q = inf).
std::optional<double> growth_sup_printed(const AlphaBeta& p, const HolderPair& hp);

// |c| F(-(a+b)/2, -(a+b)/2; 1; r^2)
double mp_growth_factor(const AlphaBeta& p, double r);

// ---- distortion ----

struct DistortionParts {
  double m = 0.0;
  double P = 0.0;
  double Q = 0.0;
  double U = 0.0;      // closed form U_p (inf when divergent)
  double L0 = 0.0;     // L(0)
  double Lhalf = 0.0;  // L(pi/2)
  double V = 0.0;      // max(L0, Lhalf)
  bool printed_choice_is_max = true;
  double value = 0.0;                // 2|c| ((P U + Q V) / 2pi)^(1/q)
  std::optional<double> printed;     // 2|c| (P U + Q V) / (2pi)^(1/q)
};

DistortionParts distortion_parts(const AlphaBeta& p, const HolderPair& hp, double r);
double distortion_constant(const AlphaBeta& p, const HolderPair& hp, double r);
SupValue distortion_sup(const AlphaBeta& p, const HolderPair& hp);
// U_p closed form and its defining integral, int_0^{2pi} (2 + 2 cos b)^(q b + q - 1) db.
double distortion_u(const HolderPair& hp, double beta);
double distortion_u_integral(const HolderPair& hp, double beta);
// L(eta) by quadrature.
double distortion_l(const AlphaBeta& p, const HolderPair& hp, double r, double eta);

// ---- partial derivatives ----

enum class Derivative { Radial, Angular, Wirtinger, WirtingerBar };

Derivative parse_derivative(const std::string& name);
std::string to_string(Derivative d);

double partial_constant(const AlphaBeta& p, const HolderPair& hp, Derivative which, double r);
SupValue partial_sup(const AlphaBeta& p, const HolderPair& hp, Derivative which);
// E(r) from its defining integral.
double wirtinger_integral(const AlphaBeta& p, const HolderPair& hp, double r);
// Closed form of D(r) when a = b (Beta / 2F1 form).
double angular_equal_closed_form(const AlphaBeta& p, const HolderPair& hp, double r);
// The r-version and sup shown for (0,0) radial derivatives.
double radial_classical(const HolderPair& hp, double r);
double radial_classical_sup(const HolderPair& hp);
// G(r, x) = int (|(a+b+2) cos(s-x)| + |a-b|)^q (1 + r^2 + 2r cos s)^(((a+b+2)q-2)/2) ds
double partial_g(const AlphaBeta& p, const HolderPair& hp, double r, double x);
// (1/2pi) int |1 + r e^{-is}|^((a+b+2)q-2) ds in closed form and by quadrature.
double partial_i12(const AlphaBeta& p, const HolderPair& hp, double r);
double partial_i12_integral(const AlphaBeta& p, const HolderPair& hp, double r);

// ---- integral means of derivatives ----

double means_constant(const AlphaBeta& p, Derivative which, double r);
SupValue means_sup(const AlphaBeta& p, Derivative which);
std::optional<double> means_sup_printed(const AlphaBeta& p, Derivative which);

// Everything above at (a, b, p), for the CLI.
BoundReport full_report(const AlphaBeta& p, const HolderPair& hp);

}  // namespace abharm
