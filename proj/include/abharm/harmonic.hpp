#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "abharm/boundary.hpp"
#include "abharm/kernel.hpp"

namespace abharm {

// Opaque evaluation callback on the disk. Must be safe to call concurrently.
using DiskFunction = std::function<cplx(cplx)>;

// Truncated two-sided coefficients of the series expansion:
// pos = c_0..c_K, neg = c_{-1}..c_{-K}.
struct SeriesCoefficients {
  std::vector<cplx> pos;
  std::vector<cplx> neg;

  SeriesCoefficients() = default;
  SeriesCoefficients(std::vector<cplx> pos_, std::vector<cplx> neg_);
  static SeriesCoefficients from_map(const std::map<int, cplx>& coeffs, int K = 0);

  int order() const { return static_cast<int>(neg.size()); }
  cplx at(int k) const;
};

// Coefficients of g_r: A_k(r) = c_k F(-a, k-b; k+1; r^2) r^k, B_k(r) = c_{-k} F(-b, k-a; k+1; r^2) r^k.
struct HarmonicSnapshot {
  double r = 0.0;
  std::vector<cplx> A;  // A_0..A_K
  std::vector<cplx> B;  // B_1..B_K (B[0] holds B_1)

  // sum A_k w^k + sum B_k conj(w)^k, i.e. g_r(r w). On |w| = 1 this matches u(r w).
  cplx evaluate(cplx w) const;
};

// Periodic trapezoid rule for (1/2pi) int P(z e^{-it}) f(e^{it}) dt.
cplx poisson_integral(const AlphaBeta& p, const BoundaryFunction& f, const DiskPoint& z, int nodes = 4096);

// Same quadrature, organised for many boundary functions of bounded order:
// response(z)[k + K] = (1/N) sum_j P(z e^{-it_j}) e^{ik t_j}, so u_f(z) = sum_k fhat(k) response_k(z).
// Responses are memoized per point; the object is safe for concurrent use.
class PoissonSolver {
 public:
  PoissonSolver(const AlphaBeta& p, int order, int nodes = 4096);

  const AlphaBeta& params() const { return p_; }
  int order() const { return order_; }
  int nodes() const { return nodes_; }

  std::shared_ptr<const std::vector<cplx>> response(cplx z) const;
  cplx operator()(const BoundaryFunction& f, cplx z) const;
  // Extension of f as a callback; f is copied, the solver must outlive the callback.
  DiskFunction extension(const BoundaryFunction& f) const;

 private:
  AlphaBeta p_;
  int order_;
  int nodes_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<cplx, std::shared_ptr<const std::vector<cplx>>,
                             std::function<std::size_t(const cplx&)>> cache_;
};

cplx evaluate_expansion(const AlphaBeta& p, const SeriesCoefficients& c, const DiskPoint& z);

// c_k = fhat(k) / F(-a, k-b; k+1; 1), c_{-k} = fhat(-k) / F(-b, k-a; k+1; 1).
// K defaults to the order of f (at least 1).
SeriesCoefficients coefficients_from_boundary(const AlphaBeta& p, const BoundaryFunction& f, int K = 0);

HarmonicSnapshot snapshot(const AlphaBeta& p, const SeriesCoefficients& c, double r);

inline constexpr double kDefaultStep = 1e-3;

// Five-point finite-difference value of L_{a,b} u at z.
cplx operator_residual(const AlphaBeta& p, const DiskFunction& u, const DiskPoint& z, double h = kDefaultStep);

// (u_z, u_zbar) by central differences. With richardson, combines steps h and h/2.
std::pair<cplx, cplx> wirtinger_derivatives(const DiskFunction& u, const DiskPoint& z, double h = kDefaultStep,
                                            bool richardson = false);

// |u_z| + |u_zbar|
double jacobian_norm(const DiskFunction& u, const DiskPoint& z, double h = kDefaultStep, bool richardson = false);

// (u_r, u_theta) by central differences in polar coordinates. Needs r > h.
std::pair<cplx, cplx> radial_angular_derivatives(const DiskFunction& u, const DiskPoint& z, double h = kDefaultStep,
                                                 bool richardson = false);

// M_p(r, u) on a uniform grid of the circle |z| = r; p = inf gives the grid maximum.
double integral_means(const DiskFunction& u, double r, double p, int nodes = 4096);

// Polar grid r_i = (i+1)/(nr+1), theta_j = 2 pi j / nt. CSV header x,y,re,im.
void write_grid_csv(std::ostream& os, const DiskFunction& u, int nr, int nt);

}  // namespace abharm
