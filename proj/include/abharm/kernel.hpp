#pragma once

#include <complex>
#include <utility>

namespace abharm {

using cplx = std::complex<double>;

// Validated parameter pair: alpha + beta > -1, neither a negative integer.
class AlphaBeta {
 public:
  AlphaBeta(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  // Gamma(alpha+1) Gamma(beta+1) / Gamma(alpha+beta+1)
  double c_norm() const { return c_norm_; }
  AlphaBeta swapped() const { return AlphaBeta(beta_, alpha_); }

 private:
  double alpha_;
  double beta_;
  double c_norm_;
};

AlphaBeta make_params(double alpha, double beta);

// A point of the open unit disk.
class DiskPoint {
 public:
  DiskPoint(cplx z);  // NOLINT: implicit on purpose, points are written as plain complex values
  DiskPoint(double x, double y) : DiskPoint(cplx(x, y)) {}

  cplx z() const { return z_; }
  double r() const { return std::abs(z_); }
  double theta() const { return std::arg(z_); }

 private:
  cplx z_;
};

// (1-|w|^2)^(a+b+1) / ((1-w)^(a+1) (1-conj w)^(b+1)), principal branch.
cplx kernel_u(const AlphaBeta& p, cplx w);

// c * kernel_u(z conj(zeta)), |zeta| = 1 within 1e-12.
cplx poisson_kernel(const AlphaBeta& p, const DiskPoint& z, cplx zeta);

// d/dz and d/dzbar of z -> poisson_kernel(p, z, zeta).
std::pair<cplx, cplx> poisson_kernel_gradient(const AlphaBeta& p, const DiskPoint& z, cplx zeta);

// Mean of |P| over the circle |z| = r:  |c| F(-(a+b)/2, -(a+b)/2; 1; r^2); r = 1 is the limit.
double kernel_modulus_mean(const AlphaBeta& p, double r);
double kernel_modulus_mean_quadrature(const AlphaBeta& p, double r, int nodes);

// Mean of P itself: c F(-a, -b; 1; r^2). Equals the modulus mean only when a = b.
double kernel_mean(const AlphaBeta& p, double r);
cplx kernel_mean_quadrature(const AlphaBeta& p, double r, int nodes);

}  // namespace abharm
