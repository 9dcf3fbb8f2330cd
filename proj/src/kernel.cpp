#include "abharm/kernel.hpp"

#include <cmath>
#include <string>

#include "abharm/errors.hpp"
#include "abharm/quadrature.hpp"
#include "abharm/specfun.hpp"

namespace abharm {
namespace {

constexpr double kUnitTolerance = 1e-12;

bool near_negative_integer(double x) {
  return x < 0.0 && std::abs(x - std::round(x)) <= kIntegerTolerance;
}

double hyp_at(double a, double b, double c, double x) {
  const HypParams hp(a, b, c);
  return x >= 1.0 ? gauss_2f1_at_one(hp) : gauss_2f1(hp, x);
}

}  // namespace

AlphaBeta::AlphaBeta(double alpha, double beta) : alpha_(alpha), beta_(beta), c_norm_(0.0) {
  if (!std::isfinite(alpha) || !std::isfinite(beta)) throw ParameterError("alpha and beta must be finite");
  if (!(alpha + beta > -1.0)) {
    throw ParameterError("alpha + beta must exceed -1 (got " + std::to_string(alpha + beta) + ")");
  }
  if (near_negative_integer(alpha) || near_negative_integer(beta)) {
    throw ParameterError("alpha and beta must not be negative integers");
  }
  c_norm_ = gamma(alpha + 1.0) * gamma(beta + 1.0) / gamma(alpha + beta + 1.0);
}

AlphaBeta make_params(double alpha, double beta) { return AlphaBeta(alpha, beta); }

DiskPoint::DiskPoint(cplx z) : z_(z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("point must lie in the open unit disk");
}

cplx kernel_u(const AlphaBeta& p, cplx w) {
  const double w2 = std::norm(w);
  if (!(w2 < 1.0)) throw DomainError("kernel argument must satisfy |w| < 1");
  // log(1 - conj w) = conj(log(1 - w)) because Re(1 - w) > 0 keeps us off the cut.
  const cplx lg = std::log(1.0 - w);
  const cplx expo = -(p.alpha() + 1.0) * lg - (p.beta() + 1.0) * std::conj(lg);
  return std::pow(1.0 - w2, p.alpha() + p.beta() + 1.0) * std::exp(expo);
}

cplx poisson_kernel(const AlphaBeta& p, const DiskPoint& z, cplx zeta) {
  if (std::abs(std::abs(zeta) - 1.0) > kUnitTolerance) throw DomainError("zeta must be unimodular");
  return p.c_norm() * kernel_u(p, z.z() * std::conj(zeta));
}

std::pair<cplx, cplx> poisson_kernel_gradient(const AlphaBeta& p, const DiskPoint& z, cplx zeta) {
  if (std::abs(std::abs(zeta) - 1.0) > kUnitTolerance) throw DomainError("zeta must be unimodular");
  const double a = p.alpha();
  const double b = p.beta();
  const cplx zz = z.z();
  const double r2 = std::norm(zz);
  const cplx e_minus = std::conj(zeta);
  const cplx w = zz * e_minus;
  const cplx lg = std::log(1.0 - w);
  const double base = p.c_norm() * std::pow(1.0 - r2, a + b);
  const cplx dz_num = -(a + b + 1.0) * std::conj(zz) * (1.0 - w) + (1.0 + a) * (1.0 - r2) * e_minus;
  const cplx dz = base * dz_num * std::exp(-(a + 2.0) * lg - (b + 1.0) * std::conj(lg));
  const cplx dzb_num = zeta * (b + 1.0 + a * r2) - (a + b + 1.0) * zz;
  const cplx dzb = base * dzb_num * std::exp(-(a + 1.0) * lg - (b + 2.0) * std::conj(lg));
  return {dz, dzb};
}

double kernel_modulus_mean(const AlphaBeta& p, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("radius must lie in [0, 1]");
  const double s = -(p.alpha() + p.beta()) / 2.0;
  return std::abs(p.c_norm()) * hyp_at(s, s, 1.0, r * r);
}

double kernel_modulus_mean_quadrature(const AlphaBeta& p, double r, int nodes) {
  return quad::periodic_mean([&](double t) { return std::abs(p.c_norm() * kernel_u(p, std::polar(r, -t))); },
                             nodes);
}

double kernel_mean(const AlphaBeta& p, double r) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("radius must lie in [0, 1]");
  return p.c_norm() * hyp_at(-p.alpha(), -p.beta(), 1.0, r * r);
}

cplx kernel_mean_quadrature(const AlphaBeta& p, double r, int nodes) {
  return quad::periodic_mean([&](double t) { return p.c_norm() * kernel_u(p, std::polar(r, -t)); }, nodes);
}

}  // namespace abharm
