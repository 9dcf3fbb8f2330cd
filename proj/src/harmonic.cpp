#include "abharm/harmonic.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <ostream>

#include "abharm/errors.hpp"
#include "abharm/format.hpp"
#include "abharm/specfun.hpp"

namespace abharm {
namespace {

double hyp(double a, double b, double c, double x) {
  const HypParams hp(a, b, c);
  return x >= 1.0 ? gauss_2f1_at_one(hp) : gauss_2f1(hp, x);
}

std::size_t hash_point(const cplx& z) {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  const double re = z.real();
  const double im = z.imag();
  std::memcpy(&a, &re, sizeof a);
  std::memcpy(&b, &im, sizeof b);
  return std::hash<std::uint64_t>{}(a ^ (b * 0x9e3779b97f4a7c15ULL));
}

void require_stencil(const DiskPoint& z, double h) {
  if (!(h > 0.0)) throw DomainError("step h must be positive");
  if (!(z.r() + 2.0 * h < 1.0)) throw DomainError("finite-difference stencil leaves the disk");
}

std::pair<cplx, cplx> wirtinger_raw(const DiskFunction& u, cplx z, double h) {
  const cplx ux = (u(z + h) - u(z - h)) / (2.0 * h);
  const cplx uy = (u(z + cplx(0.0, h)) - u(z - cplx(0.0, h))) / (2.0 * h);
  const cplx i(0.0, 1.0);
  return {(ux - i * uy) / 2.0, (ux + i * uy) / 2.0};
}

std::pair<cplx, cplx> polar_raw(const DiskFunction& u, double r, double th, double h) {
  const cplx ur = (u(std::polar(r + h, th)) - u(std::polar(r - h, th))) / (2.0 * h);
  const cplx ut = (u(std::polar(r, th + h)) - u(std::polar(r, th - h))) / (2.0 * h);
  return {ur, ut};
}

std::pair<cplx, cplx> extrapolate(const std::pair<cplx, cplx>& coarse, const std::pair<cplx, cplx>& fine) {
  return {(4.0 * fine.first - coarse.first) / 3.0, (4.0 * fine.second - coarse.second) / 3.0};
}

}  // namespace

SeriesCoefficients::SeriesCoefficients(std::vector<cplx> pos_, std::vector<cplx> neg_)
    : pos(std::move(pos_)), neg(std::move(neg_)) {
  if (neg.size() < 1 || pos.size() != neg.size() + 1) {
    throw ParameterError("series coefficients need c_0..c_K and c_-1..c_-K with K >= 1");
  }
  for (const auto& v : pos) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw ParameterError("coefficient not finite");
  }
  for (const auto& v : neg) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw ParameterError("coefficient not finite");
  }
}

SeriesCoefficients SeriesCoefficients::from_map(const std::map<int, cplx>& coeffs, int K) {
  for (const auto& kv : coeffs) K = std::max(K, std::abs(kv.first));
  K = std::max(K, 1);
  std::vector<cplx> pos(K + 1, 0.0);
  std::vector<cplx> neg(K, 0.0);
  for (const auto& [k, v] : coeffs) {
    if (k >= 0) {
      pos[k] = v;
    } else {
      neg[-k - 1] = v;
    }
  }
  return SeriesCoefficients(std::move(pos), std::move(neg));
}

cplx SeriesCoefficients::at(int k) const {
  if (k >= 0) return k < static_cast<int>(pos.size()) ? pos[k] : cplx(0.0);
  return -k <= static_cast<int>(neg.size()) ? neg[-k - 1] : cplx(0.0);
}

cplx HarmonicSnapshot::evaluate(cplx w) const {
  cplx sum = 0.0;
  cplx wk = 1.0;
  for (std::size_t k = 0; k < A.size(); ++k) {
    sum += A[k] * wk;
    if (k >= 1 && k - 1 < B.size()) sum += B[k - 1] * std::conj(wk);
    wk *= w;
  }
  return sum;
}

cplx poisson_integral(const AlphaBeta& p, const BoundaryFunction& f, const DiskPoint& z, int nodes) {
  if (nodes < 64 || !is_power_of_two(nodes)) throw DomainError("nodes must be a power of two, at least 64");
  const auto values = f.sample(nodes);
  cplx sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double t = 2.0 * std::numbers::pi * j / nodes;
    sum += kernel_u(p, z.z() * std::polar(1.0, -t)) * values[j];
  }
  return p.c_norm() * sum / static_cast<double>(nodes);
}

PoissonSolver::PoissonSolver(const AlphaBeta& p, int order, int nodes)
    : p_(p), order_(order), nodes_(nodes), cache_(64, hash_point) {
  if (nodes < 64 || !is_power_of_two(nodes)) throw DomainError("nodes must be a power of two, at least 64");
  if (order < 0 || 2 * order >= nodes) throw DomainError("order must satisfy 0 <= K < nodes/2");
}

std::shared_ptr<const std::vector<cplx>> PoissonSolver::response(cplx z) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    const auto it = cache_.find(z);
    if (it != cache_.end()) return it->second;
  }
  const DiskPoint zp(z);
  const int n = nodes_;
  const int K = order_;
  std::vector<cplx> tw(n);
  for (int m = 0; m < n; ++m) tw[m] = std::polar(1.0, 2.0 * std::numbers::pi * m / n);
  auto out = std::make_shared<std::vector<cplx>>(2 * K + 1, cplx(0.0));
  for (int j = 0; j < n; ++j) {
    const cplx kv = kernel_u(p_, zp.z() * std::conj(tw[j]));
    for (int k = -K; k <= K; ++k) {
      const long idx = ((static_cast<long>(k) * j) % n + n) % n;
      (*out)[k + K] += kv * tw[idx];
    }
  }
  for (auto& v : *out) v *= p_.c_norm() / static_cast<double>(n);
  std::lock_guard<std::mutex> lock(mutex_);
  return cache_.emplace(z, std::move(out)).first->second;
}

cplx PoissonSolver::operator()(const BoundaryFunction& f, cplx z) const {
  if (f.order() > order_) throw DomainError("boundary order exceeds the solver order");
  const auto resp = response(z);
  cplx sum = 0.0;
  for (const auto& [k, v] : f.fourier()) sum += v * (*resp)[k + order_];
  return sum;
}

DiskFunction PoissonSolver::extension(const BoundaryFunction& f) const {
  if (f.order() > order_) throw DomainError("boundary order exceeds the solver order");
  return [this, f](cplx z) { return (*this)(f, z); };
}

cplx evaluate_expansion(const AlphaBeta& p, const SeriesCoefficients& c, const DiskPoint& z) {
  const double a = p.alpha();
  const double b = p.beta();
  const double x = std::norm(z.z());
  cplx sum = 0.0;
  cplx zk = 1.0;
  for (int k = 0; k <= c.order(); ++k) {
    if (c.at(k) != 0.0) sum += c.at(k) * hyp(-a, k - b, k + 1.0, x) * zk;
    if (k >= 1 && c.at(-k) != 0.0) sum += c.at(-k) * hyp(-b, k - a, k + 1.0, x) * std::conj(zk);
    zk *= z.z();
  }
  return sum;
}

SeriesCoefficients coefficients_from_boundary(const AlphaBeta& p, const BoundaryFunction& f, int K) {
  const double a = p.alpha();
  const double b = p.beta();
  K = std::max({K, f.order(), 1});
  std::vector<cplx> pos(K + 1, 0.0);
  std::vector<cplx> neg(K, 0.0);
  for (int k = 0; k <= K; ++k) {
    const double fp = gauss_2f1_at_one(HypParams(-a, k - b, k + 1.0));
    if (fp == 0.0) throw DomainError("radial limit vanishes for k = " + std::to_string(k));
    pos[k] = f.coefficient(k) / fp;
    if (k == 0) continue;
    const double fm = gauss_2f1_at_one(HypParams(-b, k - a, k + 1.0));
    if (fm == 0.0) throw DomainError("radial limit vanishes for k = " + std::to_string(-k));
    neg[k - 1] = f.coefficient(-k) / fm;
  }
  return SeriesCoefficients(std::move(pos), std::move(neg));
}

HarmonicSnapshot snapshot(const AlphaBeta& p, const SeriesCoefficients& c, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("snapshot radius must lie in (0, 1]");
  const double a = p.alpha();
  const double b = p.beta();
  const double x = r * r;
  HarmonicSnapshot s;
  s.r = r;
  double rk = 1.0;
  for (int k = 0; k <= c.order(); ++k) {
    s.A.push_back(c.at(k) * hyp(-a, k - b, k + 1.0, x) * rk);
    if (k >= 1) s.B.push_back(c.at(-k) * hyp(-b, k - a, k + 1.0, x) * rk);
    rk *= r;
  }
  return s;
}

cplx operator_residual(const AlphaBeta& p, const DiskFunction& u, const DiskPoint& z, double h) {
  require_stencil(z, h);
  const cplx z0 = z.z();
  const cplx i(0.0, 1.0);
  const cplx u0 = u(z0);
  const cplx ue = u(z0 + h);
  const cplx uw = u(z0 - h);
  const cplx un = u(z0 + i * h);
  const cplx us = u(z0 - i * h);
  const cplx ux = (ue - uw) / (2.0 * h);
  const cplx uy = (un - us) / (2.0 * h);
  const cplx uz = (ux - i * uy) / 2.0;
  const cplx uzb = (ux + i * uy) / 2.0;
  const cplx uzzb = (ue + uw + un + us - 4.0 * u0) / (4.0 * h * h);
  const double w = 1.0 - std::norm(z0);
  return w * (w * uzzb + p.alpha() * z0 * uz + p.beta() * std::conj(z0) * uzb - p.alpha() * p.beta() * u0);
}

std::pair<cplx, cplx> wirtinger_derivatives(const DiskFunction& u, const DiskPoint& z, double h, bool richardson) {
  require_stencil(z, h);
  const auto coarse = wirtinger_raw(u, z.z(), h);
  if (!richardson) return coarse;
  return extrapolate(coarse, wirtinger_raw(u, z.z(), h / 2.0));
}

double jacobian_norm(const DiskFunction& u, const DiskPoint& z, double h, bool richardson) {
  const auto [uz, uzb] = wirtinger_derivatives(u, z, h, richardson);
  return std::abs(uz) + std::abs(uzb);
}

std::pair<cplx, cplx> radial_angular_derivatives(const DiskFunction& u, const DiskPoint& z, double h,
                                                 bool richardson) {
  require_stencil(z, h);
  if (!(z.r() > h)) throw DomainError("polar differences need r > h");
  const auto coarse = polar_raw(u, z.r(), z.theta(), h);
  if (!richardson) return coarse;
  return extrapolate(coarse, polar_raw(u, z.r(), z.theta(), h / 2.0));
}

double integral_means(const DiskFunction& u, double r, double p, int nodes) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("radius must lie in [0, 1)");
  if (!(p >= 1.0)) throw DomainError("p must be at least 1");
  if (nodes < 1) throw DomainError("nodes must be positive");
  double acc = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double v = std::abs(u(std::polar(r, 2.0 * std::numbers::pi * j / nodes)));
    acc = std::isinf(p) ? std::max(acc, v) : acc + std::pow(v, p);
  }
  return std::isinf(p) ? acc : std::pow(acc / nodes, 1.0 / p);
}

void write_grid_csv(std::ostream& os, const DiskFunction& u, int nr, int nt) {
  if (nr < 1 || nt < 1) throw DomainError("grid needs at least one radius and one angle");
  os << "x,y,re,im\n";
  for (int i = 0; i < nr; ++i) {
    const double r = static_cast<double>(i + 1) / (nr + 1);
    for (int j = 0; j < nt; ++j) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / nt);
      const cplx v = u(z);
      os << format_number(z.real()) << ',' << format_number(z.imag()) << ',' << format_number(v.real()) << ','
         << format_number(v.imag()) << '\n';
    }
  }
}

}  // namespace abharm
