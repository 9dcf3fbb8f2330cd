#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "abharm/errors.hpp"
#include "abharm/kernel.hpp"
#include "abharm/specfun.hpp"

using abharm::cplx;
using abharm::make_params;

namespace {

const std::vector<std::pair<double, double>> kGrid{{0, 0}, {0.5, 0.5}, {-0.5, 1}, {0.3, -0.2}, {1, 1}, {-0.4, -0.3}};

cplx unit(double t) { return std::polar(1.0, t); }

}  // namespace

TEST(Params, NormalisingConstant) {
  EXPECT_DOUBLE_EQ(make_params(0, 0).c_norm(), 1.0);
  EXPECT_NEAR(make_params(1, 1).c_norm(), 0.5, 1e-15);
  const auto p = make_params(0.3, -0.2);
  EXPECT_NEAR(p.c_norm(), abharm::gamma(1.3) * abharm::gamma(0.8) / abharm::gamma(1.1), 1e-14);
  EXPECT_NEAR(p.swapped().c_norm(), p.c_norm(), 1e-15);
}

TEST(Params, Rejected) {
  EXPECT_THROW(make_params(-1, 0), abharm::ParameterError);
  EXPECT_THROW(make_params(0.5, -2), abharm::ParameterError);
  EXPECT_THROW(make_params(-0.5, -0.5), abharm::ParameterError);
  EXPECT_THROW(make_params(-0.7, -0.6), abharm::ParameterError);
  EXPECT_THROW(make_params(NAN, 0), abharm::ParameterError);
  EXPECT_NO_THROW(make_params(-1.5, 2));
}

TEST(KernelU, Values) {
  for (auto [a, b] : kGrid) EXPECT_EQ(abharm::kernel_u(make_params(a, b), 0.0), cplx(1.0));
  EXPECT_NEAR(std::abs(abharm::kernel_u(make_params(0, 0), 0.5) - 3.0), 0.0, 1e-14);
  const cplx w(0.0, 0.3);
  const double want = std::pow(std::abs(1.0 - w), -3.0) * std::pow(0.91, 2.0);
  EXPECT_NEAR(std::abs(abharm::kernel_u(make_params(0.5, 0.5), w) - want), 0.0, 1e-14);
  EXPECT_THROW(abharm::kernel_u(make_params(0, 0), 1.0), abharm::DomainError);
  EXPECT_THROW(abharm::kernel_u(make_params(0, 0), cplx(0.8, 0.7)), abharm::DomainError);
}

TEST(KernelU, AgreesWithDirectFormula) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> rad(0.0, 0.98), ang(-3.14, 3.14);
  for (auto [a, b] : kGrid) {
    const auto p = make_params(a, b);
    for (int i = 0; i < 50; ++i) {
      const cplx w = std::polar(rad(rng), ang(rng));
      const double m = 1.0 - std::norm(w);
      const cplx want = std::pow(m, a + b + 1) * std::exp(-(a + 1) * std::log(1.0 - w) - (b + 1) * std::log(1.0 - std::conj(w)));
      EXPECT_LE(std::abs(abharm::kernel_u(p, w) - want), 1e-12 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST(KernelU, ContinuousAlongRadii) {
  const auto p = make_params(0.3, -0.2);
  for (double t : {0.0, 1.0, 3.1, 3.14159, -3.14159, -2.0}) {
    cplx prev = abharm::kernel_u(p, 0.0);
    for (double r = 1e-3; r < 0.95; r += 1e-3) {
      const cplx cur = abharm::kernel_u(p, std::polar(r, t));
      EXPECT_LE(std::abs(cur - prev), 0.05 * std::max(1.0, std::abs(prev))) << "t=" << t << " r=" << r;
      prev = cur;
    }
  }
}

TEST(PoissonKernel, CentreGivesNormalisingConstant) {
  for (auto [a, b] : kGrid) {
    const auto p = make_params(a, b);
    for (double t : {0.0, 1.0, 4.0}) EXPECT_NEAR(std::abs(abharm::poisson_kernel(p, cplx(0.0), unit(t)) - p.c_norm()), 0.0, 1e-14);
  }
}

TEST(PoissonKernel, ClassicalIsPositive) {
  const auto p = make_params(0, 0);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> rad(0.0, 0.99), ang(0.0, 6.28);
  for (int i = 0; i < 500; ++i) {
    const cplx z = std::polar(rad(rng), ang(rng));
    const double t = ang(rng);
    const cplx v = abharm::poisson_kernel(p, z, unit(t));
    EXPECT_NEAR(v.imag(), 0.0, 1e-12 * std::abs(v));
    EXPECT_GE(v.real(), 0.0);
    EXPECT_NEAR(v.real(), (1 - std::norm(z)) / std::norm(unit(t) - z), 1e-11 * v.real());
  }
}

TEST(PoissonKernel, RealOnDiagonal) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> rad(0.0, 0.99), ang(0.0, 6.28);
  for (double a : {-0.4, 0.5, 1.7}) {
    const auto p = make_params(a, a);
    for (int i = 0; i < 100; ++i) {
      const cplx v = abharm::poisson_kernel(p, std::polar(rad(rng), ang(rng)), unit(ang(rng)));
      EXPECT_LE(std::abs(v.imag()), 1e-12 * std::abs(v));
    }
  }
}

TEST(PoissonKernel, ConjugateSymmetry) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> rad(0.0, 0.95), ang(0.0, 6.28);
  for (auto [a, b] : kGrid) {
    const auto p = make_params(a, b);
    for (int i = 0; i < 100; ++i) {
      const cplx w = std::polar(rad(rng), ang(rng));
      // conj of an (a,b) kernel is the (b,a) kernel at the same point; equivalently w -> conj(w)
      const cplx lhs = std::conj(abharm::kernel_u(p, w));
      const cplx swapped = abharm::kernel_u(p.swapped(), w);
      const cplx reflected = abharm::kernel_u(p, std::conj(w));
      EXPECT_LE(std::abs(lhs - swapped), 1e-12 * std::max(1.0, std::abs(lhs)));
      EXPECT_LE(std::abs(lhs - reflected), 1e-12 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST(PoissonKernel, UnitModulusTolerance) {
  const auto p = make_params(0.5, 0.5);
  EXPECT_NO_THROW(abharm::poisson_kernel(p, cplx(0.3), cplx(1.0 + 5e-13, 0.0)));
  EXPECT_THROW(abharm::poisson_kernel(p, cplx(0.3), cplx(1.0 + 1e-9, 0.0)), abharm::DomainError);
  EXPECT_THROW(abharm::DiskPoint(cplx(1.0, 0.0)), abharm::DomainError);
}

TEST(PoissonKernel, GradientMatchesDifferences) {
  const double h = 1e-5;
  for (auto [a, b] : kGrid) {
    const auto p = make_params(a, b);
    for (cplx z : {cplx(0.1, 0.2), cplx(-0.5, 0.3), cplx(0.0, -0.7)}) {
      const cplx zeta = unit(0.9);
      auto P = [&](cplx w) { return abharm::poisson_kernel(p, w, zeta); };
      const cplx dx = (P(z + h) - P(z - h)) / (2 * h);
      const cplx dy = (P(z + cplx(0, h)) - P(z - cplx(0, h))) / (2 * h);
      const cplx dz = 0.5 * (dx - cplx(0, 1) * dy), dzb = 0.5 * (dx + cplx(0, 1) * dy);
      const auto [gz, gzb] = abharm::poisson_kernel_gradient(p, z, zeta);
      const double scale = std::max(1.0, std::abs(gz) + std::abs(gzb));
      EXPECT_LE(std::abs(gz - dz), 1e-6 * scale);
      EXPECT_LE(std::abs(gzb - dzb), 1e-6 * scale);
    }
  }
}

TEST(KernelMeans, ModulusMeanClosedFormMatchesQuadrature) {
  for (auto [a, b] : kGrid) {
    const auto p = make_params(a, b);
    for (int i = 1; i <= 9; ++i) {
      const double r = 0.1 * i;
      const double closed = abharm::kernel_modulus_mean(p, r);
      const double quad = abharm::kernel_modulus_mean_quadrature(p, r, 4096);
      EXPECT_LE(std::abs(closed - quad), 1e-8 * std::max(1.0, closed)) << a << "," << b << " r=" << r;
    }
  }
}

TEST(KernelMeans, SignedMeanClosedFormMatchesQuadrature) {
  for (auto [a, b] : kGrid) {
    const auto p = make_params(a, b);
    for (int i = 1; i <= 9; ++i) {
      const double r = 0.1 * i;
      const double closed = abharm::kernel_mean(p, r);
      const cplx quad = abharm::kernel_mean_quadrature(p, r, 4096);
      EXPECT_LE(std::abs(quad - closed), 1e-8 * std::max(1.0, std::abs(closed))) << a << "," << b << " r=" << r;
    }
  }
  EXPECT_NEAR(abharm::kernel_mean(make_params(1, 1), 0.6), 0.68, 1e-14);
}

TEST(KernelMeans, SignedAndModulusMeansAgreeOnlyOnDiagonal) {
  for (double r : {0.3, 0.7}) {
    const auto d = make_params(0.5, 0.5);
    EXPECT_NEAR(abharm::kernel_mean(d, r), abharm::kernel_modulus_mean(d, r), 1e-13);
    const auto off = make_params(-0.5, 1);
    EXPECT_GT(std::abs(abharm::kernel_mean(off, r) - abharm::kernel_modulus_mean(off, r)), 1e-3);
  }
}

TEST(KernelMeans, RadiusOneIsTheLimit) {
  const auto p = make_params(0.5, 0.5);
  EXPECT_NEAR(abharm::kernel_modulus_mean(p, 1.0), abharm::kernel_modulus_mean(p, 1 - 1e-9), 1e-6);
  EXPECT_THROW(abharm::kernel_modulus_mean(p, 1.1), abharm::DomainError);
}
