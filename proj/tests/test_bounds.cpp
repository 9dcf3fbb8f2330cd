#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "abharm/bounds.hpp"
#include "abharm/errors.hpp"
#include "abharm/harmonic.hpp"
#include "abharm/specfun.hpp"

using abharm::AlphaBeta;
using abharm::Derivative;
using abharm::HolderPair;
using abharm::make_params;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

const std::vector<std::pair<double, double>> kGrid{{0, 0}, {0.5, 0.5}, {-0.5, 1}, {0.3, -0.2}, {0, 1}};

// Gauss-Kronrod over [0, 2pi], split at multiples of pi/2 and at any extra kinks.
template <class F>
double oracle_integral(F f, std::vector<double> cuts = {}) {
  for (double c : {0.5 * kPi, kPi, 1.5 * kPi}) cuts.push_back(c);
  for (auto& c : cuts) c = std::fmod(std::fmod(c, 2 * kPi) + 2 * kPi, 2 * kPi);
  cuts.push_back(0.0);
  cuts.push_back(2 * kPi);
  std::sort(cuts.begin(), cuts.end());
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] < 1e-14) continue;
    sum += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, cuts[i], cuts[i + 1], 15, 1e-14);
  }
  return sum;
}

double w(double r, double s) { return 1 + r * r + 2 * r * std::cos(s); }

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST(HolderPair, Kinds) {
  EXPECT_TRUE(HolderPair(1.0).q_infinite());
  EXPECT_EQ(HolderPair(kInf).q(), 1.0);
  EXPECT_EQ(HolderPair(kInf).label(), "inf");
  EXPECT_NEAR(HolderPair(4.0).q(), 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(HolderPair(2.0).inv_q(), 0.5, 1e-15);
  EXPECT_THROW(HolderPair(0.5), abharm::ParameterError);
}

TEST(ComparePrinted, Flags) {
  EXPECT_EQ(abharm::compare_printed(1.0, 1.0), "exact");
  EXPECT_EQ(abharm::compare_printed(1.0, 1.5), "conservative");
  EXPECT_EQ(abharm::compare_printed(1.0, 0.5), "understates");
  EXPECT_EQ(abharm::compare_printed(1.0, NAN), "understates");
}

TEST(Classical, SectionTwoConstants) {
  const auto p = make_params(0, 0);
  EXPECT_NEAR(abharm::heinz_rhs(), 27.0 / (4 * kPi * kPi), 1e-15);
  const auto g = abharm::geometric_constants(p);
  EXPECT_NEAR(g.find("omit_S")->value, 2 * kPi * std::sqrt(6.0) / 9, 1e-12);
  EXPECT_NEAR(g.find("omit_S0")->value, 2 * kPi * std::sqrt(3.0) / 9, 1e-12);
  EXPECT_NEAR(g.find("covering")->value, 1.0 / 16, 1e-14);
  EXPECT_NEAR(g.find("area")->value, kPi / 2, 1e-12);
  EXPECT_NEAR(abharm::coefficient_bound(p, abharm::CoefficientKind::StarlikeCk, 2), 2.5, 1e-12);
  EXPECT_NEAR(abharm::coefficient_bound(p, abharm::CoefficientKind::ConjectureCmk, 2), 0.5, 1e-12);
  EXPECT_NEAR(abharm::coefficient_bound(p, abharm::CoefficientKind::StarlikeCmk, 3), 5.0 * 2 / 6, 1e-12);
}

TEST(Classical, MeansConstants) {
  const auto p = make_params(0, 0);
  EXPECT_NEAR(abharm::means_sup(p, Derivative::Radial).value, 4 / kPi, 1e-10);
  EXPECT_NEAR(abharm::means_sup(p, Derivative::Angular).value, 4 / kPi, 1e-10);
  EXPECT_NEAR(abharm::means_sup(p, Derivative::Wirtinger).value, 1.0, 1e-12);
  EXPECT_NEAR(*abharm::means_sup_printed(p, Derivative::Radial), 4 / kPi, 1e-10);
  EXPECT_NEAR(*abharm::means_sup_printed(p, Derivative::Wirtinger), 1.0, 1e-12);
}

TEST(CoefficientBounds, RegimesEnforced) {
  using abharm::CoefficientKind;
  EXPECT_THROW(abharm::coefficient_bound(make_params(0, 0), CoefficientKind::CMinus2, 2), abharm::ParameterError);
  EXPECT_THROW(abharm::coefficient_bound(make_params(-0.2, -0.5), CoefficientKind::C2, 3), abharm::ParameterError);
  EXPECT_THROW(abharm::coefficient_bound(make_params(0, 0), CoefficientKind::StarlikeCk, 1), abharm::ParameterError);
  EXPECT_THROW(abharm::coefficient_bound(make_params(0, 0), CoefficientKind::TypicallyReal, 2), abharm::ParameterError);
  const auto p = make_params(-0.2, -0.5);
  EXPECT_NEAR(abharm::coefficient_bound(p, CoefficientKind::CMinus2, 2), 1.5 * 0.5 / (4 * 0.8), 1e-15);
  EXPECT_EQ(abharm::parse_coefficient_kind("starlike_cmk"), CoefficientKind::StarlikeCmk);
  EXPECT_THROW(abharm::parse_coefficient_kind("nope"), abharm::ParameterError);
}

TEST(CoefficientBounds, ConjectureInfimumIsBelowSmallRadiusValue) {
  for (auto [a, b] : kGrid) {
    const auto p = make_params(a, b);
    for (int k : {2, 3, 5}) {
      for (bool neg : {false, true}) {
        const double inf = abharm::conjecture_infimum(p, k, neg);
        EXPECT_GT(inf, 0.0);
        EXPECT_LE(inf, 1.0 + 1e-15);
      }
    }
  }
}

TEST(Growth, ClosedFormMatchesOracle) {
  for (auto [a, b] : kGrid) {
    const auto p = make_params(a, b);
    const double S = a + b;
    for (double pv : {1.5, 2.0, 4.0, kInf}) {
      const HolderPair hp(pv);
      const double q = hp.q();
      for (double r : {0.1, 0.5, 0.9, 0.99}) {
        const double e = (q * (S + 2) - 2) / 2;
        const double mean = oracle_integral([&](double s) { return std::pow(w(r, s), e); }) / (2 * kPi);
        const double want = std::abs(p.c_norm()) * std::pow(mean, 1 / q);
        EXPECT_LE(rel(abharm::growth_constant(p, hp, r), want), 1e-10) << a << "," << b << " p=" << pv << " r=" << r;
        EXPECT_LE(rel(abharm::growth_integral(p, hp, r), want), 1e-10);
      }
    }
  }
}

TEST(Growth, QInfinityIsPointwiseMax) {
  const auto p = make_params(0.3, -0.2);
  const HolderPair hp(1.0);
  for (double r : {0.2, 0.7, 1.0}) {
    EXPECT_NEAR(abharm::growth_constant(p, hp, r), p.c_norm() * std::pow(1 + r, 2.1), 1e-12);
    EXPECT_LE(rel(abharm::growth_integral(p, hp, r), abharm::growth_constant(p, hp, r)), 1e-10);
  }
}

TEST(Growth, SupFlagsClassicalDiscrepancy) {
  const auto s = abharm::growth_sup(make_params(0, 0), HolderPair(kInf));
  EXPECT_NEAR(s.value, 1.0, 1e-12);
  ASSERT_TRUE(s.printed.has_value());
  EXPECT_NEAR(*s.printed, 0.5, 1e-12);
  EXPECT_EQ(s.flag, "understates");
  EXPECT_EQ(s.grid_points, abharm::kSupGridPoints);
}

TEST(Distortion, UClosedFormMatchesIntegral) {
  EXPECT_NEAR(abharm::distortion_u(HolderPair(kInf), 0.0), 2 * kPi, 1e-12);
  for (double b : {0.0, 0.5, 1.0, -0.2}) {
    for (double pv : {1.5, 2.0, 4.0, kInf}) {
      const HolderPair hp(pv);
      const double e = hp.q() * (b + 1) - 1;
      if (e <= -0.5) {
        EXPECT_TRUE(std::isinf(abharm::distortion_u(hp, b)));
        continue;
      }
      EXPECT_LE(rel(abharm::distortion_u(hp, b), abharm::distortion_u_integral(hp, b)), 1e-10) << b << " " << pv;
      // Gauss-Kronrod only copes with the bounded integrands.
      if (e < 0) continue;
      const double want = oracle_integral([&](double s) { return std::pow(2 + 2 * std::cos(s), e); });
      EXPECT_LE(rel(abharm::distortion_u(hp, b), want), 1e-10) << b << " " << pv;
    }
  }
  EXPECT_TRUE(std::isinf(abharm::distortion_u(HolderPair(kInf), -0.6)));
  EXPECT_TRUE(std::isinf(abharm::distortion_u_integral(HolderPair(kInf), -0.6)));
  EXPECT_THROW(abharm::distortion_u(HolderPair(1.0), 0.0), abharm::DomainError);
}

TEST(Distortion, LMatchesOracle) {
  for (auto [a, b] : kGrid) {
    const auto p = make_params(a, b);
    const HolderPair hp(2.0);
    const double q = 2.0, d = std::abs(b - a);
    for (double eta : {0.0, kPi / 2}) {
      const double r = 0.6;
      const double want = oracle_integral(
          [&](double s) {
            return std::pow(w(r, s), q * b + q - 1) * std::pow((d + 1) * std::abs(std::cos(s + eta)) + d * kPi, q);
          },
          {kPi / 2 - eta, 1.5 * kPi - eta});
      EXPECT_LE(rel(abharm::distortion_l(p, hp, r, eta), want), 1e-10);
    }
  }
}

TEST(Distortion, PartsAssembleTheConstant) {
  const auto p = make_params(0.3, -0.2);
  const HolderPair hp(4.0);
  const auto d = abharm::distortion_parts(p, hp, 0.5);
  EXPECT_EQ(d.V, std::max(d.L0, d.Lhalf));
  const double want = 2 * p.c_norm() * std::pow((d.P * d.U + d.Q * d.V) / (2 * kPi), 1 / hp.q());
  EXPECT_NEAR(d.value, want, 1e-12 * want);
  ASSERT_TRUE(d.printed.has_value());
  EXPECT_THROW(abharm::distortion_parts(make_params(1.5, -1.2), hp, 0.5), abharm::ParameterError);
}

TEST(Partials, I12ClosedFormMatchesOracle) {
  for (auto [a, b] : kGrid) {
    const auto p = make_params(a, b);
    for (double pv : {1.5, 2.0, 4.0, kInf}) {
      const HolderPair hp(pv);
      const double e = ((a + b + 2) * hp.q() - 2) / 2;
      for (double r : {0.2, 0.6, 0.95}) {
        const double want = oracle_integral([&](double s) { return std::pow(w(r, s), e); }) / (2 * kPi);
        EXPECT_LE(rel(abharm::partial_i12(p, hp, r), want), 1e-10);
        EXPECT_LE(rel(abharm::partial_i12_integral(p, hp, r), want), 1e-10);
      }
    }
  }
  EXPECT_THROW(abharm::partial_i12(make_params(0, 0), HolderPair(1.0), 0.5), abharm::DomainError);
  EXPECT_THROW(abharm::partial_i12_integral(make_params(0, 0), HolderPair(1.0), 0.5), abharm::DomainError);
}

TEST(Partials, WirtingerClosedFormMatchesIntegral) {
  for (auto [a, b] : kGrid) {
    const auto p = make_params(a, b);
    for (double pv : {1.5, 2.0, kInf, 1.0}) {
      const HolderPair hp(pv);
      for (double r : {0.3, 0.8}) {
        EXPECT_LE(rel(abharm::partial_constant(p, hp, Derivative::Wirtinger, r), abharm::wirtinger_integral(p, hp, r)),
                  1e-9);
      }
    }
  }
}

TEST(Partials, WirtingerBarUsesSwappedLead) {
  const auto p = make_params(-0.5, 1);
  const HolderPair hp(2.0);
  const double r = 0.4;
  const double wz = abharm::partial_constant(p, hp, Derivative::Wirtinger, r);
  const double wzb = abharm::partial_constant(p, hp, Derivative::WirtingerBar, r);
  EXPECT_NEAR(wzb / wz, (std::abs(1.0 + 1) + 0.5 * r) / (std::abs(-0.5 + 1) + 1 * r), 1e-12);
}

TEST(Partials, AngularEqualParametersClosedForm) {
  for (double a : {0.0, 0.5, 1.0}) {
    const auto p = make_params(a, a);
    for (double pv : {1.5, 2.0, 4.0, kInf}) {
      const HolderPair hp(pv);
      for (double r : {0.2, 0.5, 0.9}) {
        const double closed = abharm::angular_equal_closed_form(p, hp, r);
        const double quad = abharm::partial_constant(p, hp, Derivative::Angular, r);
        EXPECT_LE(rel(closed, quad), 1e-9) << a << " " << pv << " " << r;
      }
    }
  }
  EXPECT_THROW(abharm::angular_equal_closed_form(make_params(0, 1), HolderPair(2), 0.5), abharm::ParameterError);
}

TEST(Partials, RadialClassicalAgreesWithGeneralForm) {
  const auto p = make_params(0, 0);
  for (double pv : {1.5, 2.0, 4.0, kInf}) {
    const HolderPair hp(pv);
    for (double r : {0.1, 0.5, 0.9}) {
      EXPECT_LE(rel(abharm::radial_classical(hp, r), abharm::partial_constant(p, hp, Derivative::Radial, r)), 1e-9);
    }
  }
}

TEST(Partials, RadialClassicalSupIsGridSup) {
  const auto p = make_params(0, 0);
  for (double pv : {1.5, 2.0, 4.0}) {
    const HolderPair hp(pv);
    const double sup = abharm::partial_sup(p, hp, Derivative::Radial).value;
    EXPECT_LE(rel(abharm::radial_classical_sup(hp), sup), 1e-8) << pv;
  }
}

TEST(Means, ConstantsMatchOracle) {
  for (auto [a, b] : kGrid) {
    const auto p = make_params(a, b);
    const double S = a + b, d = std::abs(a - b), c = std::abs(p.c_norm());
    for (double r : {0.3, 0.7, 0.95}) {
      auto mean = [&](auto g) { return oracle_integral(g) / (2 * kPi); };
      const double m0 = mean([&](double s) { return std::pow(w(r, s), S / 2); });
      const double mc = mean([&](double s) { return std::abs(std::cos(s)) * std::pow(w(r, s), S / 2); });
      const double ms = mean([&](double s) { return std::abs(std::sin(s)) * std::pow(w(r, s), S / 2); });
      EXPECT_LE(rel(abharm::means_constant(p, Derivative::Radial, r), c * (std::abs(S) * r * m0 + (S + 2) * mc + d * ms)),
                1e-10);
      EXPECT_LE(rel(abharm::means_constant(p, Derivative::Angular, r), c * r * (d * r * m0 + (S + 2) * ms + d * mc)),
                1e-10);
      EXPECT_LE(rel(abharm::means_constant(p, Derivative::Wirtinger, r), c * (std::abs(a + 1) + std::abs(b) * r) * m0),
                1e-10);
      EXPECT_LE(rel(m0, abharm::mp_growth_factor(p, r) / c), 1e-10);
    }
  }
}

TEST(Report, ContainsEveryConstant) {
  const auto rep = abharm::full_report(make_params(0, 0), HolderPair(2.0));
  for (const char* name : {"heinz_rhs", "omit_S", "omit_S0", "covering", "area", "starlike_c2", "starlike_c_minus2",
                           "conjecture_c2", "conjecture_c_minus2", "mp_growth_limit", "growth_sup", "distortion_sup",
                           "distortion_U", "partial_radial_sup", "partial_angular_sup", "partial_wirtinger_sup",
                           "partial_wirtinger_bar_sup", "means_radial_sup", "means_angular_sup",
                           "means_wirtinger_sup", "means_wirtinger_bar_sup"}) {
    EXPECT_NE(rep.find(name), nullptr) << name;
  }
  EXPECT_EQ(rep.find("c2"), nullptr);
  const auto neg = abharm::full_report(make_params(-0.2, -0.5), HolderPair(2.0));
  EXPECT_NE(neg.find("c2"), nullptr);
  EXPECT_NE(neg.find("c_minus2"), nullptr);
  const std::string json = rep.to_json().dump();
  EXPECT_NE(json.find("\"growth_sup\""), std::string::npos);
  EXPECT_NE(json.find("\"flag\""), std::string::npos);
}
