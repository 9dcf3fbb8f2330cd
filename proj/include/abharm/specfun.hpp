#pragma once

namespace abharm {

// Parameters of F(a,b;c;x). c may not be zero or a negative integer.
struct HypParams {
  double a;
  double b;
  double c;

  HypParams(double a_, double b_, double c_);
};

// Distance below which a real is treated as an integer.
inline constexpr double kIntegerTolerance = 1e-12;

bool is_nonpositive_integer(double x);

double gamma(double x);
// 1/Gamma(x); zero at the poles instead of throwing.
double rgamma(double x);
double beta(double x, double y);
double pochhammer(double a, int n);
double digamma(double x);

double gauss_2f1(const HypParams& p, double x);
double gauss_2f1_at_one(const HypParams& p);
double gauss_2f1_derivative(const HypParams& p, double x);

// Seam between direct summation and the transformed series.
inline constexpr double kSeriesSeam = 0.8;
inline constexpr int kMaxSeriesTerms = 10000;

}  // namespace abharm
