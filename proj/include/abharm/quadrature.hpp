#pragma once

#include <functional>
#include <numbers>
#include <vector>

namespace abharm::quad {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr int kDefaultNodes = 4096;

// (1/N) * sum f(2 pi j / N): the periodic trapezoid rule for the circle mean.
template <class F>
auto periodic_mean(F&& f, int nodes) {
  auto sum = f(0.0);
  for (int j = 1; j < nodes; ++j) sum += f(kTwoPi * j / nodes);
  return sum / static_cast<double>(nodes);
}

// Double-exponential quadrature on [a, b]; tolerates integrable endpoint singularities.
double integrate(const std::function<double(double)>& f, double a, double b);

// Integral over [0, 2 pi], split at the given break points (taken mod 2 pi), where
// the integrand may have kinks or integrable singularities.
double circle_integral(const std::function<double(double)>& f, std::vector<double> breaks);

// Maximum of a continuous 2 pi-periodic function: grid scan plus local refinement.
double circle_max(const std::function<double(double)>& f, int nodes = 1024);

// Maximum over [a, b] of a continuous function, same strategy.
double interval_max(const std::function<double(double)>& f, double a, double b, int nodes = 1024);

}  // namespace abharm::quad
