#include "abharm/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/minima.hpp>

namespace abharm::quad {
namespace {

// integrate() is non-const in Boost, so each thread keeps its own instance.
boost::math::quadrature::tanh_sinh<double>& integrator() {
  thread_local boost::math::quadrature::tanh_sinh<double> instance(15);
  return instance;
}

double refine_max(const std::function<double(double)>& f, double lo, double hi) {
  auto neg = [&](double t) { return -f(t); };
  const auto best = boost::math::tools::brent_find_minima(neg, lo, hi, 50);
  return -best.second;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b) {
  if (a == b) return 0.0;
  if (b < a) return -integrate(f, b, a);
  double error = 0.0;
  double l1 = 0.0;
  // Boost resolves abscissae near the left endpoint accurately only when it is close to zero,
  // so every interval is shifted to start at 0.
  auto shifted = [&](double t) { return f(a + t); };
  return integrator().integrate(shifted, 0.0, b - a, 1e-14, &error, &l1);
}

double circle_integral(const std::function<double(double)>& f, std::vector<double> breaks) {
  std::vector<double> cuts{0.0, kTwoPi};
  for (double b : breaks) {
    double t = std::fmod(b, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t > 1e-14 && t < kTwoPi - 1e-14) cuts.push_back(t);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double x, double y) { return std::abs(x - y) < 1e-14; }),
             cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += integrate(f, cuts[i], cuts[i + 1]);
  return total;
}

double interval_max(const std::function<double(double)>& f, double a, double b, int nodes) {
  std::vector<double> values(nodes + 1);
  const double h = (b - a) / nodes;
  for (int j = 0; j <= nodes; ++j) values[j] = f(a + j * h);
  const double top = *std::max_element(values.begin(), values.end());
  double best = top;
  for (int j = 0; j <= nodes; ++j) {
    const bool left_ok = j == 0 || values[j] >= values[j - 1];
    const bool right_ok = j == nodes || values[j] >= values[j + 1];
    if (!(left_ok && right_ok)) continue;
    if (values[j] < top - 1e-3 * std::abs(top)) continue;
    const double lo = std::max(a, a + (j - 1) * h);
    const double hi = std::min(b, a + (j + 1) * h);
    best = std::max(best, refine_max(f, lo, hi));
  }
  return best;
}

double circle_max(const std::function<double(double)>& f, int nodes) {
  std::vector<double> values(nodes);
  const double h = kTwoPi / nodes;
  for (int j = 0; j < nodes; ++j) values[j] = f(j * h);
  const double top = *std::max_element(values.begin(), values.end());
  double best = top;
  for (int j = 0; j < nodes; ++j) {
    const double prev = values[(j + nodes - 1) % nodes];
    const double next = values[(j + 1) % nodes];
    if (values[j] < prev || values[j] < next) continue;
    if (values[j] < top - 1e-3 * std::abs(top)) continue;
    best = std::max(best, refine_max(f, (j - 1) * h, (j + 1) * h));
  }
  return best;
}

}  // namespace abharm::quad
