#include "abharm/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <string>

#include <boost/math/special_functions/digamma.hpp>

#include "abharm/errors.hpp"

namespace abharm {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTermTolerance = 1e-16;

// sin(pi x) with exact argument reduction.
double sinpi(double x) {
  double r = x - 2.0 * std::round(x / 2.0);
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

double gamma_sign(double x) {
  if (x > 0.0) return 1.0;
  return sinpi(x) > 0.0 ? 1.0 : -1.0;  // reflection: sign of sin(pi x)
}

// prod Gamma(num) / prod Gamma(den); a pole in the denominator gives 0.
double gamma_ratio(std::initializer_list<double> num, std::initializer_list<double> den) {
  for (double d : den) {
    if (is_nonpositive_integer(d)) return 0.0;
  }
  bool large = false;
  for (double v : num) large = large || std::abs(v) > 150.0;
  for (double v : den) large = large || std::abs(v) > 150.0;
  if (!large) {
    double value = 1.0;
    for (double v : num) value *= gamma(v);
    for (double v : den) value *= rgamma(v);
    return value;
  }
  double log_value = 0.0;
  double sign = 1.0;
  for (double v : num) {
    if (is_nonpositive_integer(v)) throw PoleError("gamma pole at " + std::to_string(v));
    log_value += std::lgamma(v);
    sign *= gamma_sign(v);
  }
  for (double v : den) {
    log_value -= std::lgamma(v);
    sign *= gamma_sign(v);
  }
  return sign * std::exp(log_value);
}

double polynomial(double a, double b, double c, double x) {
  // a is a non-positive integer; the series stops after -a terms.
  const int degree = static_cast<int>(-std::round(a));
  const double ai = -degree;
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < degree; ++n) {
    term *= (ai + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
    sum += term;
  }
  return sum;
}

double direct_series(double a, double b, double c, double x) {
  const double settle = std::max({std::abs(a), std::abs(b), std::abs(c)}) + 2.0;
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    const double ratio = (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x;
    term *= ratio;
    sum += term;
    if (term == 0.0) return sum;
    if (n >= settle && std::abs(ratio) < 1.0 && std::abs(term) <= kTermTolerance * std::abs(sum)) {
      return sum;
    }
  }
  throw ConvergenceError("2F1 series did not converge within " + std::to_string(kMaxSeriesTerms) +
                         " terms at x=" + std::to_string(x));
}

double core(double a, double b, double c, double x);

// c - a - b = m, a non-negative integer; logarithmic expansion about x = 1.
double integer_gap(double a, double b, int m, double x) {
  const double c = a + b + m;
  const double y = 1.0 - x;
  double finite = 0.0;
  if (m > 0) {
    double term = 1.0;
    double s = 1.0;
    for (int n = 0; n < m - 1; ++n) {
      term *= (a + n) * (b + n) / ((n + 1.0) * (1.0 - m + n)) * y;
      s += term;
    }
    finite = gamma_ratio({static_cast<double>(m), c}, {a + m, b + m}) * s;
  }

  double coef = 1.0 / std::tgamma(m + 1.0);
  double psi1 = boost::math::digamma(1.0);
  double psi2 = boost::math::digamma(m + 1.0);
  double psi3 = digamma(a + m);
  double psi4 = digamma(b + m);
  const double log_y = std::log(y);
  const double settle = std::max(std::abs(a), std::abs(b)) + m + 2.0;
  double sum = 0.0;
  bool converged = false;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    const double bracket = log_y - psi1 - psi2 + psi3 + psi4;
    const double term = coef * bracket;
    sum += term;
    const double size = std::abs(coef) * (std::abs(log_y) + std::abs(psi1) + std::abs(psi2) +
                                          std::abs(psi3) + std::abs(psi4));
    if (coef == 0.0 || (n >= settle && size <= kTermTolerance * std::abs(sum))) {
      converged = true;
      break;
    }
    coef *= (a + m + n) * (b + m + n) / ((n + 1.0) * (n + m + 1.0)) * y;
    psi1 += 1.0 / (n + 1.0);
    psi2 += 1.0 / (n + m + 1.0);
    psi3 += 1.0 / (a + m + n);
    psi4 += 1.0 / (b + m + n);
  }
  if (!converged) throw ConvergenceError("2F1 logarithmic expansion did not converge");
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double prefactor = -sign * std::pow(y, m) * gamma_ratio({c}, {a, b});
  return finite + prefactor * sum;
}

double near_one(double a, double b, double c, double x) {
  const double d = c - a - b;
  const double m = std::round(d);
  if (std::abs(d - m) <= kIntegerTolerance) {
    if (m >= 0.0) return integer_gap(a, b, static_cast<int>(m), x);
    // Euler: F(a,b;c;x) = (1-x)^(c-a-b) F(c-a,c-b;c;x), whose gap is -m > 0.
    return std::pow(1.0 - x, d) * core(c - a, c - b, c, x);
  }
  const double y = 1.0 - x;
  const double first = gamma_ratio({c, d}, {c - a, c - b});
  const double second = gamma_ratio({c, -d}, {a, b});
  double value = 0.0;
  if (first != 0.0) value += first * core(a, b, 1.0 - d, y);
  if (second != 0.0) value += second * std::pow(y, d) * core(c - a, c - b, 1.0 + d, y);
  return value;
}

double core(double a, double b, double c, double x) {
  if (x == 0.0) return 1.0;
  const bool ta = is_nonpositive_integer(a);
  const bool tb = is_nonpositive_integer(b);
  if (ta || tb) {
    if (ta && tb) return std::round(a) > std::round(b) ? polynomial(a, b, c, x) : polynomial(b, a, c, x);
    return ta ? polynomial(a, b, c, x) : polynomial(b, a, c, x);
  }
  if (std::abs(x) <= kSeriesSeam) return direct_series(a, b, c, x);
  if (x < 0.0) {
    // Pfaff: F(a,b;c;x) = (1-x)^(-a) F(a,c-b;c;x/(x-1)).
    return std::pow(1.0 - x, -a) * core(a, c - b, c, x / (x - 1.0));
  }
  return near_one(a, b, c, x);
}

}  // namespace

bool is_nonpositive_integer(double x) {
  return x <= kIntegerTolerance && std::abs(x - std::round(x)) <= kIntegerTolerance;
}

HypParams::HypParams(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw ParameterError("hypergeometric parameters must be finite");
  }
  if (is_nonpositive_integer(c)) {
    throw ParameterError("hypergeometric parameter c must not be zero or a negative integer");
  }
}

double gamma(double x) {
  if (is_nonpositive_integer(x)) throw PoleError("gamma pole at " + std::to_string(x));
  if (x >= 0.5) return std::tgamma(x);
  return kPi / (sinpi(x) * std::tgamma(1.0 - x));
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x >= 0.5) {
    const double g = std::tgamma(x);
    return std::isinf(g) ? 0.0 : 1.0 / g;
  }
  return sinpi(x) * std::tgamma(1.0 - x) / kPi;
}

double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) throw DomainError("beta requires positive arguments");
  return gamma_ratio({x, y}, {x + y});
}

double pochhammer(double a, int n) {
  if (n < 0) throw DomainError("pochhammer order must be non-negative");
  double value = 1.0;
  for (int i = 0; i < n; ++i) value *= a + i;
  return value;
}

double digamma(double x) {
  if (is_nonpositive_integer(x)) throw PoleError("digamma pole at " + std::to_string(x));
  return boost::math::digamma(x);
}

double gauss_2f1(const HypParams& p, double x) {
  if (!(std::abs(x) < 1.0)) throw DomainError("gauss_2f1 requires |x| < 1");
  return core(p.a, p.b, p.c, x);
}

double gauss_2f1_at_one(const HypParams& p) {
  const double d = p.c - p.a - p.b;
  if (!(d > 0.0)) throw DomainError("F(a,b;c;1) requires c - a - b > 0");
  if (is_nonpositive_integer(p.a) || is_nonpositive_integer(p.b)) {
    // Terminating case: Gauss sum still holds but the gamma ratio may be 0/0 in c-a or c-b.
    return core(p.a, p.b, p.c, 1.0);
  }
  return gamma_ratio({p.c, d}, {p.c - p.a, p.c - p.b});
}

double gauss_2f1_derivative(const HypParams& p, double x) {
  if (!(std::abs(x) < 1.0)) throw DomainError("gauss_2f1_derivative requires |x| < 1");
  const double scale = p.a * p.b / p.c;
  if (scale == 0.0) return 0.0;
  return scale * core(p.a + 1.0, p.b + 1.0, p.c + 1.0, x);
}

}  // namespace abharm
