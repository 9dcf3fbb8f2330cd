#pragma once

#include <complex>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace abharm {

using cplx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Boundary data on the unit circle: a trigonometric polynomial, optionally
// carried together with the uniform samples it was built from.
class BoundaryFunction {
 public:
  static BoundaryFunction from_fourier(std::map<int, cplx> coeffs);
  // N = samples.size() must be a power of two; coefficients are taken for |k| < N/2.
  static BoundaryFunction from_samples(std::vector<cplx> samples);

  const std::map<int, cplx>& fourier() const { return fourier_; }
  const std::optional<std::vector<cplx>>& samples() const { return samples_; }
  int order() const { return order_; }

  cplx coefficient(int k) const;
  // f(e^{it})
  cplx operator()(double t) const;
  // Values at t_j = 2 pi j / n. Returns the stored samples when n matches.
  std::vector<cplx> sample(int n) const;

 private:
  std::map<int, cplx> fourier_;
  std::optional<std::vector<cplx>> samples_;
  int order_ = 0;
};

// conj(f): coefficients conj(fhat(-k)).
BoundaryFunction conjugate(const BoundaryFunction& f);

// fhat(k) = (1/N) sum_j samples[j] e^{-ik t_j}, |k| <= K. Requires K < N/2.
std::map<int, cplx> fourier_from_samples(const std::vector<cplx>& samples, int K);

// ((1/2pi) int |f|^p)^(1/p) on a uniform grid; p = inf gives the maximum, refined between nodes.
double lp_norm(const BoundaryFunction& f, double p, int nodes = 4096);

// {"fourier": {"k": [re, im], ...}} and/or {"samples": [[re, im], ...]}.
// Throws FormatError on anything else.
BoundaryFunction parse_boundary(const std::string& text);
BoundaryFunction load_boundary(const std::string& path);

// CSV with header t,re,im.
void write_samples_csv(std::ostream& os, const BoundaryFunction& f, int n);

bool is_power_of_two(long n);

}  // namespace abharm
