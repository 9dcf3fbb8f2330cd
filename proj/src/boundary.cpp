#include "abharm/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "abharm/errors.hpp"
#include "abharm/format.hpp"
#include "abharm/quadrature.hpp"

namespace abharm {
namespace {

constexpr double kConsistency = 1e-10;

// e^{2 pi i m / n} for m = 0..n-1; indexing by (k j) mod n keeps every phase exact.
std::vector<cplx> twiddles(int n) {
  std::vector<cplx> w(n);
  for (int m = 0; m < n; ++m) w[m] = std::polar(1.0, 2.0 * std::numbers::pi * m / n);
  return w;
}

int max_order(const std::map<int, cplx>& coeffs) {
  int K = 0;
  for (const auto& [k, v] : coeffs) K = std::max(K, std::abs(k));
  return K;
}

cplx read_pair(const nlohmann::json& v, const std::string& what) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw FormatError(what + " must be a [re, im] pair of numbers");
  }
  const cplx z(v[0].get<double>(), v[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw FormatError(what + " is not finite");
  return z;
}

}  // namespace

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

BoundaryFunction BoundaryFunction::from_fourier(std::map<int, cplx> coeffs) {
  BoundaryFunction f;
  f.order_ = max_order(coeffs);
  f.fourier_ = std::move(coeffs);
  return f;
}

BoundaryFunction BoundaryFunction::from_samples(std::vector<cplx> samples) {
  const long n = static_cast<long>(samples.size());
  if (!is_power_of_two(n) || n < 2) throw DomainError("sample count must be a power of two, at least 2");
  BoundaryFunction f;
  f.fourier_ = fourier_from_samples(samples, static_cast<int>(n / 2 - 1));
  f.order_ = static_cast<int>(n / 2 - 1);
  f.samples_ = std::move(samples);
  return f;
}

cplx BoundaryFunction::coefficient(int k) const {
  const auto it = fourier_.find(k);
  return it == fourier_.end() ? cplx(0.0) : it->second;
}

cplx BoundaryFunction::operator()(double t) const {
  cplx sum = 0.0;
  for (const auto& [k, v] : fourier_) sum += v * std::polar(1.0, k * t);
  return sum;
}

std::vector<cplx> BoundaryFunction::sample(int n) const {
  if (n < 1) throw DomainError("sample count must be positive");
  if (samples_ && static_cast<int>(samples_->size()) == n) return *samples_;
  const auto w = twiddles(n);
  std::vector<cplx> out(n, cplx(0.0));
  for (const auto& [k, v] : fourier_) {
    const long kk = ((k % n) + n) % n;
    for (int j = 0; j < n; ++j) out[j] += v * w[(kk * j) % n];
  }
  return out;
}

BoundaryFunction conjugate(const BoundaryFunction& f) {
  if (f.samples()) {
    auto s = *f.samples();
    for (auto& v : s) v = std::conj(v);
    return BoundaryFunction::from_samples(std::move(s));
  }
  std::map<int, cplx> out;
  for (const auto& [k, v] : f.fourier()) out[-k] = std::conj(v);
  return BoundaryFunction::from_fourier(std::move(out));
}

std::map<int, cplx> fourier_from_samples(const std::vector<cplx>& samples, int K) {
  const int n = static_cast<int>(samples.size());
  if (n < 1) throw DomainError("no samples");
  if (K < 0 || 2 * K >= n) throw DomainError("order K must satisfy 0 <= K < N/2 (aliasing)");
  const auto w = twiddles(n);
  std::map<int, cplx> out;
  for (int k = -K; k <= K; ++k) {
    const long kk = ((-k % n) + n) % n;
    cplx sum = 0.0;
    for (int j = 0; j < n; ++j) sum += samples[j] * w[(kk * j) % n];
    out[k] = sum / static_cast<double>(n);
  }
  return out;
}

double lp_norm(const BoundaryFunction& f, double p, int nodes) {
  if (!(p >= 1.0)) throw DomainError("p must be at least 1");
  const auto values = f.sample(nodes);
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    // The grid maximum sits below the true one; refine between nodes.
    return std::max(m, quad::circle_max([&](double t) { return std::abs(f(t)); }));
  }
  double sum = 0.0;
  for (const auto& v : values) sum += std::pow(std::abs(v), p);
  return std::pow(sum / nodes, 1.0 / p);
}

BoundaryFunction parse_boundary(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("boundary document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("boundary document must be an object");
  const bool has_f = doc.contains("fourier");
  const bool has_s = doc.contains("samples");
  if (!has_f && !has_s) throw FormatError("boundary document needs \"fourier\" or \"samples\"");

  std::optional<BoundaryFunction> from_f;
  if (has_f) {
    const auto& obj = doc["fourier"];
    if (!obj.is_object()) throw FormatError("\"fourier\" must be an object keyed by integer k");
    std::map<int, cplx> coeffs;
    for (const auto& [key, val] : obj.items()) {
      std::size_t used = 0;
      int k = 0;
      try {
        k = std::stoi(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != key.size()) throw FormatError("fourier key '" + key + "' is not an integer");
      coeffs[k] += read_pair(val, "fourier[" + key + "]");
    }
    from_f = BoundaryFunction::from_fourier(std::move(coeffs));
  }
  if (!has_s) return *from_f;

  const auto& arr = doc["samples"];
  if (!arr.is_array()) throw FormatError("\"samples\" must be an array");
  std::vector<cplx> samples;
  samples.reserve(arr.size());
  for (std::size_t j = 0; j < arr.size(); ++j) samples.push_back(read_pair(arr[j], "samples[" + std::to_string(j) + "]"));
  if (!is_power_of_two(static_cast<long>(samples.size())) || samples.size() < 2) {
    throw FormatError("sample count must be a power of two, at least 2");
  }
  auto from_s = BoundaryFunction::from_samples(std::move(samples));
  if (from_f) {
    const int n = static_cast<int>(from_s.samples()->size());
    if (2 * from_f->order() >= n) throw FormatError("fourier order too high for the given samples");
    for (const auto& [k, v] : from_s.fourier()) {
      if (std::abs(v - from_f->coefficient(k)) > kConsistency) {
        throw FormatError("fourier and samples disagree at k = " + std::to_string(k));
      }
    }
  }
  return from_s;
}

BoundaryFunction load_boundary(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open boundary file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_boundary(buf.str());
}

void write_samples_csv(std::ostream& os, const BoundaryFunction& f, int n) {
  const auto values = f.sample(n);
  os << "t,re,im\n";
  for (int j = 0; j < n; ++j) {
    const double t = 2.0 * std::numbers::pi * j / n;
    os << format_number(t) << ',' << format_number(values[j].real()) << ',' << format_number(values[j].imag())
       << '\n';
  }
}

}  // namespace abharm
