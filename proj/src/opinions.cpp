#include "fjq/opinions.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <vector>

#include "fjq/text_util.hpp"

namespace fjq {

std::string_view to_string(Distribution kind) {
  switch (kind) {
    case Distribution::kUniform: return "uniform";
    case Distribution::kExponential: return "exponential";
    case Distribution::kPowerLaw: return "power-law";
  }
  return "?";
}

Distribution parse_distribution(std::string_view text) {
  if (text == "uniform") return Distribution::kUniform;
  if (text == "exponential") return Distribution::kExponential;
  if (text == "power-law" || text == "powerlaw") return Distribution::kPowerLaw;
  throw ValidationError("unknown distribution \"" + std::string(text) +
                        "\" (expected uniform, exponential or power-law)");
}

void DistributionSpec::validate() const {
  if (!(x_min > 0.0) || !std::isfinite(x_min)) {
    throw ValidationError("x_min must be positive, got " + std::to_string(x_min));
  }
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw ValidationError("alpha must exceed 1, got " + std::to_string(alpha));
  }
}

std::string DistributionSpec::describe() const {
  return "distribution=" + std::string(to_string(kind)) + " x_min=" + format_double(x_min) +
         " alpha=" + format_double(alpha) + " seed=" + std::to_string(seed);
}

Vector sample_raw(std::size_t n, const DistributionSpec& spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Vector x(static_cast<Eigen::Index>(n));
  const double exponent = -1.0 / (spec.alpha - 1.0);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double u = unit(rng);
    switch (spec.kind) {
      case Distribution::kUniform: x[i] = u; break;
      case Distribution::kExponential: x[i] = spec.x_min - std::log1p(-u); break;
      case Distribution::kPowerLaw: x[i] = spec.x_min * std::pow(1.0 - u, exponent); break;
    }
  }
  return x;
}

Vector generate_opinions(std::size_t n, const DistributionSpec& spec) {
  if (n == 0) throw ValidationError("generate_opinions: n must be at least 1");
  Vector x = sample_raw(n, spec);
  if (spec.kind != Distribution::kUniform) {
    // x / max is exactly 1 at the maximum.
    const double top = x.maxCoeff();
    x /= top;
  }
  return x;
}

double raw_cdf(const DistributionSpec& spec, double x) {
  switch (spec.kind) {
    case Distribution::kUniform: return std::clamp(x, 0.0, 1.0);
    case Distribution::kExponential:
      return x <= spec.x_min ? 0.0 : -std::expm1(-(x - spec.x_min));
    case Distribution::kPowerLaw:
      return x <= spec.x_min ? 0.0 : 1.0 - std::pow(x / spec.x_min, 1.0 - spec.alpha);
  }
  return 0.0;
}

Vector read_opinions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open opinion file " + path);
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    double v = 0.0;
    if (tokens.size() != 1 || !detail::parse_double(tokens[0], v)) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected one number per line");
    }
    values.push_back(v);
  }
  return Eigen::Map<Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

void write_opinions(std::ostream& out, const Vector& s, std::string_view header) {
  if (!header.empty()) out << "# " << header << '\n';
  for (Eigen::Index i = 0; i < s.size(); ++i) out << format_double(s[i]) << '\n';
}

}  // namespace fjq
