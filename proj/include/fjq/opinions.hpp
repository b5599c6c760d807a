#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fjq/types.hpp"

namespace fjq {

enum class Distribution { kUniform, kExponential, kPowerLaw };

std::string_view to_string(Distribution kind);
Distribution parse_distribution(std::string_view text);

struct DistributionSpec {
  Distribution kind = Distribution::kUniform;
  double x_min = 1.0;
  double alpha = 2.5;
  std::uint64_t seed = 0;

  // Throws ValidationError unless x_min > 0 and alpha > 1.
  void validate() const;
  // "distribution=power-law x_min=1 alpha=2.5 seed=7"
  std::string describe() const;
};

// Samples before normalization, by inverse CDF on u ~ U[0,1):
//   uniform      x = u
//   exponential  x = x_min - ln(1 - u)                 density e^{x_min - x}, x >= x_min
//   power-law    x = x_min (1 - u)^{-1/(alpha - 1)}     density (alpha-1) x_min^{alpha-1} x^{-alpha}
Vector sample_raw(std::size_t n, const DistributionSpec& spec);

// Internal opinions in [0,1]: uniform samples as is, the other two divided by
// their maximum so at least one entry is exactly 1. Same (n, spec) always
// yields the same vector.
Vector generate_opinions(std::size_t n, const DistributionSpec& spec);

// Analytic CDF of the raw (pre-normalization) distribution.
double raw_cdf(const DistributionSpec& spec, double x);

// One value per line; '#' lines are comments. Throws ParseError.
Vector read_opinions(const std::string& path);
void write_opinions(std::ostream& out, const Vector& s, std::string_view header = {});

}  // namespace fjq
