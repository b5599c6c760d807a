#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "fjq/opinions.hpp"
#include "support.hpp"

namespace fjq {
namespace {

DistributionSpec spec_of(Distribution kind, std::uint64_t seed = 1) {
  DistributionSpec s;
  s.kind = kind;
  s.seed = seed;
  return s;
}

// Analytic CDFs written out independently of the library.
double exponential_cdf(double x_min, double x) { return x < x_min ? 0.0 : 1.0 - std::exp(-(x - x_min)); }
double power_law_cdf(double x_min, double alpha, double x) {
  return x < x_min ? 0.0 : 1.0 - std::pow(x / x_min, 1.0 - alpha);
}

TEST(Opinions, UniformRangeAndMean) {
  Vector s = generate_opinions(100000, spec_of(Distribution::kUniform, 3));
  EXPECT_GE(s.minCoeff(), 0.0);
  EXPECT_LE(s.maxCoeff(), 1.0);
  EXPECT_LT(std::abs(s.mean() - 0.5), 0.02);
}

TEST(Opinions, PowerLawMaxIsExactlyOne) {
  Vector s = generate_opinions(10000, spec_of(Distribution::kPowerLaw, 4));
  EXPECT_EQ(s.maxCoeff(), 1.0);
  EXPECT_GT(s.minCoeff(), 0.0);
}

TEST(Opinions, ExponentialSingleValueIsOne) {
  Vector s = generate_opinions(1, spec_of(Distribution::kExponential, 9));
  ASSERT_EQ(s.size(), 1);
  EXPECT_EQ(s[0], 1.0);
}

TEST(Opinions, Reproducible) {
  for (Distribution k : {Distribution::kUniform, Distribution::kExponential, Distribution::kPowerLaw}) {
    EXPECT_EQ(generate_opinions(500, spec_of(k, 42)), generate_opinions(500, spec_of(k, 42)));
    EXPECT_NE(generate_opinions(500, spec_of(k, 42)), generate_opinions(500, spec_of(k, 43)));
  }
}

TEST(Opinions, InverseCdfKolmogorovSmirnov) {
  DistributionSpec exp = spec_of(Distribution::kExponential, 11);
  const double d_exp =
      testing::ks_statistic(sample_raw(100000, exp), [&](double x) { return exponential_cdf(exp.x_min, x); });
  EXPECT_LT(d_exp, 0.02);

  DistributionSpec pl = spec_of(Distribution::kPowerLaw, 12);
  const double d_pl = testing::ks_statistic(sample_raw(100000, pl),
                                            [&](double x) { return power_law_cdf(pl.x_min, pl.alpha, x); });
  EXPECT_LT(d_pl, 0.02);

  // Non-default parameters.
  DistributionSpec pl3 = spec_of(Distribution::kPowerLaw, 13);
  pl3.x_min = 0.5;
  pl3.alpha = 3.2;
  const double d_pl3 = testing::ks_statistic(sample_raw(100000, pl3),
                                             [&](double x) { return power_law_cdf(pl3.x_min, pl3.alpha, x); });
  EXPECT_LT(d_pl3, 0.02);
}

TEST(Opinions, LibraryCdfMatchesAnalytic) {
  DistributionSpec pl = spec_of(Distribution::kPowerLaw);
  DistributionSpec exp = spec_of(Distribution::kExponential);
  for (double x : {0.5, 1.0, 1.3, 2.0, 10.0, 1e3}) {
    EXPECT_NEAR(raw_cdf(pl, x), power_law_cdf(1.0, 2.5, x), 1e-15);
    EXPECT_NEAR(raw_cdf(exp, x), exponential_cdf(1.0, x), 1e-15);
  }
}

TEST(Opinions, InvalidSpecs) {
  DistributionSpec bad = spec_of(Distribution::kPowerLaw);
  bad.alpha = 1.0;
  EXPECT_THROW(generate_opinions(10, bad), ValidationError);
  bad.alpha = 2.5;
  bad.x_min = 0.0;
  EXPECT_THROW(generate_opinions(10, bad), ValidationError);
  EXPECT_THROW(generate_opinions(0, spec_of(Distribution::kUniform)), ValidationError);
  EXPECT_THROW(parse_distribution("gaussian"), ValidationError);
  EXPECT_EQ(parse_distribution("power-law"), Distribution::kPowerLaw);
}

TEST(Opinions, WriteReadRoundTrip) {
  Vector s = generate_opinions(200, spec_of(Distribution::kExponential, 77));
  const auto path = std::filesystem::temp_directory_path() / "fjq_opinions_roundtrip.txt";
  {
    std::ofstream f(path);
    write_opinions(f, s, spec_of(Distribution::kExponential, 77).describe());
  }
  EXPECT_EQ(read_opinions(path.string()), s);
  std::filesystem::remove(path);
}

TEST(Opinions, ReadRejectsGarbage) {
  const auto path = std::filesystem::temp_directory_path() / "fjq_opinions_garbage.txt";
  {
    std::ofstream f(path);
    f << "0.1\nabc\n";
  }
  EXPECT_THROW(read_opinions(path.string()), ParseError);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace fjq
