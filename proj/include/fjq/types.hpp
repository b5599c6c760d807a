#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace fjq {

using NodeId = std::uint32_t;
using Vector = Eigen::VectorXd;

// Base class for every error raised by the library. The CLI maps each
// subclass onto a distinct process exit code (see exit_code()).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual int exit_code() const { return 1; }
};

// Malformed input text (edge lists, opinion files, bench records).
class ParseError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 2; }
};

// Inputs that parse but violate a precondition: non-positive weights,
// opinions outside [0,1], length mismatches, disconnected graphs.
class ValidationError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 3; }
};

// Iterative routine hit its cap or stagnated. Carries the best iterate and
// the error bound it achieved.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, Vector best_iterate,
                   int iterations, double achieved_bound)
      : Error(what),
        best_iterate_(std::move(best_iterate)),
        iterations_(iterations),
        achieved_bound_(achieved_bound) {}

  int exit_code() const override { return 4; }

  const Vector& best_iterate() const { return best_iterate_; }
  int iterations() const { return iterations_; }
  double achieved_bound() const { return achieved_bound_; }

 private:
  Vector best_iterate_;
  int iterations_;
  double achieved_bound_;
};

// A size guard refused the request (dense exact path, forest enumeration).
class GuardError : public Error {
 public:
  using Error::Error;
  int exit_code() const override { return 5; }
};

}  // namespace fjq
