#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include <Eigen/Core>

#include "fjq/graph.hpp"
#include "fjq/report.hpp"
#include "fjq/types.hpp"

namespace fjq {

inline constexpr std::size_t kDefaultDenseGuard = 20000;
inline constexpr std::size_t kForestEnumerationCap = 10;

// Omega = (I+L)^{-1}. Symmetric positive definite and doubly stochastic;
// entries are strictly positive on connected graphs.
struct ForestMatrix {
  Eigen::MatrixXd omega;
};

// Dense (I+L)^{-1}. Needs about 2 n^2 doubles. Throws GuardError above
// `guard` nodes.
ForestMatrix forest_matrix_dense(const Graph& g, std::size_t guard = kDefaultDenseGuard);

// Holds a dense Cholesky factorization of I+L for repeated equilibrium
// solves z = (I+L)^{-1} s.
class DenseEquilibrium {
 public:
  // Throws GuardError above `guard` nodes.
  explicit DenseEquilibrium(const Graph& g, std::size_t guard = kDefaultDenseGuard);
  ~DenseEquilibrium();
  DenseEquilibrium(DenseEquilibrium&&) noexcept;
  DenseEquilibrium& operator=(DenseEquilibrium&&) noexcept;

  Vector solve(const Vector& s) const;

 private:
  struct Factor;
  std::unique_ptr<Factor> factor_;
};

// Totals over spanning rooted forests.
//
// total = eps(Gamma), the weight of all spanning rooted forests; pair(i, j)
// = eps(Gamma_ij), the weight of those in which j lies in the tree rooted at
// i. For unit-weight graphs the integer counts are exact and filled in;
// otherwise only the floating-point weights are.
struct ForestCensus {
  std::size_t n = 0;
  bool integral = false;
  std::uint64_t total_count = 0;
  std::vector<std::uint64_t> pair_count;  // row-major n x n
  double total_weight = 0.0;
  std::vector<double> pair_weight;  // row-major n x n

  double total() const { return integral ? static_cast<double>(total_count) : total_weight; }
  double pair(std::size_t i, std::size_t j) const {
    return integral ? static_cast<double>(pair_count[i * n + j]) : pair_weight[i * n + j];
  }
  // eps(Gamma_ij) / eps(Gamma)
  double omega(std::size_t i, std::size_t j) const { return pair(i, j) / total(); }
};

// Brute-force enumeration of acyclic edge subsets. Throws GuardError when
// n exceeds `cap` (capped at kForestEnumerationCap).
ForestCensus enumerate_rooted_forests(const Graph& g, std::size_t cap = kForestEnumerationCap);

// Evaluates the five quantities from an equilibrium vector z:
//   C_I = z^T L^2 z, D = z^T L z, P = zbar^T zbar, C = z^T z, I_dc = s^T z,
// and records D + C in dc_index_check. Leaves method, timing and solver
// fields for the caller.
QuantityReport quantities_from_equilibrium(const Graph& g, const Vector& s, const Vector& z);

// Checks s has length n and entries in [0, 1]; throws ValidationError.
void validate_opinions(const Graph& g, const Vector& s);

// Ground-truth quantities via a dense factorization of I+L. Requires a
// connected graph and s in [0,1]^n; throws ValidationError otherwise and
// GuardError above `guard` nodes.
QuantityReport exact_quantities(const Graph& g, const Vector& s,
                                std::size_t guard = kDefaultDenseGuard,
                                Vector* equilibrium = nullptr);

// Same, reusing an existing factorization.
QuantityReport exact_quantities(const Graph& g, const DenseEquilibrium& solver, const Vector& s,
                                Vector* equilibrium = nullptr);

}  // namespace fjq
