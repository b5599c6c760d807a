#include "fjq/exact.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include <Eigen/Cholesky>

namespace fjq {

namespace {

void check_guard(const Graph& g, std::size_t guard, const char* what) {
  if (g.num_nodes() > guard) {
    throw GuardError(std::string(what) + ": n=" + std::to_string(g.num_nodes()) +
                     " exceeds the dense guard of " + std::to_string(guard) +
                     " nodes; use the approximate method (--method approx) instead");
  }
}

// Dense I+L assembled straight from the edge list.
Eigen::MatrixXd dense_shifted_laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  Eigen::MatrixXd t = Eigen::MatrixXd::Identity(n, n);
  for (const Edge& e : g.edges()) {
    t(e.head, e.head) += e.weight;
    t(e.tail, e.tail) += e.weight;
    t(e.head, e.tail) -= e.weight;
    t(e.tail, e.head) -= e.weight;
  }
  return t;
}

}  // namespace

struct DenseEquilibrium::Factor {
  explicit Factor(Eigen::MatrixXd m) : matrix(std::move(m)), llt(matrix) {}
  Eigen::MatrixXd matrix;
  // Factorizes in place on `matrix`.
  Eigen::LLT<Eigen::Ref<Eigen::MatrixXd>> llt;
};

DenseEquilibrium::DenseEquilibrium(const Graph& g, std::size_t guard) {
  check_guard(g, guard, "dense equilibrium");
  factor_ = std::make_unique<Factor>(dense_shifted_laplacian(g));
  if (factor_->llt.info() != Eigen::Success) throw Error("Cholesky factorization of I+L failed");
}

DenseEquilibrium::~DenseEquilibrium() = default;
DenseEquilibrium::DenseEquilibrium(DenseEquilibrium&&) noexcept = default;
DenseEquilibrium& DenseEquilibrium::operator=(DenseEquilibrium&&) noexcept = default;

Vector DenseEquilibrium::solve(const Vector& s) const {
  if (s.size() != factor_->matrix.rows()) {
    throw ValidationError("dense solve: vector length " + std::to_string(s.size()) +
                          " does not match node count " + std::to_string(factor_->matrix.rows()));
  }
  return factor_->llt.solve(s);
}

ForestMatrix forest_matrix_dense(const Graph& g, std::size_t guard) {
  check_guard(g, guard, "forest_matrix_dense");
  Eigen::MatrixXd t = dense_shifted_laplacian(g);
  Eigen::LLT<Eigen::Ref<Eigen::MatrixXd>> llt(t);
  if (llt.info() != Eigen::Success) throw Error("Cholesky factorization of I+L failed");
  const auto n = static_cast<Eigen::Index>(g.num_nodes());
  ForestMatrix out;
  out.omega = llt.solve(Eigen::MatrixXd::Identity(n, n));
  return out;
}

void validate_opinions(const Graph& g, const Vector& s) {
  if (static_cast<std::size_t>(s.size()) != g.num_nodes()) {
    throw ValidationError("opinion vector has length " + std::to_string(s.size()) +
                          " but the graph has " + std::to_string(g.num_nodes()) + " nodes");
  }
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (!(s[i] >= 0.0 && s[i] <= 1.0)) {
      throw ValidationError("internal opinion s[" + std::to_string(i) + "] = " +
                            std::to_string(s[i]) + " is outside [0, 1]");
    }
  }
}

QuantityReport quantities_from_equilibrium(const Graph& g, const Vector& s, const Vector& z) {
  const Vector lz = laplacian_apply(g, z);
  const Vector llz = laplacian_apply(g, lz);
  const Vector z_bar = z.array() - z.mean();

  QuantityReport r;
  r.n = g.num_nodes();
  r.m = g.num_edges();
  r.values.internal_conflict = z.dot(llz);
  r.values.disagreement = z.dot(lz);
  r.values.polarization = z_bar.squaredNorm();
  r.values.controversy = z.squaredNorm();
  r.values.dc_index = s.dot(z);
  r.dc_index_check = r.values.disagreement + r.values.controversy;
  return r;
}

QuantityReport exact_quantities(const Graph& g, const DenseEquilibrium& solver, const Vector& s,
                                Vector* equilibrium) {
  validate_opinions(g, s);
  if (!is_connected(g)) {
    throw ValidationError("graph is disconnected; extract the largest connected component first");
  }
  const auto start = std::chrono::steady_clock::now();
  Vector z = solver.solve(s);
  QuantityReport r = quantities_from_equilibrium(g, s, z);
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.method = "exact";
  if (equilibrium != nullptr) *equilibrium = std::move(z);
  return r;
}

QuantityReport exact_quantities(const Graph& g, const Vector& s, std::size_t guard,
                                Vector* equilibrium) {
  check_guard(g, guard, "exact_quantities");
  validate_opinions(g, s);
  if (!is_connected(g)) {
    throw ValidationError("graph is disconnected; extract the largest connected component first");
  }
  const auto start = std::chrono::steady_clock::now();
  DenseEquilibrium solver(g, guard);
  QuantityReport r = exact_quantities(g, solver, s, equilibrium);
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace fjq
