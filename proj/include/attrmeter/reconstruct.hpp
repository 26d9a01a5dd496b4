#pragma once

#include <Eigen/Dense>

#include <vector>

#include "attrmeter/core.hpp"

namespace attrmeter {

struct SolverOptions {
  double tolerance = 1e-9;    // projected-gradient norm at which a solve counts as converged
  int max_iterations = 10000; // iteration cap; hitting it flags the result instead of throwing
};

/// Distance of a discovered set to a meaningful set, together with the
/// coefficient matrix that achieved it. distance is the mean of
/// per_column_errors. For ConvexHull every coefficient column lies on the
/// probability simplex; for JointL0 the coefficients are 0/1 with at most one
/// nonzero per row and per column.
struct ReconstructionResult {
  double distance = 0.0;
  Eigen::MatrixXd coefficients;       // J x K
  DistanceKind kind = DistanceKind::ConvexHull;
  std::vector<double> per_column_errors;
  bool converged = true;              // false when any column hit the iteration cap
  double max_kkt_residual = 0.0;      // largest projected-gradient norm over columns
};

/// One-to-one matching between meaningful and discovered columns, in
/// selection order (correlations nonincreasing).
struct MatchSet {
  struct Pair {
    Index meaningful;   // j, column of A
    Index discovered;   // k, column of B
    double correlation; // fraction of agreeing exemplars
  };
  std::vector<Pair> pairs;
};

/// Euclidean projection of v onto the probability simplex
/// { r : r_i >= 0, sum r_i = 1 }, by the sort-and-threshold rule.
Eigen::VectorXd simplex_project(const Eigen::Ref<const Eigen::VectorXd>& v);

/// Fraction of positions where z and h agree, in [0,1].
double correlation(const Eigen::Ref<const Eigen::VectorXd>& z,
                   const Eigen::Ref<const Eigen::VectorXd>& h);

/// Squared reconstruction error of a single attribute z from the columns of
/// a. ConvexHull minimizes ||a r - z||^2 over the simplex; JointL0 picks the
/// best single column.
double attribute_distance(const Eigen::Ref<const Eigen::VectorXd>& z, const AttributeMatrix& a,
                          DistanceKind kind, const SolverOptions& options = {});

/// Greedily pairs the highest-correlation (meaningful, discovered) columns
/// until min(J, K) pairs are chosen. Ties break to the lexicographically
/// smallest (j, k). Deterministic.
MatchSet greedy_match(const AttributeMatrix& a, const AttributeMatrix& b);

/// Average squared distance of b's columns to the convex hull of a's columns.
ReconstructionResult delta_cvx(const AttributeMatrix& a, const AttributeMatrix& b,
                               const SolverOptions& options = {});

/// Average squared reconstruction error under the one-to-one 0/1 coefficient
/// structure built from greedy_match. Columns of b left unmatched (K > J) are
/// reconstructed by the zero vector and contribute N each.
ReconstructionResult delta_jp(const AttributeMatrix& a, const AttributeMatrix& b);

/// Simplex-constrained least-squares solver with state precomputed for a
/// fixed meaningful matrix, so many right-hand sides can be solved cheaply
/// (interpolation curves solve thousands of columns against the same a).
///
/// Accelerated projected gradient (FISTA with adaptive restart) on
/// f(r) = ||a r - z||^2, step 1/(2 lambda_max(a^T a)), exact sort-based
/// projection. A solve stops once the projected-gradient norm
/// ||r - P(r - t grad f(r))|| / t drops to options.tolerance, or at the
/// iteration cap, in which case it is flagged unconverged.
class ConvexHullSolver {
 public:
  explicit ConvexHullSolver(const AttributeMatrix& a, const SolverOptions& options = {});

  struct ColumnSolve {
    Eigen::VectorXd coefficients;
    double error = 0.0;        // ||a r - z||^2 at the returned point
    double kkt_residual = 0.0; // projected-gradient norm at the returned point
    bool converged = true;
  };

  /// Thread-safe: solves are independent given the precomputed state.
  ColumnSolve solve(const Eigen::Ref<const Eigen::VectorXd>& z) const;

  Index n_exemplars() const { return a_.rows(); }
  Index n_attributes() const { return a_.cols(); }

 private:
  Eigen::MatrixXd a_;     // N x J copy of the meaningful matrix
  Eigen::MatrixXd gram_;  // a^T a
  double step_ = 0.0;     // 1 / (2 lambda_max(gram))
  SolverOptions options_;
};

}  // namespace attrmeter
