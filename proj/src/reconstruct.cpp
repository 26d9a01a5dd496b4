#include "attrmeter/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "attrmeter/parallel.hpp"

namespace attrmeter {

Eigen::VectorXd simplex_project(const Eigen::Ref<const Eigen::VectorXd>& v) {
  const Index n = v.size();
  if (n == 0) throw EmptyVector("simplex_project: empty vector");

  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<double>());

  // Largest prefix whose common shift keeps all its entries positive.
  double cumsum = 0.0;
  double tau = 0.0;
  for (Index i = 0; i < n; ++i) {
    cumsum += u[static_cast<std::size_t>(i)];
    const double candidate = (cumsum - 1.0) / static_cast<double>(i + 1);
    if (u[static_cast<std::size_t>(i)] - candidate > 0.0) tau = candidate;
  }
  return (v.array() - tau).cwiseMax(0.0);
}

double correlation(const Eigen::Ref<const Eigen::VectorXd>& z,
                   const Eigen::Ref<const Eigen::VectorXd>& h) {
  if (z.size() != h.size()) {
    throw ShapeMismatch("correlation: lengths differ (" + std::to_string(z.size()) + " vs " +
                        std::to_string(h.size()) + ")");
  }
  if (z.size() == 0) throw EmptyVector("correlation: empty vectors");
  const double n = static_cast<double>(z.size());
  // For +-1 vectors, agreements = (N + <z,h>) / 2.
  return (n + z.dot(h)) / (2.0 * n);
}

// ---------------------------------------------------------------------------
// ConvexHullSolver

ConvexHullSolver::ConvexHullSolver(const AttributeMatrix& a, const SolverOptions& options)
    : a_(a.values()), options_(options) {
  if (a_.cols() == 0) throw ShapeMismatch("ConvexHullSolver: matrix has no columns");
  gram_.noalias() = a_.transpose() * a_;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram_, Eigen::EigenvaluesOnly);
  const double lambda_max = std::max(eig.eigenvalues().maxCoeff(), 1.0);
  step_ = 1.0 / (2.0 * lambda_max);
}

ConvexHullSolver::ColumnSolve ConvexHullSolver::solve(
    const Eigen::Ref<const Eigen::VectorXd>& z) const {
  const Index j = gram_.rows();
  if (z.size() != a_.rows()) {
    throw ShapeMismatch("ConvexHullSolver::solve: vector length " + std::to_string(z.size()) +
                        " does not match " + std::to_string(a_.rows()) + " exemplars");
  }

  const Eigen::VectorXd c = a_.transpose() * z;

  ColumnSolve out;
  out.converged = false;

  Eigen::VectorXd r = Eigen::VectorXd::Constant(j, 1.0 / static_cast<double>(j));
  Eigen::VectorXd gr = gram_ * r;
  Eigen::VectorXd y = r;
  Eigen::VectorXd gy = gr;
  double theta = 1.0;

  for (int iter = 0; iter < options_.max_iterations; ++iter) {
    const Eigen::VectorXd grad_y = 2.0 * (gy - c);
    Eigen::VectorXd r_next = simplex_project(y - step_ * grad_y);
    Eigen::VectorXd gr_next = gram_ * r_next;

    // KKT residual at the projected point.
    const Eigen::VectorXd grad_next = 2.0 * (gr_next - c);
    const double residual =
        (r_next - simplex_project(r_next - step_ * grad_next)).norm() / step_;
    out.kkt_residual = residual;
    if (residual <= options_.tolerance) {
      r = std::move(r_next);
      out.converged = true;
      break;
    }

    // Adaptive restart: drop momentum when the step points uphill.
    const double theta_next = (1.0 + std::sqrt(1.0 + 4.0 * theta * theta)) / 2.0;
    double momentum = (theta - 1.0) / theta_next;
    if (grad_y.dot(r_next - r) > 0.0) {
      momentum = 0.0;
      theta = 1.0;
    } else {
      theta = theta_next;
    }

    y = r_next + momentum * (r_next - r);
    gy = gr_next + momentum * (gr_next - gr);  // gram * y, by linearity
    r = std::move(r_next);
    gr = std::move(gr_next);
  }

  out.coefficients = r;
  out.error = (a_ * r - z).squaredNorm();
  return out;
}

// ---------------------------------------------------------------------------
// Distances

double attribute_distance(const Eigen::Ref<const Eigen::VectorXd>& z, const AttributeMatrix& a,
                          DistanceKind kind, const SolverOptions& options) {
  if (a.n_attributes() == 0) throw ShapeMismatch("attribute_distance: matrix has no columns");
  if (z.size() != a.n_exemplars()) {
    throw ShapeMismatch("attribute_distance: vector length " + std::to_string(z.size()) +
                        " does not match " + std::to_string(a.n_exemplars()) + " exemplars");
  }
  if (kind == DistanceKind::ConvexHull) {
    return ConvexHullSolver(a, options).solve(z).error;
  }
  // Best single-column 0/1 reconstruction: ||h - z||^2 = 4 * mismatches.
  double best = std::numeric_limits<double>::infinity();
  for (Index j = 0; j < a.n_attributes(); ++j) {
    best = std::min(best, (a.column(j) - z).squaredNorm());
  }
  return best;
}

MatchSet greedy_match(const AttributeMatrix& a, const AttributeMatrix& b) {
  detail::require_compatible(a, b, "greedy_match");
  const Index j_count = a.n_attributes();
  const Index k_count = b.n_attributes();
  const double n = static_cast<double>(a.n_exemplars());

  // All correlations up front; the greedy loop then only scans this table.
  Eigen::MatrixXd rho = ((a.values().transpose() * b.values()).array() + n) / (2.0 * n);

  const Index m = std::min(j_count, k_count);
  std::vector<bool> j_used(static_cast<std::size_t>(j_count), false);
  std::vector<bool> k_used(static_cast<std::size_t>(k_count), false);

  MatchSet out;
  out.pairs.reserve(static_cast<std::size_t>(m));
  for (Index round = 0; round < m; ++round) {
    Index best_j = -1, best_k = -1;
    double best_rho = -1.0;
    for (Index j = 0; j < j_count; ++j) {
      if (j_used[static_cast<std::size_t>(j)]) continue;
      for (Index k = 0; k < k_count; ++k) {
        if (k_used[static_cast<std::size_t>(k)]) continue;
        if (rho(j, k) > best_rho) {  // strict: first hit wins ties, i.e. smallest (j, k)
          best_rho = rho(j, k);
          best_j = j;
          best_k = k;
        }
      }
    }
    j_used[static_cast<std::size_t>(best_j)] = true;
    k_used[static_cast<std::size_t>(best_k)] = true;
    out.pairs.push_back({best_j, best_k, best_rho});
  }
  return out;
}

ReconstructionResult delta_cvx(const AttributeMatrix& a, const AttributeMatrix& b,
                               const SolverOptions& options) {
  detail::require_compatible(a, b, "delta_cvx");
  const ConvexHullSolver solver(a, options);
  const Index k_count = b.n_attributes();

  ReconstructionResult out;
  out.kind = DistanceKind::ConvexHull;
  out.coefficients.resize(a.n_attributes(), k_count);
  out.per_column_errors.resize(static_cast<std::size_t>(k_count));

  std::vector<double> kkt(static_cast<std::size_t>(k_count));
  std::vector<char> ok(static_cast<std::size_t>(k_count));
  parallel_for(static_cast<std::size_t>(k_count), [&](std::size_t k) {
    auto solved = solver.solve(b.column(static_cast<Index>(k)));
    out.coefficients.col(static_cast<Index>(k)) = solved.coefficients;
    out.per_column_errors[k] = solved.error;
    kkt[k] = solved.kkt_residual;
    ok[k] = solved.converged ? 1 : 0;
  });

  out.converged = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
  out.max_kkt_residual = *std::max_element(kkt.begin(), kkt.end());
  out.distance = std::accumulate(out.per_column_errors.begin(), out.per_column_errors.end(), 0.0) /
                 static_cast<double>(k_count);
  return out;
}

ReconstructionResult delta_jp(const AttributeMatrix& a, const AttributeMatrix& b) {
  detail::require_compatible(a, b, "delta_jp");
  const Index k_count = b.n_attributes();
  const double n = static_cast<double>(a.n_exemplars());

  const MatchSet match = greedy_match(a, b);

  ReconstructionResult out;
  out.kind = DistanceKind::JointL0;
  out.coefficients = Eigen::MatrixXd::Zero(a.n_attributes(), k_count);
  // Unmatched discovered columns keep an all-zero coefficient column and are
  // reconstructed by the zero vector, costing ||z_k||^2 = N each.
  out.per_column_errors.assign(static_cast<std::size_t>(k_count), n);
  for (const auto& pair : match.pairs) {
    out.coefficients(pair.meaningful, pair.discovered) = 1.0;
    const double mismatches = std::round((1.0 - pair.correlation) * n);
    out.per_column_errors[static_cast<std::size_t>(pair.discovered)] = 4.0 * mismatches;
  }
  out.distance = std::accumulate(out.per_column_errors.begin(), out.per_column_errors.end(), 0.0) /
                 static_cast<double>(k_count);
  return out;
}

}  // namespace attrmeter
