#include "attrmeter/interpolate.hpp"

#include <algorithm>
#include <cmath>

#include "attrmeter/parallel.hpp"
#include "attrmeter/rng.hpp"

namespace attrmeter {

AttributeMatrix gen_noise(const NoiseSpec& spec) {
  if (spec.n_exemplars < 1) throw OutOfRange("gen_noise: n_exemplars must be >= 1");
  if (spec.count < 0) throw OutOfRange("gen_noise: count must be >= 0");
  SplitMix64 rng(spec.seed);
  Eigen::MatrixXd values(spec.n_exemplars, spec.count);
  for (Index c = 0; c < spec.count; ++c) {
    for (Index i = 0; i < spec.n_exemplars; ++i) values(i, c) = rng.next_sign();
  }
  return AttributeMatrix(std::move(values));
}

std::vector<Index> default_grid(Index s2_size) {
  std::vector<Index> grid = {0,
                             (s2_size + 3) / 4,
                             (s2_size + 1) / 2,
                             s2_size,
                             2 * s2_size,
                             4 * s2_size,
                             8 * s2_size,
                             16 * s2_size};
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

namespace {

void check_grid(const std::vector<Index>& grid) {
  if (grid.empty()) throw EmptyCurve("trace_curve: empty grid");
  if (grid.front() != 0) throw OutOfRange("trace_curve: grid must start at 0");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) throw OutOfRange("trace_curve: grid must be strictly increasing");
  }
}

struct TrialStats {
  double mean = 0.0;
  double stddev = 0.0;
};

TrialStats stats_over(const std::vector<double>& xs) {
  TrialStats out;
  const double t = static_cast<double>(xs.size());
  for (double x : xs) out.mean += x;
  out.mean /= t;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - out.mean) * (x - out.mean);
    out.stddev = std::sqrt(ss / (t - 1.0));
  }
  return out;
}

}  // namespace

InterpolationCurve trace_curve(const AttributeMatrix& s1, const AttributeMatrix& s2,
                               const std::vector<Index>& grid, int trials, DistanceKind kind,
                               std::uint64_t seed, const SolverOptions& options) {
  detail::require_compatible(s1, s2, "trace_curve");
  check_grid(grid);
  if (trials < 1) throw OutOfRange("trace_curve: trials must be >= 1");

  InterpolationCurve curve;
  curve.grid = grid;
  curve.trials = trials;
  curve.kind = kind;
  curve.mean_distance.resize(grid.size());
  curve.std_distance.assign(grid.size(), 0.0);

  const Index n = s1.n_exemplars();
  const Index k2 = s2.n_attributes();

  // The representation never changes along the curve, so the expensive per-set
  // state (Gram matrix, step size, holdout column errors) is computed once.
  ConvexHullSolver const* solver = nullptr;
  ConvexHullSolver solver_storage =
      kind == DistanceKind::ConvexHull ? ConvexHullSolver(s1, options) : ConvexHullSolver(s1, {});
  double s2_error_sum = 0.0;
  bool base_converged = true;
  if (kind == DistanceKind::ConvexHull) {
    solver = &solver_storage;
    for (Index c = 0; c < k2; ++c) {
      auto solved = solver->solve(s2.column(c));
      s2_error_sum += solved.error;
      base_converged = base_converged && solved.converged;
    }
    curve.mean_distance[0] = s2_error_sum / static_cast<double>(k2);
  } else {
    curve.mean_distance[0] = delta_jp(s1, s2).distance;
  }

  struct Job {
    std::size_t grid_index;
    int trial;
  };
  std::vector<Job> jobs;
  for (std::size_t gi = 1; gi < grid.size(); ++gi) {
    for (int t = 0; t < trials; ++t) jobs.push_back({gi, t});
  }

  std::vector<std::vector<double>> results(grid.size(), std::vector<double>(trials, 0.0));
  std::vector<char> job_converged(jobs.size(), 1);

  parallel_for(jobs.size(), [&](std::size_t ji) {
    const Job job = jobs[ji];
    const Index noise_count = grid[job.grid_index];
    const AttributeMatrix noise = gen_noise(
        {n, noise_count, derive_stream(seed, static_cast<std::uint64_t>(noise_count),
                                       static_cast<std::uint64_t>(job.trial))});
    double distance = 0.0;
    if (kind == DistanceKind::ConvexHull) {
      double noise_error_sum = 0.0;
      for (Index c = 0; c < noise_count; ++c) {
        auto solved = solver->solve(noise.column(c));
        noise_error_sum += solved.error;
        if (!solved.converged) job_converged[ji] = 0;
      }
      distance = (s2_error_sum + noise_error_sum) / static_cast<double>(k2 + noise_count);
    } else {
      distance = delta_jp(s1, AttributeMatrix::concat(s2, noise)).distance;
    }
    results[job.grid_index][static_cast<std::size_t>(job.trial)] = distance;
  });

  curve.converged =
      base_converged && std::all_of(job_converged.begin(), job_converged.end(),
                                    [](char c) { return c != 0; });

  for (std::size_t gi = 1; gi < grid.size(); ++gi) {
    const TrialStats st = stats_over(results[gi]);
    curve.mean_distance[gi] = st.mean;
    curve.std_distance[gi] = st.stddev;
  }
  return curve;
}

}  // namespace attrmeter
