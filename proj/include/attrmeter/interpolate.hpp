#pragma once

#include <cstdint>
#include <vector>

#include "attrmeter/core.hpp"
#include "attrmeter/reconstruct.hpp"

namespace attrmeter {

struct NoiseSpec {
  Index n_exemplars = 0;
  Index count = 0;
  std::uint64_t seed = 0;
};

/// Average distance of (holdout + n noise attributes) to the representation,
/// as a function of the injected noise count n.
struct InterpolationCurve {
  std::vector<Index> grid;           // strictly increasing, starts at 0
  std::vector<double> mean_distance; // per grid point, averaged over trials
  std::vector<double> std_distance;  // sample std over trials (0 when trials < 2)
  int trials = 0;
  DistanceKind kind = DistanceKind::ConvexHull;
  bool converged = true;             // false when any underlying solve hit the iteration cap
};

/// count columns of independent fair +-1 entries. Same spec => bit-identical
/// output (entries are drawn row-major per column from SplitMix64(seed)).
AttributeMatrix gen_noise(const NoiseSpec& spec);

/// Traces delta_kind(s2 + noise_n_t, s1) over the grid, with fresh noise per
/// (grid point, trial) drawn from the substream derive_stream(seed, n, t).
/// At n = 0 all trials coincide, so the point is computed once with std 0.
InterpolationCurve trace_curve(const AttributeMatrix& s1, const AttributeMatrix& s2,
                               const std::vector<Index>& grid, int trials, DistanceKind kind,
                               std::uint64_t seed, const SolverOptions& options = {});

/// The default noise grid for a holdout of the given size:
/// {0, ceil(s/4), ceil(s/2), s, 2s, 4s, 8s, 16s}, deduplicated.
std::vector<Index> default_grid(Index s2_size);

}  // namespace attrmeter
