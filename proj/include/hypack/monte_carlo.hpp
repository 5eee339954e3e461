#pragma once

// Seeded Monte Carlo volumes of compact convex polytopes in the Klein model.
// Samples are drawn uniformly in the affine bounding box of the polytope and
// weighted by the model's volume density (1 - |y|^2)^(-(n+1)/2). The sample
// stream is split into fixed batches with per-batch seeds, so the estimate
// does not depend on the number of worker threads.

#include "hypack/lorentz.hpp"

#include <cstdint>
#include <span>

namespace hypack {

struct MonteCarloOptions {
  std::uint64_t samples = 10'000'000;
  std::uint64_t seed = 42;
  /// 0 selects HYPACK_THREADS or the hardware concurrency.
  unsigned threads = 0;
};

struct MonteCarloEstimate {
  double volume = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t accepted = 0;

  double relative_error() const { return volume > 0 ? std_error / volume : 0.0; }
};

/// Worker count: HYPACK_THREADS when set to a positive integer, else the
/// hardware concurrency (at least 1).
unsigned worker_threads();

/// Volume of { x : every halfspace contains x } given points whose affine
/// hull box covers it (typically its vertices). All points must lie in the
/// x0 > 0 chart and the region must be bounded away from the absolute.
MonteCarloEstimate monte_carlo_volume(std::span<const Halfspace> halfspaces,
                                      std::span<const LorentzVector> hull_points,
                                      const MonteCarloOptions& options = {});

/// Truncated characteristic orthoscheme P0P1P2P3B1 cut by pol(B1).
MonteCarloEstimate mc_truncated_orthoscheme4_volume(double p, const MonteCarloOptions& options = {});

/// The base cell Q0Q1Q2Q3 inside a 3-dimensional model of pol(B1).
MonteCarloEstimate mc_base_orthoscheme_volume(double p, const MonteCarloOptions& options = {});

}  // namespace hypack
