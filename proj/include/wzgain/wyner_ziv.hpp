#pragma once

// Grid-search oracle for the one-message rate-distortion trade-off with
// decoder side information, over arbitrary finite alphabets.
//
// Setup: a source pair (X, Y) ~ p_XY, a per-letter distortion d(x, xhat)
// (rows = source letters, columns = reconstruction letters, +infinity
// forbids a pairing), and a target average distortion D.  The quantity
// computed is
//
//     rate(D) = min I(X; U | Y)
//
// over auxiliary channels p_{U|X} with |U| = |X| + 1 and deterministic
// decoders xhat = g(u, y), subject to E[d(X, g(U,Y))] <= D.  The auxiliary
// alphabet size |X| + 1 is sufficient for the minimum; the decoder can be
// optimized in closed form for each candidate channel, so the search space
// is the channel simplex product alone.
//
// The search enumerates each row of p_{U|X} over the probability simplex at
// a given resolution, then locally refines around the best grid point with
// successively halved steps.  Two kernels are provided: an OpenMP-parallel
// one (used by default) and a serial reference kept for testing and
// benchmarking.  Their enumeration and reduction logic are written
// independently, but they share the per-candidate scoring routine, so the
// results are bit-identical and any disagreement pinpoints a bug in the
// parallel decomposition.

#include <cstddef>
#include <vector>

#include "wzgain/types.hpp"

namespace wzgain {

// Search granularity for the oracle.
struct GridSpec {
  // Each channel row ranges over compositions (k_1,...,k_m) of `resolution`,
  // i.e. probabilities k_i / resolution.  Must be at least 2.
  int resolution = 64;
  // Number of local refinement rounds around the best grid point; each round
  // halves the step.  Must be nonnegative.
  int refine_rounds = 3;

  GridSpec() = default;
  GridSpec(int resolution, int refine_rounds);
};

// Result of the oracle search.
struct WzSolution {
  double rate = 0.0;        // I(X; U | Y) in bits at the best channel found
  double distortion = 0.0;  // achieved E[d(X, g(U,Y))] (<= target)
  // Best p_{U|X} found: rows = |X|, cols = |X| + 1.  The placeholder default
  // keeps the struct default-constructible.
  Channel aux_channel = Channel(1, 1, {1.0});
  // Deterministic decoder: decoder[u * ny + y] = reconstruction index.
  std::vector<int> decoder;
};

// Computes the decoder that minimizes average distortion for a fixed joint
// over (X, Y, U) given as a 3-axis table with dimensions {|X|, |Y|, |U|}.
// For each (u, y) pair it selects argmin_xhat sum_x p(x,y,u) d(x, xhat),
// breaking ties toward the lowest reconstruction index; (u, y) cells with
// zero mass also get the lowest index.  Throws InfeasibleDistortionError if
// some positive-mass (u, y) cell has every reconstruction at +infinity.
std::vector<int> optimal_decoder(const MultiwayPmf& joint_xyu, const DistortionMatrix& d);

// Runs the grid search (OpenMP-parallel over the outermost row index).
// Throws InfeasibleDistortionError when even the best unconstrained decoder
// (achievable with U = X) cannot reach the distortion target, and
// std::invalid_argument for shape mismatches or a negative target.
WzSolution wz_rate_oracle(const JointPmf& p_xy, const DistortionMatrix& d, double target_distortion,
                          const GridSpec& grid = GridSpec());

// Serial reference implementation of the same search; plain loops, no
// OpenMP.  Kept deliberately independent of the parallel kernel so the two
// can cross-check each other in tests and benchmarks.
WzSolution wz_rate_oracle_serial(const JointPmf& p_xy, const DistortionMatrix& d,
                                 double target_distortion, const GridSpec& grid = GridSpec());

// Sum-rate reduction implied by the oracle: H(X|Y) + H(Y|X) - rate.  This is
// the quantity the exact binary-erasure solver computes analytically, so the
// two are directly comparable.
double rho1_oracle(const JointPmf& p_xy, const DistortionMatrix& d, double target_distortion,
                   const GridSpec& grid = GridSpec());

}  // namespace wzgain
