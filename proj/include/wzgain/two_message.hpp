#pragma once

// Achievable two-message rate-distortion points from explicit auxiliary
// channels, and the concrete binary-erasure scheme that demonstrates an
// unbounded one-message/two-message sum-rate ratio.
//
// Protocol shape: the side-information terminal first describes Y through
// V1 (rate R1 >= I(Y;V1|X)); the source terminal replies with V2 drawn from
// p_{V2|X,V1} (rate R2 >= I(X;V2|Y,V1)); the decoder at the side-information
// terminal outputs xhat = g(V1, V2, Y).  Any such triple gives an achievable
// point, so everything here is an upper bound certified by construction.
//
// The concrete scheme for the symmetric binary source with erasure
// distortion: V1 is Y pushed through a binary symmetric channel with
// crossover q, and V2 either reveals X or erases it, with the reveal
// probability depending on whether V1 agrees with X.  Its rates and
// distortion have closed forms that stay stable at crossover probabilities
// far below the underflow range of naive evaluation.

#include <optional>
#include <vector>

#include "wzgain/binary_erasure.hpp"
#include "wzgain/types.hpp"

namespace wzgain {

// Explicit two-message protocol over finite alphabets.
struct TwoMessageScheme {
  Channel v1_given_y;    // rows indexed by y, columns by v1
  // Rows indexed by the pair (x, v1) flattened x-major — row = x * |V1| + v1
  // — columns by v2.
  Channel v2_given_xv1;
  // Deterministic decoder: decoder[(v1 * |V2| + v2) * ny + y] is the
  // reconstruction index.
  std::vector<int> decoder;
};

// Parameters of the binary-erasure scheme: source crossover p, first-message
// channel crossover q, and reveal/erase mix alpha (probability that V2
// erases X when V1 agrees with it; disagreeing pairs always erase).
struct ErasureSchemeParams {
  double p;
  double q;
  double alpha;

  ErasureSchemeParams(double p, double q, double alpha);
};

// One achievable operating point.
struct TwoMessagePoint {
  double r1 = 0.0;          // I(Y;V1|X) in bits
  double r2 = 0.0;          // I(X;V2|Y,V1) in bits
  double distortion = 0.0;  // E[d(X, g(V1,V2,Y))]
  // One-message sum rate divided by r1 + r2; present only when a one-message
  // reference was available (and the denominator is positive).
  std::optional<double> sum_ratio;
  // r1 / r2, with the conventions 0/0 = 0 and positive/0 = +infinity.
  double split_ratio = 0.0;
};

// Evaluates a scheme against a source and distortion by materializing the
// joint over (X, Y, V1, V2).  An infinite expected distortion is returned as
// +infinity rather than thrown, so misconfigured schemes stay visible.  When
// `rsum1_reference` (a one-message sum rate at comparable distortion) is
// supplied, sum_ratio is filled in.  Shape mismatches or an out-of-range
// decoder entry throw std::invalid_argument.
TwoMessagePoint evaluate_scheme(const JointPmf& p_xy, const TwoMessageScheme& scheme,
                                const DistortionMatrix& d,
                                std::optional<double> rsum1_reference = {});

// The binary-erasure scheme: V1 = BSC(q) applied to Y; V2 over (0, e, 1)
// with rows (x=0,v1=0) -> (1-alpha, alpha, 0), (x=0,v1=1) -> (0, 1, 0),
// (x=1,v1=0) -> (0, 1, 0), (x=1,v1=1) -> (0, alpha, 1-alpha); the decoder
// simply outputs v2.
TwoMessageScheme two_round_erasure_scheme(const ErasureSchemeParams& params);

// Closed-form evaluation of the same scheme on the symmetric binary source
// with crossover p:
//     R1 = h(p) - C2(p, q)
//     R2 = 2 h(p) - C(p, q, alpha, 1) - R1
//     D  = eta(p, q, alpha, 1)
// sum_ratio is filled against the one-message sum rate (1 - D) h(p).  Exact
// cancellation-aware entropy primitives keep these finite and accurate even
// at p = 1e-200.
TwoMessagePoint two_round_erasure_point(const ErasureSchemeParams& params);

// Cross-check: closed forms versus evaluate_scheme on the materialized
// joint, true when R1, R2, D all agree within `tol`.
bool erasure_point_matches_direct(const ErasureSchemeParams& params, double tol = 1e-9);

// h(slope * p) / h(p): tends to `slope` as p -> 0, confirming numerically
// that entropy ratios follow first derivatives at the origin.  Requires
// slope > 0, p in (0, 0.5), slope * p < 1.
double entropy_ratio_check(double slope, double p);

// A parameter choice together with its achieved operating point.
struct RatioWitness {
  ErasureSchemeParams params;
  TwoMessagePoint point;
};

// Finds scheme parameters whose one-message/two-message sum-rate ratio
// exceeds L while the rate split R1/R2 stays below 1/L.  Uses
// q = 1/(L + 3) unless `q` is given (the limit ratio as p -> 0 is
// (1-q)/q, so the default leaves headroom above L), fixes `alpha` (0.5 by
// default), and descends p through decades 1e-1 .. 1e-300, returning the
// first (largest-p) success.  Throws SearchExhaustedError, reporting the
// best ratios achieved, when no decade qualifies.
RatioWitness find_ratio_witness(double L, std::optional<double> q = {}, double alpha = 0.5);

}  // namespace wzgain
