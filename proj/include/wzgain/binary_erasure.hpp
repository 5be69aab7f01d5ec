#pragma once

#include "wzgain/types.hpp"

namespace wzgain {

// Full-support joint pmf of a binary pair (X, Y); x indexes rows, y columns.
// The exact erasure solver requires strictly positive entries; degenerate
// supports belong to the general grid oracle instead.
struct BinaryJoint {
  double p00, p01, p10, p11;

  BinaryJoint(double p00, double p01, double p10, double p11);

  double px0() const { return p00 + p01; }
  double px1() const { return p10 + p11; }
  double py0() const { return p00 + p10; }
  double py1() const { return p01 + p11; }

  JointPmf to_joint_pmf() const;
};

// Erasure probabilities (alpha0e, alpha1e) of the one-message test channel:
// source letter i is erased with probability alpha_ie and kept otherwise.
struct ErasureAlphaPair {
  double alpha0e, alpha1e;

  ErasureAlphaPair(double alpha0e, double alpha1e);
};

// Parameters of the biased-BSC family: crossover p, Y-marginal tilt q
// (P(Y=1) = q), and the x=0 erasure probability alpha0e.
struct DsbsParams {
  double p, q, alpha0e;

  DsbsParams(double p, double q, double alpha0e);
};

// Symmetric binary pair: uniform bits joined by a crossover-p flip.
BinaryJoint dsbs_joint(double p);

// Biased instance: Y ~ Bernoulli(q) observed through a BSC(p) as X, giving
// entries (pbar*qbar, p*q; p*qbar, pbar*q).  Entries are formed symbolically
// from (p, q) so extreme crossovers keep full relative accuracy.
BinaryJoint bsc_joint(double p, double q);

// The standard binary erasure distortion: reproduction alphabet {0, e, 1}
// with d(i,i) = 0, d(i,e) = 1, d(i,1-i) = +inf.
DistortionMatrix binary_erasure_distortion();

// Objective H(X|Y,U) + H(Y|X) of the erasure test channel, as a function of
// the joint and the erasure pair.  Nondecreasing and concave in the alphas.
double psi(const BinaryJoint& pxy, const ErasureAlphaPair& alphas);

// Expected erasure distortion of that channel: pX(0)*a0e + pX(1)*a1e.
double phi(const BinaryJoint& pxy, const ErasureAlphaPair& alphas);

// Exact rate reduction rho1 for a binary full-support source under erasure
// distortion: the maximum of psi over the box [0,1]^2 intersected with
// {phi <= D}.  For D >= 1 the constraint is vacuous and the (1,1) corner is
// returned.  Otherwise psi's monotonicity pins the optimum to the segment
// phi = D, which a golden-section search solves to abscissa tolerance 1e-12;
// a runtime directional check guards the monotonicity assumption and falls
// back to the 2-D box search below if it ever fails.
double rho1_exact(const BinaryJoint& pxy, double D);

// Assumption-free 2-D search over the constrained box (grid + halved-step
// refinement), used as rho1_exact's fallback and as a cross-check.
double rho1_box_search(const BinaryJoint& pxy, double D, int resolution = 512, int refine_rounds = 3);

// The psi objective of the biased-BSC joint written directly in
// (p, q, alpha0e, alpha1e); stable down to p = 1e-300.
double c_functional(const DsbsParams& params, double alpha1e);

// The alpha-independent last two terms of c_functional: H(Y|X) of the
// biased-BSC joint.
double c2_functional(double p, double q);

// Expected erasure distortion of the biased-BSC instance:
// (pbar*qbar + p*q)*a0e + (pbar*q + p*qbar)*a1e.
double eta_functional(const DsbsParams& params, double alpha1e);

// One-message sum rate of the symmetric pair at distortion D, computed
// directly as (1-D)*h(p) (never as a cancelling difference).
double rsum1_dsbs(double p, double D);

}  // namespace wzgain
