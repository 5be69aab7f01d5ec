#pragma once

// Certificates that a second round of interaction strictly helps.
//
// For the symmetric binary source with crossover p and the erasure
// distortion, the best one-message sum rate at distortion D is
// (1 - D) h(p), equivalently a rate reduction of (1 + D) h(p) below
// H(X|Y) + H(Y|X).  A two-message scheme built on the Y-biased joint
// (Y ~ Bernoulli(q), X = Y + noise) achieves a strictly larger reduction for
// suitable parameters, which certifies that two messages beat one.
//
// The comparison is packaged as a "midpoint violation": the symmetric source
// is the even mixture of the q-biased and (1-q)-biased joints, whose rate
// reductions at matched distortion are equal by relabeling symmetry.  If the
// reduction functional were concave across this mixture, the symmetric
// source would do at least as well as the biased ones; computing both sides
// shows it does strictly worse, and the certified gap equals the sum-rate
// saving of the two-message scheme.
//
// All certificate arithmetic is closed-form (entropy evaluations only), so
// gaps remain meaningful even at crossover probabilities like 1e-200 where
// every rate in sight underflows ordinary naive formulas.

#include "wzgain/binary_erasure.hpp"

namespace wzgain {

// One evaluated comparison at matched distortion.  `lhs` is the symmetric
// source's rate reduction (1 + D) h(p); `rhs_lower` is the biased joint's
// reduction at one explicit erasure pair (a closed-form lower bound on its
// best reduction `rhs_exact`).  Gaps are rhs - lhs, so positive means the
// biased joint wins and the certificate of strict improvement holds.
struct GainCertificate {
  double p = 0.0;          // crossover probability of the symmetric source
  double q = 0.0;          // bias of the comparison joint, in (0, 1/2)
  double alpha0e = 0.0;    // erasure probability used for source letter 0
  double distortion = 0.0; // matched distortion D (letter 1 fully erased)
  double lhs = 0.0;        // (1 + D) h(p)
  double rhs_lower = 0.0;  // closed-form reduction of the biased joint
  double rhs_exact = 0.0;  // exact best reduction of the biased joint
  double gap_lower = 0.0;  // rhs_lower - lhs (certified saving)
  double gap_exact = 0.0;  // rhs_exact - lhs
};

// Evaluates the certificate at (p, q, alpha0e) with the second source letter
// fully erased (its erasure probability pinned to 1).  Requires p in (0,1),
// q in (0, 1/2), alpha0e in (0, 1); throws std::invalid_argument otherwise.
GainCertificate midpoint_violation(double p, double q, double alpha0e);

// A certificate counts as valid when the certified gap clears a margin that
// scales down with the problem: min(margin_abs, margin_rel * h(p)).  The
// relative branch keeps tiny-but-decisive gaps at extreme p (where every
// quantity is on the scale of h(p)) from being dismissed by an absolute
// threshold designed for moderate p.
bool certificate_is_valid(const GainCertificate& cert, double margin_abs = 1e-9,
                          double margin_rel = 0.01);

// Scans p = 10^-1, 10^-2, ..., 10^-300 at fixed (q, alpha0e) and returns the
// first certificate whose gap_lower exceeds both the absolute margin and
// margin_rel * h(p) — i.e. the largest crossover probability that clears the
// bar.  Throws SearchExhaustedError (reporting the best gap seen and where)
// if no decade qualifies; margin must be nonnegative.
GainCertificate find_gain_witness(double q, double alpha0e, double margin,
                                  double margin_rel = 0.01);

// Limit of gap_lower / h(p) as p -> 0 at fixed (q, alpha0e):
// (1 - 2q) (1 - alpha0e).  Accepts the closed ranges q, alpha0e in [0, 1].
double limit_gap(double q, double alpha0e);

}  // namespace wzgain
