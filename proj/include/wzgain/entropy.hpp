#pragma once

#include <cstddef>
#include <vector>

#include "wzgain/types.hpp"

namespace wzgain {

// Binary entropy h(theta) = -theta*log2(theta) - (1-theta)*log2(1-theta) in
// bits, with the 0*log2(0) = 0 convention.  Inputs within 1e-12 outside
// [0,1] are clamped; anything further off throws std::domain_error.
double binary_entropy(double theta);

// h(a/(a+b)) evaluated from the (numerator, denominator-part) pair without
// ever forming the near-0/near-1 ratio, so the result keeps full relative
// accuracy even for a/b down to 1e-300 or up to 1e300.  Exactly 0 when a or
// b is 0; symmetric in its arguments by construction.  Throws
// std::domain_error if an argument is negative or both are 0.
double entropy_of_ratio(double a, double b);

// (a+b) * h(a/(a+b)), the unnormalized two-outcome entropy contribution.
// Returns 0 when either argument is 0 (the 0*h(0/0) = 0 convention: a pair
// with no mass or no uncertainty contributes nothing).
double weighted_pair_entropy(double a, double b);

// sum_i v[i] * log2(S / v[i]) with S = sum_i v[i]: the unnormalized entropy
// of an n-outcome weight vector.  Zero entries are skipped; the dominant
// entry is evaluated through log1p so tiny competing masses are not lost to
// cancellation.  Returns 0 when at most one entry is positive.
double weighted_vector_entropy(const double* v, std::size_t n);

// H(row | column) in bits: the column variable is observed, the row
// variable is predicted.
double conditional_entropy(const JointPmf& joint);

// I(A;B|C) = H(A|C) - H(A|B,C) in bits for a joint pmf over up to four
// variables, with the axes partitioned into the A-group, the B-group, and
// the (possibly empty) conditioning group C.  Every axis of `pmf` must be
// assigned to exactly one group.  Throws std::invalid_argument on a bad
// partition.  Small negative rounding residue (within 1e-9) is clamped to 0.
double conditional_mutual_information(const MultiwayPmf& pmf,
                                      const std::vector<std::size_t>& axes_a,
                                      const std::vector<std::size_t>& axes_b,
                                      const std::vector<std::size_t>& axes_c);

// sum_{x,xhat} p(x,xhat) * d(x,xhat); +inf as soon as any positive-mass cell
// carries infinite distortion.  Zero-mass cells contribute nothing even when
// their distortion is infinite.
double expected_distortion(const JointPmf& joint, const DistortionMatrix& d);

}  // namespace wzgain
