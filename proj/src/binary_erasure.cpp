#include "wzgain/binary_erasure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wzgain/entropy.hpp"

namespace wzgain {
namespace {

void check_unit_interval(double v, const char* name) {
  if (std::isnan(v) || v < 0.0 || v > 1.0) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

void check_open_unit_interval(double v, const char* name) {
  if (std::isnan(v) || v <= 0.0 || v >= 1.0) {
    throw std::invalid_argument(std::string(name) + " must lie in (0, 1)");
  }
}

constexpr double kGoldenInv = 0.61803398874989484820;  // 1/golden ratio

// Maximizes a unimodal function on [lo, hi] by golden-section search down to
// abscissa tolerance `tol`; returns the best (x, f(x)) seen including the
// bracket endpoints.
template <typename F>
double golden_section_max(F f, double lo, double hi, double tol) {
  double x1 = hi - kGoldenInv * (hi - lo);
  double x2 = lo + kGoldenInv * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  double best = std::max(std::max(f(lo), f(hi)), std::max(f1, f2));
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGoldenInv * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGoldenInv * (hi - lo);
      f1 = f(x1);
    }
    best = std::max(best, std::max(f1, f2));
  }
  return best;
}

}  // namespace

BinaryJoint::BinaryJoint(double p00, double p01, double p10, double p11)
    : p00(p00), p01(p01), p10(p10), p11(p11) {
  for (double v : {p00, p01, p10, p11}) {
    if (std::isnan(v) || v <= 0.0) {
      throw std::invalid_argument("binary joint needs strictly positive entries (full support)");
    }
  }
  double sum = p00 + p01 + p10 + p11;
  if (std::abs(sum - 1.0) > kPmfSumTolerance) {
    throw std::invalid_argument("binary joint entries must sum to 1 within 1e-12");
  }
  if (sum != 1.0) {
    this->p00 /= sum;
    this->p01 /= sum;
    this->p10 /= sum;
    this->p11 /= sum;
  }
}

JointPmf BinaryJoint::to_joint_pmf() const {
  return JointPmf(2, 2, {p00, p01, p10, p11});
}

ErasureAlphaPair::ErasureAlphaPair(double alpha0e, double alpha1e)
    : alpha0e(alpha0e), alpha1e(alpha1e) {
  check_unit_interval(alpha0e, "alpha0e");
  check_unit_interval(alpha1e, "alpha1e");
}

DsbsParams::DsbsParams(double p, double q, double alpha0e) : p(p), q(q), alpha0e(alpha0e) {
  check_open_unit_interval(p, "p");
  check_open_unit_interval(q, "q");
  check_unit_interval(alpha0e, "alpha0e");
}

BinaryJoint dsbs_joint(double p) {
  check_open_unit_interval(p, "p");
  return BinaryJoint((1.0 - p) * 0.5, p * 0.5, p * 0.5, (1.0 - p) * 0.5);
}

BinaryJoint bsc_joint(double p, double q) {
  check_open_unit_interval(p, "p");
  check_open_unit_interval(q, "q");
  double pb = 1.0 - p, qb = 1.0 - q;
  return BinaryJoint(pb * qb, p * q, p * qb, pb * q);
}

DistortionMatrix binary_erasure_distortion() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return DistortionMatrix(2, 3, {0.0, 1.0, inf, inf, 1.0, 0.0});
}

double psi(const BinaryJoint& pxy, const ErasureAlphaPair& alphas) {
  double a0 = alphas.alpha0e, a1 = alphas.alpha1e;
  return weighted_pair_entropy(pxy.p00 * a0, pxy.p10 * a1)
       + weighted_pair_entropy(pxy.p01 * a0, pxy.p11 * a1)
       + weighted_pair_entropy(pxy.p00, pxy.p01)
       + weighted_pair_entropy(pxy.p11, pxy.p10);
}

double phi(const BinaryJoint& pxy, const ErasureAlphaPair& alphas) {
  return pxy.px0() * alphas.alpha0e + pxy.px1() * alphas.alpha1e;
}

namespace {

// psi along the constraint segment phi = D, parameterized by alpha0e.
double psi_on_segment(const BinaryJoint& pxy, double D, double a0) {
  double a1 = (D - pxy.px0() * a0) / pxy.px1();
  a1 = std::clamp(a1, 0.0, 1.0);
  return psi(pxy, ErasureAlphaPair(std::clamp(a0, 0.0, 1.0), a1));
}

// Cheap runtime verification that psi is nondecreasing in each alpha: probes
// forward differences on a coarse interior grid.  The exact solver's
// boundary restriction is only safe under monotonicity, so a failed probe
// routes to the assumption-free box search.
bool psi_looks_monotone(const BinaryJoint& pxy) {
  constexpr double kStep = 1e-4;
  constexpr double kSlack = 1e-10;
  for (double a0 : {0.1, 0.5, 0.9}) {
    for (double a1 : {0.1, 0.5, 0.9}) {
      double base = psi(pxy, ErasureAlphaPair(a0, a1));
      if (psi(pxy, ErasureAlphaPair(a0 + kStep, a1)) + kSlack < base) return false;
      if (psi(pxy, ErasureAlphaPair(a0, a1 + kStep)) + kSlack < base) return false;
    }
  }
  return true;
}

}  // namespace

double rho1_box_search(const BinaryJoint& pxy, double D, int resolution, int refine_rounds) {
  if (std::isnan(D) || D < 0.0) throw std::invalid_argument("distortion target must be nonnegative");
  if (resolution < 2) throw std::invalid_argument("box search resolution must be at least 2");
  double best = -1.0;
  double best_a0 = 0.0, best_a1 = 0.0;
  auto consider = [&](double a0, double a1) {
    if (a0 < 0.0 || a0 > 1.0 || a1 < 0.0 || a1 > 1.0) return;
    if (phi(pxy, ErasureAlphaPair(a0, a1)) > D + 1e-15) return;
    double value = psi(pxy, ErasureAlphaPair(a0, a1));
    if (value > best) {
      best = value;
      best_a0 = a0;
      best_a1 = a1;
    }
  };
  double step = 1.0 / resolution;
  for (int i = 0; i <= resolution; ++i) {
    for (int j = 0; j <= resolution; ++j) consider(i * step, j * step);
  }
  for (int round = 1; round <= refine_rounds; ++round) {
    step *= 0.5;
    double c0 = best_a0, c1 = best_a1;
    for (int i = -2; i <= 2; ++i) {
      for (int j = -2; j <= 2; ++j) consider(c0 + i * step, c1 + j * step);
    }
  }
  if (best < 0.0) {
    // Even (0,0) violates phi <= D only when D < 0, which was rejected, so
    // the corner always qualifies; this is unreachable but kept defensive.
    throw std::invalid_argument("no feasible erasure pair for the requested distortion");
  }
  return best;
}

double rho1_exact(const BinaryJoint& pxy, double D) {
  if (std::isnan(D) || D < 0.0) throw std::invalid_argument("distortion target must be nonnegative");
  double corner = psi(pxy, ErasureAlphaPair(1.0, 1.0));
  if (D >= 1.0) return corner;

  // With psi nondecreasing in each coordinate the constraint binds, so the
  // optimum lies on the segment phi = D.
  double px0 = pxy.px0(), px1 = pxy.px1();
  double lo = std::max(0.0, (D - px1) / px0);
  double hi = std::min(1.0, D / px0);
  auto segment = [&](double a0) { return psi_on_segment(pxy, D, a0); };
  double best = golden_section_max(segment, lo, hi, 1e-12);

  // Guard the assumptions: the segment maximum can never exceed the box
  // corner, and psi must actually be nondecreasing.
  if (best > corner + 1e-12 || !psi_looks_monotone(pxy)) {
    return rho1_box_search(pxy, D);
  }
  return best;
}

double c_functional(const DsbsParams& params, double alpha1e) {
  check_unit_interval(alpha1e, "alpha1e");
  double p = params.p, q = params.q;
  double a0 = params.alpha0e, a1 = alpha1e;
  double pb = 1.0 - p, qb = 1.0 - q;
  return weighted_pair_entropy(pb * qb * a0, p * qb * a1)
       + weighted_pair_entropy(p * q * a0, pb * q * a1)
       + weighted_pair_entropy(pb * qb, p * q)
       + weighted_pair_entropy(pb * q, p * qb);
}

double c2_functional(double p, double q) {
  check_open_unit_interval(p, "p");
  check_open_unit_interval(q, "q");
  double pb = 1.0 - p, qb = 1.0 - q;
  return weighted_pair_entropy(pb * qb, p * q) + weighted_pair_entropy(pb * q, p * qb);
}

double eta_functional(const DsbsParams& params, double alpha1e) {
  check_unit_interval(alpha1e, "alpha1e");
  double p = params.p, q = params.q;
  double pb = 1.0 - p, qb = 1.0 - q;
  return (pb * qb + p * q) * params.alpha0e + (pb * q + p * qb) * alpha1e;
}

double rsum1_dsbs(double p, double D) {
  check_open_unit_interval(p, "p");
  if (std::isnan(D) || D < 0.0 || D > 1.0) {
    throw std::invalid_argument("distortion must lie in [0, 1]");
  }
  return (1.0 - D) * binary_entropy(p);
}

}  // namespace wzgain
