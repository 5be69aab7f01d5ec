#include "wzgain/interaction_gain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "wzgain/entropy.hpp"
#include "wzgain/errors.hpp"

namespace wzgain {

GainCertificate midpoint_violation(double p, double q, double alpha0e) {
  if (std::isnan(p) || p <= 0.0 || p >= 1.0) {
    throw std::invalid_argument("p must lie in (0, 1)");
  }
  if (std::isnan(q) || q <= 0.0 || q >= 0.5) {
    throw std::invalid_argument("q must lie in (0, 1/2): q = 1/2 is the symmetric source itself");
  }
  if (std::isnan(alpha0e) || alpha0e <= 0.0 || alpha0e >= 1.0) {
    throw std::invalid_argument("alpha0e must lie in (0, 1)");
  }

  const DsbsParams params(p, q, alpha0e);
  GainCertificate cert;
  cert.p = p;
  cert.q = q;
  cert.alpha0e = alpha0e;
  cert.distortion = eta_functional(params, 1.0);
  cert.lhs = (1.0 + cert.distortion) * binary_entropy(p);
  cert.rhs_lower = c_functional(params, 1.0);
  cert.rhs_exact = rho1_exact(bsc_joint(p, q), cert.distortion);
  cert.gap_lower = cert.rhs_lower - cert.lhs;
  cert.gap_exact = cert.rhs_exact - cert.lhs;
  return cert;
}

bool certificate_is_valid(const GainCertificate& cert, double margin_abs, double margin_rel) {
  const double bar = std::min(margin_abs, margin_rel * binary_entropy(cert.p));
  return cert.gap_lower > bar;
}

GainCertificate find_gain_witness(double q, double alpha0e, double margin, double margin_rel) {
  if (std::isnan(margin) || margin < 0.0) {
    throw std::invalid_argument("margin must be nonnegative");
  }
  double best_gap = -std::numeric_limits<double>::infinity();
  double best_p = 0.0;
  for (int exponent = 1; exponent <= 300; ++exponent) {
    const double p = std::pow(10.0, -exponent);
    const GainCertificate cert = midpoint_violation(p, q, alpha0e);
    if (cert.gap_lower > margin && cert.gap_lower > margin_rel * binary_entropy(p)) {
      return cert;
    }
    if (cert.gap_lower > best_gap) {
      best_gap = cert.gap_lower;
      best_p = p;
    }
  }
  char msg[200];
  std::snprintf(msg, sizeof(msg),
                "no crossover decade down to 1e-300 cleared the margin; best gap %.17g at p = %.17g",
                best_gap, best_p);
  throw SearchExhaustedError(msg);
}

double limit_gap(double q, double alpha0e) {
  if (std::isnan(q) || q < 0.0 || q > 1.0) {
    throw std::invalid_argument("q must lie in [0, 1]");
  }
  if (std::isnan(alpha0e) || alpha0e < 0.0 || alpha0e > 1.0) {
    throw std::invalid_argument("alpha0e must lie in [0, 1]");
  }
  return (1.0 - 2.0 * q) * (1.0 - alpha0e);
}

}  // namespace wzgain
