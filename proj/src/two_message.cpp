#include "wzgain/two_message.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "wzgain/entropy.hpp"
#include "wzgain/errors.hpp"
#include "wzgain/numeric.hpp"

namespace wzgain {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double split_ratio_of(double r1, double r2) {
  if (r2 > 0.0) return r1 / r2;
  return r1 == 0.0 ? 0.0 : kInf;
}

}  // namespace

ErasureSchemeParams::ErasureSchemeParams(double p, double q, double alpha)
    : p(p), q(q), alpha(alpha) {
  if (std::isnan(p) || p <= 0.0 || p >= 1.0) throw std::invalid_argument("p must lie in (0, 1)");
  if (std::isnan(q) || q <= 0.0 || q >= 1.0) throw std::invalid_argument("q must lie in (0, 1)");
  if (std::isnan(alpha) || alpha < 0.0 || alpha > 1.0) {
    throw std::invalid_argument("alpha must lie in [0, 1]");
  }
}

TwoMessagePoint evaluate_scheme(const JointPmf& p_xy, const TwoMessageScheme& scheme,
                                const DistortionMatrix& d,
                                std::optional<double> rsum1_reference) {
  const std::size_t nx = p_xy.rows();
  const std::size_t ny = p_xy.cols();
  const std::size_t nv1 = scheme.v1_given_y.cols();
  const std::size_t nv2 = scheme.v2_given_xv1.cols();
  if (scheme.v1_given_y.rows() != ny) {
    throw std::invalid_argument("first-message channel rows must match |Y|");
  }
  if (scheme.v2_given_xv1.rows() != nx * nv1) {
    throw std::invalid_argument("second-message channel rows must match |X| * |V1|");
  }
  if (d.rows() != nx) {
    throw std::invalid_argument("distortion matrix rows must match the source alphabet size");
  }
  if (scheme.decoder.size() != nv1 * nv2 * ny) {
    throw std::invalid_argument("decoder table must have one entry per (v1, v2, y)");
  }
  for (int entry : scheme.decoder) {
    if (entry < 0 || static_cast<std::size_t>(entry) >= d.cols()) {
      throw std::invalid_argument("decoder entry outside the reconstruction alphabet");
    }
  }

  // Joint over (X, Y, V1) for R1 (V2 marginalizes out to exactly this), and
  // the full joint over (X, Y, V1, V2) for R2 and the distortion.
  std::vector<double> cells3(nx * ny * nv1);
  std::vector<double> cells4(nx * ny * nv1 * nv2);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      for (std::size_t v1 = 0; v1 < nv1; ++v1) {
        const double m3 = p_xy.at(x, y) * scheme.v1_given_y.at(y, v1);
        cells3[(x * ny + y) * nv1 + v1] = m3;
        for (std::size_t v2 = 0; v2 < nv2; ++v2) {
          cells4[((x * ny + y) * nv1 + v1) * nv2 + v2] =
              m3 * scheme.v2_given_xv1.at(x * nv1 + v1, v2);
        }
      }
    }
  }
  const MultiwayPmf joint3({nx, ny, nv1}, cells3);
  const MultiwayPmf joint4({nx, ny, nv1, nv2}, cells4);

  TwoMessagePoint point;
  point.r1 = conditional_mutual_information(joint3, {1}, {2}, {0});
  point.r2 = conditional_mutual_information(joint4, {0}, {3}, {1, 2});

  NeumaierSum distortion;
  bool infinite = false;
  for (std::size_t x = 0; x < nx && !infinite; ++x) {
    for (std::size_t y = 0; y < ny && !infinite; ++y) {
      for (std::size_t v1 = 0; v1 < nv1 && !infinite; ++v1) {
        for (std::size_t v2 = 0; v2 < nv2; ++v2) {
          const double m = cells4[((x * ny + y) * nv1 + v1) * nv2 + v2];
          if (m <= 0.0) continue;
          const double dv =
              d.at(x, static_cast<std::size_t>(scheme.decoder[(v1 * nv2 + v2) * ny + y]));
          if (std::isinf(dv)) {
            infinite = true;
            break;
          }
          distortion.add(m * dv);
        }
      }
    }
  }
  point.distortion = infinite ? kInf : distortion.value();

  point.split_ratio = split_ratio_of(point.r1, point.r2);
  if (rsum1_reference.has_value() && point.r1 + point.r2 > 0.0) {
    point.sum_ratio = *rsum1_reference / (point.r1 + point.r2);
  }
  return point;
}

TwoMessageScheme two_round_erasure_scheme(const ErasureSchemeParams& params) {
  const double q = params.q;
  const double a = params.alpha;
  Channel v1_given_y(2, 2, {1.0 - q, q, q, 1.0 - q});
  Channel v2_given_xv1(4, 3,
                       {1.0 - a, a, 0.0,    // (x=0, v1=0): reveal 0 or erase
                        0.0, 1.0, 0.0,      // (x=0, v1=1): always erase
                        0.0, 1.0, 0.0,      // (x=1, v1=0): always erase
                        0.0, a, 1.0 - a});  // (x=1, v1=1): reveal 1 or erase
  // Reconstruction alphabet is (0, e, 1) = column order of the erasure
  // distortion matrix, and the decoder just forwards v2.
  std::vector<int> decoder(2 * 3 * 2);
  for (int v1 = 0; v1 < 2; ++v1) {
    for (int v2 = 0; v2 < 3; ++v2) {
      for (int y = 0; y < 2; ++y) decoder[(v1 * 3 + v2) * 2 + y] = v2;
    }
  }
  return TwoMessageScheme{v1_given_y, v2_given_xv1, decoder};
}

TwoMessagePoint two_round_erasure_point(const ErasureSchemeParams& params) {
  const double hp = binary_entropy(params.p);
  const DsbsParams shared(params.p, params.q, params.alpha);

  TwoMessagePoint point;
  point.r1 = hp - c2_functional(params.p, params.q);
  point.r2 = 2.0 * hp - c_functional(shared, 1.0) - point.r1;
  point.distortion = eta_functional(shared, 1.0);
  point.split_ratio = split_ratio_of(point.r1, point.r2);
  const double rsum1 = rsum1_dsbs(params.p, point.distortion);
  if (point.r1 + point.r2 > 0.0) point.sum_ratio = rsum1 / (point.r1 + point.r2);
  return point;
}

bool erasure_point_matches_direct(const ErasureSchemeParams& params, double tol) {
  const TwoMessagePoint closed = two_round_erasure_point(params);
  const TwoMessagePoint direct =
      evaluate_scheme(dsbs_joint(params.p).to_joint_pmf(), two_round_erasure_scheme(params),
                      binary_erasure_distortion());
  return std::abs(closed.r1 - direct.r1) <= tol && std::abs(closed.r2 - direct.r2) <= tol &&
         std::abs(closed.distortion - direct.distortion) <= tol;
}

double entropy_ratio_check(double slope, double p) {
  if (std::isnan(slope) || slope <= 0.0) throw std::invalid_argument("slope must be positive");
  if (std::isnan(p) || p <= 0.0 || p >= 0.5) throw std::invalid_argument("p must lie in (0, 1/2)");
  if (slope * p >= 1.0) throw std::invalid_argument("slope * p must stay below 1");
  return binary_entropy(slope * p) / binary_entropy(p);
}

RatioWitness find_ratio_witness(double L, std::optional<double> q, double alpha) {
  if (std::isnan(L) || L <= 0.0 || std::isinf(L)) {
    throw std::invalid_argument("L must be positive and finite");
  }
  const double q_eff = q.has_value() ? *q : 1.0 / (L + 3.0);

  double best_sum_ratio = -kInf;
  double best_split = kInf;
  double best_p = 0.0;
  for (int exponent = 1; exponent <= 300; ++exponent) {
    const double p = std::pow(10.0, -exponent);
    const ErasureSchemeParams params(p, q_eff, alpha);
    const TwoMessagePoint point = two_round_erasure_point(params);
    if (!point.sum_ratio.has_value()) continue;
    if (*point.sum_ratio > L && point.split_ratio < 1.0 / L) {
      return RatioWitness{params, point};
    }
    if (*point.sum_ratio > best_sum_ratio) {
      best_sum_ratio = *point.sum_ratio;
      best_split = point.split_ratio;
      best_p = p;
    }
  }
  char msg[320];
  std::snprintf(msg, sizeof(msg),
                "no crossover decade down to 1e-300 reached sum ratio %.17g with split below %.17g;"
                " best sum ratio %.17g (split %.17g) at p = %.17g",
                L, 1.0 / L, best_sum_ratio, best_split, best_p);
  throw SearchExhaustedError(msg);
}

}  // namespace wzgain
