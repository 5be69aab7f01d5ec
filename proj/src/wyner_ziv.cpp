#include "wzgain/wyner_ziv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <vector>

#include "wzgain/entropy.hpp"
#include "wzgain/errors.hpp"

namespace wzgain {
namespace {

// A candidate is accepted when its expected distortion is at most the target
// plus this slack, which absorbs floating-point rounding in the comparison.
constexpr double kDistortionSlack = 1e-12;

constexpr double kInf = std::numeric_limits<double>::infinity();

// All compositions (k_0,...,k_{parts-1}) of `total` into `parts` nonnegative
// integers, in lexicographically increasing order.
std::vector<std::vector<int>> simplex_compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  // Position `part` takes every value 0..remaining; recursion depth is the
  // number of parts, which stays tiny for the alphabets this handles.
  auto recurse = [&](auto&& self, int part, int remaining) -> void {
    if (part == parts - 1) {
      cur[static_cast<std::size_t>(part)] = remaining;
      out.push_back(cur);
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      cur[static_cast<std::size_t>(part)] = k;
      self(self, part + 1, remaining - k);
    }
  };
  recurse(recurse, 0, total);
  return out;
}

struct CandidateScore {
  bool feasible = false;
  double cond_entropy = 0.0;  // H(X | Y, U) when feasible
};

// Checks the distortion constraint for one channel candidate and, when it
// passes, computes H(X | Y, U).  Shared by the parallel and serial kernels
// so that both produce bit-identical floating-point scores; `cell` is a
// caller-provided scratch buffer of size |X|.
CandidateScore score_channel(const JointPmf& p_xy, const DistortionMatrix& d, double target,
                             const std::vector<double>& w, std::vector<double>& cell) {
  const std::size_t nx = p_xy.rows();
  const std::size_t ny = p_xy.cols();
  const std::size_t nu = w.size() / nx;
  const std::size_t nr = d.cols();

  // Pass 1: expected distortion under the per-cell optimal decoder, with
  // early exit as soon as the running total exceeds the target.
  double total = 0.0;
  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t y = 0; y < ny; ++y) {
      double mass = 0.0;
      for (std::size_t x = 0; x < nx; ++x) {
        const double m = p_xy.at(x, y) * w[x * nu + u];
        cell[x] = m;
        mass += m;
      }
      if (mass == 0.0) continue;
      double best_cost = kInf;
      for (std::size_t xhat = 0; xhat < nr; ++xhat) {
        double cost = 0.0;
        bool usable = true;
        for (std::size_t x = 0; x < nx; ++x) {
          const double m = cell[x];
          if (m <= 0.0) continue;
          const double dv = d.at(x, xhat);
          if (std::isinf(dv)) {
            usable = false;
            break;
          }
          cost += m * dv;
        }
        if (usable && cost < best_cost) best_cost = cost;
      }
      if (!(best_cost < kInf)) return {};  // cell with mass but no finite reconstruction
      total += best_cost;
      if (total > target + kDistortionSlack) return {};
    }
  }

  // Pass 2: the score.  Minimizing I(X;U|Y) = H(X|Y) - H(X|Y,U) over
  // feasible channels is the same as maximizing H(X|Y,U).
  double h = 0.0;
  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t y = 0; y < ny; ++y) {
      for (std::size_t x = 0; x < nx; ++x) cell[x] = p_xy.at(x, y) * w[x * nu + u];
      if (nx == 2) {
        h += weighted_pair_entropy(cell[0], cell[1]);
      } else {
        h += weighted_vector_entropy(cell.data(), nx);
      }
    }
  }
  return {true, h};
}

// Expected distortion of a channel under its optimal decoder, with no early
// exit; same accumulation order as score_channel's first pass.
double channel_distortion(const JointPmf& p_xy, const DistortionMatrix& d,
                          const std::vector<double>& w) {
  const std::size_t nx = p_xy.rows();
  const std::size_t ny = p_xy.cols();
  const std::size_t nu = w.size() / nx;
  const std::size_t nr = d.cols();
  std::vector<double> cell(nx);
  double total = 0.0;
  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t y = 0; y < ny; ++y) {
      double mass = 0.0;
      for (std::size_t x = 0; x < nx; ++x) {
        const double m = p_xy.at(x, y) * w[x * nu + u];
        cell[x] = m;
        mass += m;
      }
      if (mass == 0.0) continue;
      double best_cost = kInf;
      for (std::size_t xhat = 0; xhat < nr; ++xhat) {
        double cost = 0.0;
        bool usable = true;
        for (std::size_t x = 0; x < nx; ++x) {
          const double m = cell[x];
          if (m <= 0.0) continue;
          const double dv = d.at(x, xhat);
          if (std::isinf(dv)) {
            usable = false;
            break;
          }
          cost += m * dv;
        }
        if (usable && cost < best_cost) best_cost = cost;
      }
      if (!(best_cost < kInf)) return kInf;
      total += best_cost;
    }
  }
  return total;
}

struct BestCandidate {
  double cond_entropy = -1.0;
  std::int64_t index = -1;
};

// Deterministic preference order: larger conditional entropy first, then the
// smaller linear candidate index (which corresponds to lexicographically
// smaller channel parameters).
bool candidate_improves(const BestCandidate& incumbent, double cond_entropy, std::int64_t index) {
  if (cond_entropy != incumbent.cond_entropy) return cond_entropy > incumbent.cond_entropy;
  return incumbent.index < 0 || index < incumbent.index;
}

void validate_oracle_inputs(const JointPmf& p_xy, const DistortionMatrix& d,
                            double target_distortion) {
  if (d.rows() != p_xy.rows()) {
    throw std::invalid_argument("distortion matrix rows must match the source alphabet size");
  }
  if (std::isnan(target_distortion) || target_distortion < 0.0) {
    throw std::invalid_argument("distortion target must be nonnegative");
  }
  // Minimum achievable distortion: reveal X to the decoder (representable on
  // every grid as a deterministic channel) and reconstruct each letter by
  // its cheapest column.
  const FinitePmf px = p_xy.marginal_rows();
  double floor_distortion = 0.0;
  for (std::size_t x = 0; x < px.size(); ++x) {
    if (px[x] <= 0.0) continue;
    double best = kInf;
    for (std::size_t xhat = 0; xhat < d.cols(); ++xhat) best = std::min(best, d.at(x, xhat));
    floor_distortion += px[x] * best;
  }
  if (floor_distortion > target_distortion + kDistortionSlack) {
    char msg[160];
    std::snprintf(msg, sizeof(msg),
                  "distortion target %.17g is below the minimum achievable %.17g", target_distortion,
                  floor_distortion);
    throw InfeasibleDistortionError(msg);
  }
}

// Candidate channel for linear index `idx` (row 0 most significant).
std::vector<double> decode_candidate(const std::vector<double>& comps_flat, std::int64_t m,
                                     std::size_t nx, std::size_t nu, std::int64_t idx) {
  std::vector<double> w(nx * nu);
  std::int64_t rem = idx;
  for (std::size_t r = nx; r-- > 0;) {
    const std::int64_t ci = rem % m;
    rem /= m;
    std::copy(comps_flat.begin() + ci * static_cast<std::int64_t>(nu),
              comps_flat.begin() + (ci + 1) * static_cast<std::int64_t>(nu),
              w.begin() + static_cast<std::int64_t>(r * nu));
  }
  return w;
}

// Local search around the best grid point: each round halves the step and
// tries small integer offsets on every free coordinate (the last entry of a
// row is pinned to complete the simplex).  Updates `w` in place and returns
// the best conditional entropy found.  Serial by design, shared by both
// kernels.
double refine_channel(const JointPmf& p_xy, const DistortionMatrix& d, double target,
                      const GridSpec& grid, std::vector<double>& w, double cond_entropy) {
  const std::size_t nx = p_xy.rows();
  const std::size_t nu = w.size() / nx;
  const std::size_t free_dims = nx * (nu - 1);
  if (free_dims == 0) return cond_entropy;
  // Full +/-2 neighborhoods are affordable for small alphabets; larger ones
  // fall back to +/-1 to keep the 3^k / 5^k sweep bounded.
  const int max_off = free_dims <= 6 ? 2 : 1;

  std::vector<int> off(free_dims);
  std::vector<double> cand(nx * nu), cell(nx);
  double step = 1.0 / grid.resolution;
  for (int round = 1; round <= grid.refine_rounds; ++round) {
    step *= 0.5;
    const std::vector<double> base = w;
    std::fill(off.begin(), off.end(), -max_off);
    while (true) {
      bool valid = true;
      for (std::size_t x = 0; x < nx && valid; ++x) {
        double sum = 0.0;
        for (std::size_t j = 0; j + 1 < nu; ++j) {
          double v = base[x * nu + j] + off[x * (nu - 1) + j] * step;
          if (v < -1e-12 || v > 1.0 + 1e-12) {
            valid = false;
            break;
          }
          v = std::clamp(v, 0.0, 1.0);
          cand[x * nu + j] = v;
          sum += v;
        }
        if (!valid) break;
        const double last = 1.0 - sum;
        if (last < -1e-12) {
          valid = false;
          break;
        }
        cand[x * nu + nu - 1] = std::max(last, 0.0);
      }
      if (valid) {
        const CandidateScore s = score_channel(p_xy, d, target, cand, cell);
        if (s.feasible && s.cond_entropy > cond_entropy) {
          cond_entropy = s.cond_entropy;
          w = cand;
        }
      }
      std::size_t k = free_dims;
      while (k-- > 0) {
        if (++off[k] <= max_off) break;
        off[k] = -max_off;
      }
      if (k == static_cast<std::size_t>(-1)) break;
    }
  }
  return cond_entropy;
}

WzSolution finalize_solution(const JointPmf& p_xy, const DistortionMatrix& d,
                             const std::vector<double>& w, double cond_entropy) {
  const std::size_t nx = p_xy.rows();
  const std::size_t ny = p_xy.cols();
  const std::size_t nu = w.size() / nx;

  WzSolution solution;
  solution.rate = std::max(0.0, conditional_entropy(p_xy) - cond_entropy);
  solution.distortion = channel_distortion(p_xy, d, w);
  solution.aux_channel = Channel(nx, nu, w);

  std::vector<double> cells(nx * ny * nu);
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      for (std::size_t u = 0; u < nu; ++u) {
        cells[(x * ny + y) * nu + u] = p_xy.at(x, y) * w[x * nu + u];
      }
    }
  }
  solution.decoder = optimal_decoder(MultiwayPmf({nx, ny, nu}, cells), d);
  return solution;
}

}  // namespace

GridSpec::GridSpec(int resolution, int refine_rounds)
    : resolution(resolution), refine_rounds(refine_rounds) {
  if (resolution < 2) throw std::invalid_argument("grid resolution must be at least 2");
  if (refine_rounds < 0) throw std::invalid_argument("refine rounds must be nonnegative");
}

std::vector<int> optimal_decoder(const MultiwayPmf& joint_xyu, const DistortionMatrix& d) {
  if (joint_xyu.axis_count() != 3) {
    throw std::invalid_argument("decoder optimization expects a 3-axis joint over (X, Y, U)");
  }
  const std::size_t nx = joint_xyu.dims()[0];
  const std::size_t ny = joint_xyu.dims()[1];
  const std::size_t nu = joint_xyu.dims()[2];
  if (d.rows() != nx) {
    throw std::invalid_argument("distortion matrix rows must match the source alphabet size");
  }
  const auto& s = joint_xyu.strides();

  std::vector<int> decoder(nu * ny, 0);
  for (std::size_t u = 0; u < nu; ++u) {
    for (std::size_t y = 0; y < ny; ++y) {
      double mass = 0.0;
      for (std::size_t x = 0; x < nx; ++x) mass += joint_xyu[x * s[0] + y * s[1] + u * s[2]];
      if (mass == 0.0) continue;  // unused cell; keep reconstruction 0
      double best_cost = kInf;
      int best_xhat = 0;
      for (std::size_t xhat = 0; xhat < d.cols(); ++xhat) {
        double cost = 0.0;
        bool usable = true;
        for (std::size_t x = 0; x < nx; ++x) {
          const double m = joint_xyu[x * s[0] + y * s[1] + u * s[2]];
          if (m <= 0.0) continue;
          const double dv = d.at(x, xhat);
          if (std::isinf(dv)) {
            usable = false;
            break;
          }
          cost += m * dv;
        }
        if (usable && cost < best_cost) {
          best_cost = cost;
          best_xhat = static_cast<int>(xhat);
        }
      }
      if (!(best_cost < kInf)) {
        throw InfeasibleDistortionError(
            "a positive-probability (u, y) cell has no finite-distortion reconstruction");
      }
      decoder[u * ny + y] = best_xhat;
    }
  }
  return decoder;
}

WzSolution wz_rate_oracle(const JointPmf& p_xy, const DistortionMatrix& d,
                          double target_distortion, const GridSpec& grid) {
  validate_oracle_inputs(p_xy, d, target_distortion);
  const std::size_t nx = p_xy.rows();
  const std::size_t nu = nx + 1;

  const auto comps = simplex_compositions(grid.resolution, static_cast<int>(nu));
  const std::int64_t m = static_cast<std::int64_t>(comps.size());
  std::vector<double> comps_flat(static_cast<std::size_t>(m) * nu);
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nu; ++j) {
      comps_flat[static_cast<std::size_t>(i) * nu + j] =
          static_cast<double>(comps[static_cast<std::size_t>(i)][j]) / grid.resolution;
    }
  }

  std::int64_t inner_total = 1;  // m^(nx-1): candidates per outermost row choice
  for (std::size_t r = 1; r < nx; ++r) {
    if (inner_total > std::numeric_limits<std::int64_t>::max() / m) {
      throw std::invalid_argument("grid resolution too large: candidate count overflows");
    }
    inner_total *= m;
  }
  if (inner_total > std::numeric_limits<std::int64_t>::max() / m) {
    throw std::invalid_argument("grid resolution too large: candidate count overflows");
  }

  BestCandidate global;
#pragma omp parallel
  {
    BestCandidate local;
    std::vector<double> w(nx * nu), cell(nx);
    std::vector<std::int64_t> digits(nx, 0);
#pragma omp for schedule(dynamic)
    for (std::int64_t i0 = 0; i0 < m; ++i0) {
      std::copy(comps_flat.begin() + i0 * static_cast<std::int64_t>(nu),
                comps_flat.begin() + (i0 + 1) * static_cast<std::int64_t>(nu), w.begin());
      for (std::size_t r = 1; r < nx; ++r) {
        digits[r] = 0;
        std::copy(comps_flat.begin(), comps_flat.begin() + static_cast<std::int64_t>(nu),
                  w.begin() + static_cast<std::int64_t>(r * nu));
      }
      const std::int64_t base_idx = i0 * inner_total;
      for (std::int64_t c = 0; c < inner_total; ++c) {
        const CandidateScore s = score_channel(p_xy, d, target_distortion, w, cell);
        if (s.feasible && candidate_improves(local, s.cond_entropy, base_idx + c)) {
          local.cond_entropy = s.cond_entropy;
          local.index = base_idx + c;
        }
        for (std::size_t r = nx; r-- > 1;) {
          if (++digits[r] < m) {
            std::copy(comps_flat.begin() + digits[r] * static_cast<std::int64_t>(nu),
                      comps_flat.begin() + (digits[r] + 1) * static_cast<std::int64_t>(nu),
                      w.begin() + static_cast<std::int64_t>(r * nu));
            break;
          }
          digits[r] = 0;
          std::copy(comps_flat.begin(), comps_flat.begin() + static_cast<std::int64_t>(nu),
                    w.begin() + static_cast<std::int64_t>(r * nu));
        }
      }
    }
#pragma omp critical
    {
      if (local.index >= 0 && candidate_improves(global, local.cond_entropy, local.index)) {
        global = local;
      }
    }
  }

  if (global.index < 0) {
    throw InfeasibleDistortionError("no grid channel met the distortion target");
  }
  std::vector<double> w = decode_candidate(comps_flat, m, nx, nu, global.index);
  const double h = refine_channel(p_xy, d, target_distortion, grid, w, global.cond_entropy);
  return finalize_solution(p_xy, d, w, h);
}

WzSolution wz_rate_oracle_serial(const JointPmf& p_xy, const DistortionMatrix& d,
                                 double target_distortion, const GridSpec& grid) {
  validate_oracle_inputs(p_xy, d, target_distortion);
  const std::size_t nx = p_xy.rows();
  const std::size_t nu = nx + 1;

  const auto comps = simplex_compositions(grid.resolution, static_cast<int>(nu));
  const std::int64_t m = static_cast<std::int64_t>(comps.size());
  std::vector<double> comps_flat(static_cast<std::size_t>(m) * nu);
  for (std::int64_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < nu; ++j) {
      comps_flat[static_cast<std::size_t>(i) * nu + j] =
          static_cast<double>(comps[static_cast<std::size_t>(i)][j]) / grid.resolution;
    }
  }

  std::int64_t total = 1;
  for (std::size_t r = 0; r < nx; ++r) {
    if (total > std::numeric_limits<std::int64_t>::max() / m) {
      throw std::invalid_argument("grid resolution too large: candidate count overflows");
    }
    total *= m;
  }

  // One flat pass over every candidate with a plain odometer; no threading.
  BestCandidate best;
  std::vector<double> w(nx * nu), cell(nx);
  std::vector<std::int64_t> digits(nx, 0);
  for (std::size_t r = 0; r < nx; ++r) {
    std::copy(comps_flat.begin(), comps_flat.begin() + static_cast<std::int64_t>(nu),
              w.begin() + static_cast<std::int64_t>(r * nu));
  }
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const CandidateScore s = score_channel(p_xy, d, target_distortion, w, cell);
    if (s.feasible && candidate_improves(best, s.cond_entropy, idx)) {
      best.cond_entropy = s.cond_entropy;
      best.index = idx;
    }
    for (std::size_t r = nx; r-- > 0;) {
      if (++digits[r] < m) {
        std::copy(comps_flat.begin() + digits[r] * static_cast<std::int64_t>(nu),
                  comps_flat.begin() + (digits[r] + 1) * static_cast<std::int64_t>(nu),
                  w.begin() + static_cast<std::int64_t>(r * nu));
        break;
      }
      digits[r] = 0;
      std::copy(comps_flat.begin(), comps_flat.begin() + static_cast<std::int64_t>(nu),
                w.begin() + static_cast<std::int64_t>(r * nu));
    }
  }

  if (best.index < 0) {
    throw InfeasibleDistortionError("no grid channel met the distortion target");
  }
  std::vector<double> wbest = decode_candidate(comps_flat, m, nx, nu, best.index);
  const double h = refine_channel(p_xy, d, target_distortion, grid, wbest, best.cond_entropy);
  return finalize_solution(p_xy, d, wbest, h);
}

double rho1_oracle(const JointPmf& p_xy, const DistortionMatrix& d, double target_distortion,
                   const GridSpec& grid) {
  const WzSolution solution = wz_rate_oracle(p_xy, d, target_distortion, grid);
  return conditional_entropy(p_xy) + conditional_entropy(p_xy.transposed()) - solution.rate;
}

}  // namespace wzgain
