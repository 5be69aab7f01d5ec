#include "wzgain/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wzgain/numeric.hpp"

namespace wzgain {
namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;

// Shared core for the two-outcome forms.  Requires a, b > 0.  Returns
// a*log2((a+b)/a) + b*log2((a+b)/b) = (a+b) * h(a/(a+b)).
//
// The larger side is evaluated as big*log1p(small/big)/ln2: when small/big
// is tiny, the naive route log2(s) - log2(big) cancels to noise at absolute
// size ~1e-16*big, which would swamp the true value (~small*log2(big/small)).
// The smaller side's logs are well separated, so a plain difference is safe.
double pair_entropy_core(double a, double b) {
  double small = a, big = b;
  if (small > big) std::swap(small, big);
  double s = small + big;
  double t_big = big * (std::log1p(small / big) / kLn2);
  double t_small = small * (std::log2(s) - std::log2(small));
  return t_big + t_small;
}

}  // namespace

double entropy_of_ratio(double a, double b) {
  if (std::isnan(a) || std::isnan(b) || a < 0.0 || b < 0.0) {
    throw std::domain_error("entropy_of_ratio needs nonnegative arguments");
  }
  if (a == 0.0 && b == 0.0) {
    throw std::domain_error("entropy_of_ratio needs a + b > 0");
  }
  if (a == 0.0 || b == 0.0) return 0.0;
  return pair_entropy_core(a, b) / (a + b);
}

double binary_entropy(double theta) {
  if (std::isnan(theta) || theta < -1e-12 || theta > 1.0 + 1e-12) {
    throw std::domain_error("binary_entropy needs theta in [0, 1]");
  }
  theta = std::clamp(theta, 0.0, 1.0);
  if (theta == 0.0 || theta == 1.0) return 0.0;
  return pair_entropy_core(theta, 1.0 - theta) / (theta + (1.0 - theta));
}

double weighted_pair_entropy(double a, double b) {
  if (std::isnan(a) || std::isnan(b) || a < 0.0 || b < 0.0) {
    throw std::domain_error("weighted_pair_entropy needs nonnegative arguments");
  }
  if (a == 0.0 || b == 0.0) return 0.0;
  return pair_entropy_core(a, b);
}

double weighted_vector_entropy(const double* v, std::size_t n) {
  // Find the dominant entry and the exact-by-construction sum of the rest.
  std::size_t max_i = n;
  double max_v = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::isnan(v[i]) || v[i] < 0.0) {
      throw std::domain_error("weighted_vector_entropy needs nonnegative weights");
    }
    if (v[i] > max_v) {
      max_v = v[i];
      max_i = i;
    }
  }
  if (max_i == n || max_v == 0.0) return 0.0;
  NeumaierSum rest_sum;
  std::size_t positive = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] > 0.0) ++positive;
    if (i != max_i) rest_sum.add(v[i]);
  }
  if (positive <= 1) return 0.0;
  double rest = rest_sum.value();
  double total = max_v + rest;
  NeumaierSum out;
  // Dominant entry through log1p (see pair_entropy_core for the rationale).
  out.add(max_v * (std::log1p(rest / max_v) / kLn2));
  for (std::size_t i = 0; i < n; ++i) {
    if (i == max_i || v[i] == 0.0) continue;
    // total / v[i] >= 2 here, so the log difference has no cancellation.
    out.add(v[i] * (std::log2(total) - std::log2(v[i])));
  }
  return out.value();
}

double conditional_entropy(const JointPmf& joint) {
  // H(row|col) = sum_c (sum over the column's cells of v*log2(S_c/v)); the
  // outer P(c) weights are already inside the joint's cells.
  NeumaierSum h;
  std::vector<double> column(joint.rows());
  for (std::size_t c = 0; c < joint.cols(); ++c) {
    for (std::size_t r = 0; r < joint.rows(); ++r) column[r] = joint.at(r, c);
    h.add(weighted_vector_entropy(column.data(), column.size()));
  }
  return h.value();
}

namespace {

// Sums `pmf` down to the axes in `kept` (in the given order) and returns the
// flattened table over those axes.
std::vector<double> marginalize(const MultiwayPmf& pmf, const std::vector<std::size_t>& kept) {
  std::size_t kept_cells = 1;
  for (std::size_t axis : kept) kept_cells *= pmf.dims()[axis];
  std::vector<std::size_t> kept_strides(kept.size(), 1);
  for (std::size_t i = kept.size(); i-- > 1;) {
    kept_strides[i - 1] = kept_strides[i] * pmf.dims()[kept[i]];
  }
  std::vector<NeumaierSum> cells(kept_cells);
  const std::size_t n_axes = pmf.axis_count();
  std::vector<std::size_t> idx(n_axes, 0);
  for (std::size_t flat = 0; flat < pmf.cell_count(); ++flat) {
    std::size_t out = 0;
    for (std::size_t k = 0; k < kept.size(); ++k) out += idx[kept[k]] * kept_strides[k];
    cells[out].add(pmf[flat]);
    for (std::size_t a = n_axes; a-- > 0;) {
      if (++idx[a] < pmf.dims()[a]) break;
      idx[a] = 0;
    }
  }
  std::vector<double> result(kept_cells);
  for (std::size_t i = 0; i < kept_cells; ++i) result[i] = cells[i].value();
  return result;
}

// H(target | cond) from the joint: marginalizes onto target+cond axes, then
// sums the per-conditioning-cell weighted vector entropies.  The target axes
// are placed fastest so each conditioning cell is a contiguous block.
double grouped_conditional_entropy(const MultiwayPmf& pmf,
                                   const std::vector<std::size_t>& target,
                                   const std::vector<std::size_t>& cond) {
  std::vector<std::size_t> kept = cond;
  kept.insert(kept.end(), target.begin(), target.end());
  std::vector<double> table = marginalize(pmf, kept);
  std::size_t target_cells = 1;
  for (std::size_t axis : target) target_cells *= pmf.dims()[axis];
  NeumaierSum h;
  for (std::size_t base = 0; base < table.size(); base += target_cells) {
    h.add(weighted_vector_entropy(table.data() + base, target_cells));
  }
  return h.value();
}

}  // namespace

double conditional_mutual_information(const MultiwayPmf& pmf,
                                      const std::vector<std::size_t>& axes_a,
                                      const std::vector<std::size_t>& axes_b,
                                      const std::vector<std::size_t>& axes_c) {
  std::vector<int> seen(pmf.axis_count(), 0);
  auto mark = [&](const std::vector<std::size_t>& axes, const char* name) {
    for (std::size_t axis : axes) {
      if (axis >= pmf.axis_count()) {
        throw std::invalid_argument(std::string("partition axis out of range in group ") + name);
      }
      if (seen[axis]++) {
        throw std::invalid_argument(std::string("axis assigned twice in partition (group ") + name + ")");
      }
    }
  };
  mark(axes_a, "A");
  mark(axes_b, "B");
  mark(axes_c, "C");
  for (std::size_t a = 0; a < pmf.axis_count(); ++a) {
    if (!seen[a]) throw std::invalid_argument("partition must cover every axis of the pmf");
  }
  if (axes_a.empty() || axes_b.empty()) {
    throw std::invalid_argument("partition groups A and B must be nonempty");
  }

  std::vector<std::size_t> bc = axes_b;
  bc.insert(bc.end(), axes_c.begin(), axes_c.end());
  double h_a_given_c = grouped_conditional_entropy(pmf, axes_a, axes_c);
  double h_a_given_bc = grouped_conditional_entropy(pmf, axes_a, bc);
  double mi = h_a_given_c - h_a_given_bc;
  if (mi < 0.0 && mi > -1e-9) mi = 0.0;
  return mi;
}

double expected_distortion(const JointPmf& joint, const DistortionMatrix& d) {
  if (joint.rows() != d.rows() || joint.cols() != d.cols()) {
    throw std::invalid_argument("joint pmf and distortion matrix dimensions disagree");
  }
  NeumaierSum total;
  for (std::size_t r = 0; r < joint.rows(); ++r) {
    for (std::size_t c = 0; c < joint.cols(); ++c) {
      double p = joint.at(r, c);
      if (p == 0.0) continue;  // 0 * inf must not poison the sum
      double cost = d.at(r, c);
      if (std::isinf(cost)) return cost;
      total.add(p * cost);
    }
  }
  return total.value();
}

}  // namespace wzgain
