#include "wzgain/types.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>

#include "wzgain/numeric.hpp"

namespace wzgain {
namespace {

double checked_sum(const std::vector<double>& values, const char* what) {
  NeumaierSum sum;
  for (double v : values) {
    if (std::isnan(v) || v < 0.0) {
      throw std::invalid_argument(std::string(what) + " has a negative or NaN entry");
    }
    sum.add(v);
  }
  return sum.value();
}

// Validates that `values` sums to 1 within tolerance and renormalizes the
// (at most 1e-12) residual away.  Throws on anything further off.
void normalize_pmf(std::vector<double>& values, const char* what) {
  double sum = checked_sum(values, what);
  if (std::abs(sum - 1.0) > kPmfSumTolerance) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s sums to %.17g, outside 1 +/- 1e-12", what, sum);
    throw std::invalid_argument(buf);
  }
  if (sum != 1.0 && sum > 0.0) {
    for (double& v : values) v /= sum;
  }
}

}  // namespace

FinitePmf::FinitePmf(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("pmf must not be empty");
  normalize_pmf(probs_, "pmf");
}

JointPmf::JointPmf(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("joint pmf needs positive alphabet sizes");
  if (values_.size() != rows_ * cols_) throw std::invalid_argument("joint pmf value count does not match alphabet sizes");
  normalize_pmf(values_, "joint pmf");
}

FinitePmf JointPmf::marginal_rows() const {
  std::vector<double> m(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r) {
    NeumaierSum s;
    for (std::size_t c = 0; c < cols_; ++c) s.add(at(r, c));
    m[r] = s.value();
  }
  return FinitePmf(std::move(m));
}

FinitePmf JointPmf::marginal_cols() const {
  std::vector<double> m(cols_, 0.0);
  for (std::size_t c = 0; c < cols_; ++c) {
    NeumaierSum s;
    for (std::size_t r = 0; r < rows_; ++r) s.add(at(r, c));
    m[c] = s.value();
  }
  return FinitePmf(std::move(m));
}

JointPmf JointPmf::transposed() const {
  std::vector<double> t(values_.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t[c * rows_ + r] = at(r, c);
  return JointPmf(cols_, rows_, std::move(t));
}

Channel::Channel(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("channel needs positive alphabet sizes");
  if (values_.size() != rows_ * cols_) throw std::invalid_argument("channel value count does not match alphabet sizes");
  for (std::size_t r = 0; r < rows_; ++r) {
    std::vector<double> row(values_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                            values_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    normalize_pmf(row, "channel row");
    for (std::size_t c = 0; c < cols_; ++c) values_[r * cols_ + c] = row[c];
  }
}

DistortionMatrix::DistortionMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ == 0 || cols_ == 0) throw std::invalid_argument("distortion matrix needs positive alphabet sizes");
  if (values_.size() != rows_ * cols_) throw std::invalid_argument("distortion value count does not match alphabet sizes");
  for (std::size_t r = 0; r < rows_; ++r) {
    bool has_finite = false;
    for (std::size_t c = 0; c < cols_; ++c) {
      double v = at(r, c);
      if (std::isnan(v) || v < 0.0) throw std::invalid_argument("distortion entries must be nonnegative or +inf");
      if (std::isfinite(v)) has_finite = true;
    }
    if (!has_finite) throw std::invalid_argument("distortion matrix has a source row with no finite reproduction");
  }
}

MultiwayPmf::MultiwayPmf(std::vector<std::size_t> dims, std::vector<double> values)
    : dims_(std::move(dims)), values_(std::move(values)) {
  if (dims_.empty() || dims_.size() > 4) throw std::invalid_argument("multiway pmf supports 1 to 4 axes");
  std::size_t total = 1;
  for (std::size_t d : dims_) {
    if (d == 0) throw std::invalid_argument("multiway pmf needs positive alphabet sizes");
    total *= d;
  }
  if (values_.size() != total) throw std::invalid_argument("multiway pmf value count does not match alphabet sizes");
  normalize_pmf(values_, "multiway pmf");
  strides_.assign(dims_.size(), 1);
  for (std::size_t i = dims_.size(); i-- > 1;) {
    strides_[i - 1] = strides_[i] * dims_[i];
  }
}

}  // namespace wzgain
