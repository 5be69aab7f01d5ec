#pragma once

#include <cstddef>
#include <vector>

namespace wzgain {

using Prob = double;
using Bits = double;

// Absolute tolerance on probability sums.  Inputs whose total (or row sum)
// deviates from 1 by at most this much are renormalized; anything further
// off is rejected as a user error rather than silently fixed.
inline constexpr double kPmfSumTolerance = 1e-12;

// Probability vector over one finite alphabet.
class FinitePmf {
 public:
  explicit FinitePmf(std::vector<double> probs);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

// Joint probability matrix over a pair of finite alphabets, row-major.
class JointPmf {
 public:
  JointPmf(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  const std::vector<double>& values() const { return values_; }

  FinitePmf marginal_rows() const;  // sums out the column variable
  FinitePmf marginal_cols() const;  // sums out the row variable
  JointPmf transposed() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

// Row-stochastic conditional pmf: one row per conditioning symbol (or per
// conditioning tuple, flattened row-major over the conditioning alphabets).
class Channel {
 public:
  Channel(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

// Per-letter distortion d(x, xhat); entries are nonnegative reals or +inf.
// Every source row must offer at least one finite reproduction, otherwise no
// decoder can reach finite expected distortion.
class DistortionMatrix {
 public:
  DistortionMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double at(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }
  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

// Joint pmf over up to four finite alphabets, flat row-major storage
// (last axis fastest).
class MultiwayPmf {
 public:
  MultiwayPmf(std::vector<std::size_t> dims, std::vector<double> values);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t axis_count() const { return dims_.size(); }
  std::size_t cell_count() const { return values_.size(); }
  double operator[](std::size_t flat) const { return values_[flat]; }
  const std::vector<double>& values() const { return values_; }

  // Strides for flattened indexing (stride of the last axis is 1).
  const std::vector<std::size_t>& strides() const { return strides_; }

 private:
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::vector<double> values_;
};

}  // namespace wzgain
