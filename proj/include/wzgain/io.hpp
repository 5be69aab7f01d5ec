#pragma once

// JSON loaders for source joints and distortion matrices.
//
// Input format: an object with `alphabet_sizes` (array of exactly two
// positive integers, [rows, cols]) and `values` (row-major array of
// rows*cols numbers).  Distortion matrices may additionally use the string
// token "inf" for +infinity entries.  Structural problems (unreadable file,
// malformed JSON, missing or ill-typed fields) throw IoError naming the
// offending part; values that parse but violate type invariants (e.g. a pmf
// that does not sum to 1) propagate the type's std::invalid_argument.

#include <string>

#include "wzgain/types.hpp"

namespace wzgain {

JointPmf load_joint_pmf(const std::string& path);

DistortionMatrix load_distortion_matrix(const std::string& path);

}  // namespace wzgain
