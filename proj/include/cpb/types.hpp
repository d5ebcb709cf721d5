#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <vector>

namespace cpb {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using PointList = std::vector<Vec>;

/// Relative tolerances shared by the kernel. Absolute thresholds are
/// obtained by multiplying with the magnitude of the data involved.
struct Tolerance {
  double rel = 1e-9;              // generic geometric comparisons
  double merge_angle = 1e-8;      // coplanar facet merging, atom merging (rad)
  double merge_offset = 1e-9;     // coplanar facet merging, offsets
  double atom_drop = 1e-12;       // weights below this fraction of total mass
  double negativity = 1e-7;       // clamp window for cancellation noise
};

inline constexpr Tolerance kTol{};

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input whose affine hull has lower dimension than required.
class DimensionError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Malformed arguments: arity, mismatched dimensions, out-of-range indices.
class InvalidArgument : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// A quantity that is nonnegative in theory came out negative beyond noise.
class NumericalError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class SolverError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

}  // namespace cpb
