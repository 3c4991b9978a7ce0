#pragma once

#include <cstdint>
#include <optional>

#include "strata/numerics.hpp"

namespace strata {

// Symmetric positive-definite fiber metric.
struct Metric {
  Mat g;

  Eigen::Index dim() const { return g.rows(); }
};

// Validated J with J^2 = -1; optionally certified compatible with a metric.
struct ComplexStructure {
  Mat j;
  std::optional<Metric> compatible_with;

  Eigen::Index dim() const { return j.rows(); }   // 2n
  Eigen::Index n() const { return j.rows() / 2; }
  bool metric() const { return compatible_with.has_value(); }
};

struct Seed {
  std::uint64_t value = 0;
};

// Deterministic, platform-independent generator (xorshift-based uniforms,
// Box-Muller gaussians). All sampling in the library is seed-explicit.
class SeededRng {
public:
  explicit SeededRng(Seed seed);

  std::uint64_t next_u64();
  double uniform();   // [0, 1)
  double gaussian();  // standard normal
  Mat gaussian_matrix(Eigen::Index rows, Eigen::Index cols);

private:
  std::uint64_t state_[4];
  bool has_cached_ = false;
  double cached_ = 0.0;
};

// Structural residuals accepted by validate(); J^2 = -1 and metric
// compatibility are checked against these fixed thresholds.
constexpr double kSquareResidualTol = 1e-10;
constexpr double kMetricResidualTol = 1e-10;
constexpr double kMetricSymmetryTol = 1e-12;

Metric validate_metric(const Mat& g);

// Checks j^2 = -I (and j^t g j = g when a metric is supplied); throws
// NotAComplexStructure / NotMetricCompatible with the residual in the message.
ComplexStructure validate(const Mat& j, const std::optional<Metric>& g = std::nullopt,
                          const Tolerance& tol = {});

// Standard block structure [[0, -I], [I, 0]] on R^{2n}.
Mat standard_j0(int n);

// Random element of C(V): conjugate of J0 by a seeded invertible matrix with
// condition number <= 100.
ComplexStructure random_C(int n, Seed seed);

// Random g-compatible structure: J0 conjugated by a seeded g-orthogonal matrix.
ComplexStructure random_T(int n, const Metric& g, Seed seed);

// +1 iff both structures induce the same orientation, via the sign of the
// determinant of a (v, Jv, ...) adapted basis for each.
int orientation_sign(const ComplexStructure& j, const ComplexStructure& reference);

// Symmetric square root of the metric and its inverse; maps g-orthonormal
// computations to Euclidean ones.
struct MetricSqrt {
  Mat s;      // g^{1/2}
  Mat s_inv;  // g^{-1/2}
};
MetricSqrt metric_sqrt(const Metric& g);

}  // namespace strata
