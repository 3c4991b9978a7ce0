#include "strata/structures.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace strata {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double condition_number(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 0) return std::numeric_limits<double>::infinity();
  return sv(0) / sv(sv.size() - 1);
}

}  // namespace

SeededRng::SeededRng(Seed seed) {
  std::uint64_t x = seed.value;
  for (auto& s : state_) s = splitmix64(x);
}

std::uint64_t SeededRng::next_u64() {
  // xoshiro256**
  auto rotl = [](std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); };
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double SeededRng::uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

double SeededRng::gaussian() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  double u1 = 0.0;
  while (u1 == 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  cached_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

Mat SeededRng::gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = gaussian();
  return m;
}

Metric validate_metric(const Mat& g) {
  require_finite(g, "metric");
  if (g.rows() != g.cols()) throw DimensionMismatch("metric must be square");
  const double scale = std::max(1.0, g.norm());
  const double sym = (g - g.transpose()).norm() / scale;
  if (sym > kMetricSymmetryTol) {
    std::ostringstream msg;
    msg << "metric not symmetric, residual " << sym;
    throw Error(ErrorKind::Validation, msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (g + g.transpose()));
  if (es.eigenvalues()(0) <= 0) {
    std::ostringstream msg;
    msg << "metric not positive definite, smallest eigenvalue " << es.eigenvalues()(0);
    throw Error(ErrorKind::Validation, msg.str());
  }
  return Metric{g};
}

ComplexStructure validate(const Mat& j, const std::optional<Metric>& g, const Tolerance&) {
  require_finite(j, "complex structure");
  if (j.rows() != j.cols()) throw DimensionMismatch("complex structure must be square");
  if (j.rows() % 2 != 0) throw DimensionMismatch("complex structure needs even dimension");
  const Eigen::Index d = j.rows();
  const double scale = std::max(1.0, j.squaredNorm());
  const double square_resid = (j * j + Mat::Identity(d, d)).norm() / scale;
  if (square_resid > kSquareResidualTol) {
    std::ostringstream msg;
    msg << "J^2 != -I, residual " << square_resid;
    throw NotAComplexStructure(msg.str());
  }
  ComplexStructure out;
  out.j = j;
  if (g) {
    if (g->dim() != d) throw DimensionMismatch("metric dimension mismatch");
    const double gscale = std::max(1.0, (j.transpose() * g->g * j).norm());
    const double resid = (j.transpose() * g->g * j - g->g).norm() / gscale;
    if (resid > kMetricResidualTol) {
      std::ostringstream msg;
      msg << "J^t g J != g, residual " << resid;
      throw NotMetricCompatible(msg.str());
    }
    out.compatible_with = *g;
  }
  return out;
}

Mat standard_j0(int n) {
  Mat j = Mat::Zero(2 * n, 2 * n);
  j.block(0, n, n, n) = -Mat::Identity(n, n);
  j.block(n, 0, n, n) = Mat::Identity(n, n);
  return j;
}

ComplexStructure random_C(int n, Seed seed) {
  if (n < 1) throw InvalidRequest("random_C: n must be >= 1");
  SeededRng rng(seed);
  const Mat j0 = standard_j0(n);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Mat p = rng.gaussian_matrix(2 * n, 2 * n);
    if (condition_number(p) > 100.0) continue;
    Mat j = p * j0 * p.partialPivLu().solve(Mat::Identity(2 * n, 2 * n));
    return validate(j);
  }
  throw NumericalInconsistency("random_C: no well-conditioned conjugator found");
}

ComplexStructure random_T(int n, const Metric& g, Seed seed) {
  if (n < 1) throw InvalidRequest("random_T: n must be >= 1");
  Metric gm = validate_metric(g.g);
  if (gm.dim() != 2 * n) throw DimensionMismatch("random_T: metric dimension mismatch");
  SeededRng rng(seed);
  // Haar-style orthogonal factor: QR of a gaussian matrix with sign fixing.
  Mat a = rng.gaussian_matrix(2 * n, 2 * n);
  Eigen::HouseholderQR<Mat> qr(a);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < 2 * n; ++i)
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  Mat j_orth = q * standard_j0(n) * q.transpose();
  MetricSqrt ms = metric_sqrt(gm);
  Mat j = ms.s_inv * j_orth * ms.s;
  return validate(j, gm);
}

int orientation_sign(const ComplexStructure& j, const ComplexStructure& reference) {
  if (j.dim() != reference.dim()) throw DimensionMismatch("orientation_sign: dimension mismatch");
  auto adapted_det_sign = [](const Mat& jm) {
    const Eigen::Index d = jm.rows();
    Mat basis(d, d);
    Eigen::Index filled = 0;
    RealSubspace span;
    span.ambient = d;
    span.basis = Mat(d, 0);
    for (Eigen::Index cand = 0; cand < d && filled < d; ++cand) {
      Vec v = Vec::Zero(d);
      v(cand) = 1.0;
      v -= span.projector() * v;
      if (v.norm() < 1e-8) continue;
      v.normalize();
      basis.col(filled) = v;
      basis.col(filled + 1) = jm * v;
      Mat cols(d, span.dim() + 2);
      cols << span.basis, v, jm * v;
      span = span_of(cols);
      filled += 2;
    }
    if (filled != d) throw NumericalInconsistency("orientation_sign: adapted basis incomplete");
    const double det = basis.determinant();
    return det >= 0 ? 1 : -1;
  };
  return adapted_det_sign(j.j) * adapted_det_sign(reference.j);
}

MetricSqrt metric_sqrt(const Metric& g) {
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (g.g + g.g.transpose()));
  Vec l = es.eigenvalues();
  Mat q = es.eigenvectors();
  Vec sqrt_l = l.cwiseSqrt();
  MetricSqrt out;
  out.s = q * sqrt_l.asDiagonal() * q.transpose();
  out.s_inv = q * sqrt_l.cwiseInverse().asDiagonal() * q.transpose();
  return out;
}

}  // namespace strata
