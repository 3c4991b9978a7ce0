#include "strata/numerics.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace strata {

namespace {

template <typename MatT>
int rank_tol_impl(const MatT& m, const Tolerance& tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<MatT> svd(m);
  const auto& sv = svd.singularValues();
  const double thresh = tol.threshold(sv(0));
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++r;
  return r;
}

template <typename MatT>
BasicSubspace<typename MatT::Scalar> kernel_impl(const MatT& m, const Tolerance& tol) {
  using Scalar = typename MatT::Scalar;
  BasicSubspace<Scalar> out;
  out.ambient = m.cols();
  if (m.cols() == 0) {
    out.basis.resize(0, 0);
    return out;
  }
  Eigen::JacobiSVD<MatT> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double thresh = sv.size() ? tol.threshold(sv(0)) : 0.0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++rank;
  out.basis = svd.matrixV().rightCols(m.cols() - rank);
  return out;
}

template <typename MatT>
BasicSubspace<typename MatT::Scalar> span_impl(const MatT& columns, const Tolerance& tol) {
  using Scalar = typename MatT::Scalar;
  BasicSubspace<Scalar> out;
  out.ambient = columns.rows();
  if (columns.cols() == 0 || columns.rows() == 0) {
    out.basis.resize(out.ambient, 0);
    return out;
  }
  Eigen::JacobiSVD<MatT> svd(columns, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double thresh = tol.threshold(sv(0));
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++rank;
  out.basis = svd.matrixU().leftCols(rank);
  return out;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> identity_like(Eigen::Index n) {
  return Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n);
}

template <typename Scalar>
Vec cosines_impl(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b) {
  if (a.dim() == 0 || b.dim() == 0) return Vec::Zero(0);
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m = a.basis.adjoint() * b.basis;
  Eigen::JacobiSVD<decltype(m)> svd(m);
  return svd.singularValues();
}

// Principal-angle cosine above this counts as a shared direction.
constexpr double kIntersectCos = 1.0 - 1e-8;

template <typename Scalar>
BasicSubspace<Scalar> intersect_impl(const BasicSubspace<Scalar>& a, const BasicSubspace<Scalar>& b,
                                     const Tolerance& tol) {
  if (a.ambient != b.ambient)
    throw DimensionMismatch("intersect: ambient dimensions differ");
  BasicSubspace<Scalar> out;
  out.ambient = a.ambient;
  Vec cos = cosines_impl(a, b);
  int dim = 0;
  for (Eigen::Index i = 0; i < cos.size(); ++i)
    if (cos(i) >= kIntersectCos) ++dim;
  if (dim == 0) {
    out.basis.resize(a.ambient, 0);
    return out;
  }
  using MatT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  MatT stacked(2 * a.ambient, a.ambient);
  stacked.topRows(a.ambient) = identity_like<Scalar>(a.ambient) - a.projector();
  stacked.bottomRows(a.ambient) = identity_like<Scalar>(a.ambient) - b.projector();
  Eigen::JacobiSVD<MatT> svd(stacked, Eigen::ComputeFullV);
  out.basis = svd.matrixV().rightCols(dim);
  (void)tol;
  return out;
}

void pade(const Mat& a, int order, Mat& u, Mat& v) {
  static const double b3[] = {120., 60., 12., 1.};
  static const double b5[] = {30240., 15120., 3360., 420., 30., 1.};
  static const double b7[] = {17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.};
  static const double b9[] = {17643225600., 8821612800., 2075673600., 302702400.,
                              30270240.,   2162160.,    110880.,     3960.,
                              90.,         1.};
  const Eigen::Index n = a.rows();
  const Mat id = Mat::Identity(n, n);
  const Mat a2 = a * a;
  switch (order) {
    case 3: {
      u = a * (b3[3] * a2 + b3[1] * id);
      v = b3[2] * a2 + b3[0] * id;
      return;
    }
    case 5: {
      const Mat a4 = a2 * a2;
      u = a * (b5[5] * a4 + b5[3] * a2 + b5[1] * id);
      v = b5[4] * a4 + b5[2] * a2 + b5[0] * id;
      return;
    }
    case 7: {
      const Mat a4 = a2 * a2;
      const Mat a6 = a4 * a2;
      u = a * (b7[7] * a6 + b7[5] * a4 + b7[3] * a2 + b7[1] * id);
      v = b7[6] * a6 + b7[4] * a4 + b7[2] * a2 + b7[0] * id;
      return;
    }
    default: {
      const Mat a4 = a2 * a2;
      const Mat a6 = a4 * a2;
      const Mat a8 = a6 * a2;
      u = a * (b9[9] * a8 + b9[7] * a6 + b9[5] * a4 + b9[3] * a2 + b9[1] * id);
      v = b9[8] * a8 + b9[6] * a6 + b9[4] * a4 + b9[2] * a2 + b9[0] * id;
      return;
    }
  }
}

void pade13(const Mat& a, Mat& u, Mat& v) {
  static const double b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                             1187353796428800.,  129060195264000.,   10559470521600.,
                             670442572800.,      33522128640.,       1323241920.,
                             40840800.,          960960.,            16380.,
                             182.,               1.};
  const Eigen::Index n = a.rows();
  const Mat id = Mat::Identity(n, n);
  const Mat a2 = a * a;
  const Mat a4 = a2 * a2;
  const Mat a6 = a4 * a2;
  u = a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 + b[3] * a2 +
           b[1] * id);
  v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
}

}  // namespace

int rank_tol(const Mat& m, const Tolerance& tol) { return rank_tol_impl(m, tol); }
int rank_tol(const CMat& m, const Tolerance& tol) { return rank_tol_impl(m, tol); }

RealSubspace kernel(const Mat& m, const Tolerance& tol) { return kernel_impl(m, tol); }
ComplexSubspace kernel(const CMat& m, const Tolerance& tol) { return kernel_impl(m, tol); }

RealSubspace span_of(const Mat& columns, const Tolerance& tol) { return span_impl(columns, tol); }
ComplexSubspace span_of(const CMat& columns, const Tolerance& tol) {
  return span_impl(columns, tol);
}

RealSubspace complement(const RealSubspace& s) {
  if (s.dim() == 0) {
    RealSubspace out;
    out.ambient = s.ambient;
    out.basis = Mat::Identity(s.ambient, s.ambient);
    return out;
  }
  return kernel(Mat(s.basis.transpose()));
}

ComplexSubspace complement(const ComplexSubspace& s) {
  if (s.dim() == 0) {
    ComplexSubspace out;
    out.ambient = s.ambient;
    out.basis = CMat::Identity(s.ambient, s.ambient);
    return out;
  }
  return kernel(CMat(s.basis.adjoint()));
}

ComplexSubspace complement_in(const ComplexSubspace& inner, const ComplexSubspace& outer,
                              const Tolerance& tol) {
  if (inner.ambient != outer.ambient)
    throw DimensionMismatch("complement_in: ambient dimensions differ");
  CMat residual = outer.basis - inner.projector() * outer.basis;
  return span_of(residual, Tolerance{std::max(tol.rel, 1e-8), tol.abs});
}

Vec principal_angle_cosines(const ComplexSubspace& a, const ComplexSubspace& b) {
  return cosines_impl(a, b);
}
Vec principal_angle_cosines(const RealSubspace& a, const RealSubspace& b) {
  return cosines_impl(a, b);
}

RealSubspace intersect(const RealSubspace& a, const RealSubspace& b, const Tolerance& tol) {
  return intersect_impl(a, b, tol);
}
ComplexSubspace intersect(const ComplexSubspace& a, const ComplexSubspace& b,
                          const Tolerance& tol) {
  return intersect_impl(a, b, tol);
}

Mat expm(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("expm: matrix must be square");
  require_finite(m, "expm");
  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm
  Mat u, v;
  int squarings = 0;
  if (norm < 1.495585217958292e-2) {
    pade(m, 3, u, v);
  } else if (norm < 2.539398330063230e-1) {
    pade(m, 5, u, v);
  } else if (norm < 9.504178996162932e-1) {
    pade(m, 7, u, v);
  } else if (norm < 2.097847961257068e0) {
    pade(m, 9, u, v);
  } else {
    const double theta13 = 5.371920351148152e0;
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / theta13))));
    Mat scaled = m / std::ldexp(1.0, squarings);
    pade13(scaled, u, v);
  }
  Mat num = v + u;
  Mat den = v - u;
  Mat result = den.partialPivLu().solve(num);
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

double projector_distance(const ComplexSubspace& a, const ComplexSubspace& b) {
  return (a.projector() - b.projector()).norm();
}
double projector_distance(const RealSubspace& a, const RealSubspace& b) {
  return (a.projector() - b.projector()).norm();
}

bool is_orthonormal(const RealSubspace& s, double tol) {
  if (s.dim() == 0) return true;
  Mat gram = s.basis.transpose() * s.basis;
  return (gram - Mat::Identity(s.dim(), s.dim())).norm() <= tol;
}

bool is_orthonormal(const ComplexSubspace& s, double tol) {
  if (s.dim() == 0) return true;
  CMat gram = s.basis.adjoint() * s.basis;
  return (gram - CMat::Identity(s.dim(), s.dim())).norm() <= tol;
}

CMat complexify(const Mat& m) { return m.cast<cplx>(); }

ComplexSubspace conjugate(const ComplexSubspace& s) {
  ComplexSubspace out;
  out.ambient = s.ambient;
  out.basis = s.basis.conjugate();
  return out;
}

ComplexSubspace direct_sum(const ComplexSubspace& a, const ComplexSubspace& b,
                           const Tolerance& tol) {
  if (a.ambient != b.ambient)
    throw DimensionMismatch("direct_sum: ambient dimensions differ");
  CMat cols(a.ambient, a.dim() + b.dim());
  cols << a.basis, b.basis;
  ComplexSubspace out = span_of(cols, tol);
  if (out.dim() != a.dim() + b.dim())
    throw NumericalInconsistency("direct_sum: summands are not transverse");
  return out;
}

void require_finite(const Mat& m, const char* what) {
  if (!m.allFinite()) throw Error(ErrorKind::Validation, std::string(what) + ": non-finite entries");
}
void require_finite(const CMat& m, const char* what) {
  if (!m.allFinite()) throw Error(ErrorKind::Validation, std::string(what) + ": non-finite entries");
}

}  // namespace strata
