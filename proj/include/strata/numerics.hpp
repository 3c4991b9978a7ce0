#pragma once

#include <Eigen/Dense>
#include <complex>

#include "strata/errors.hpp"

namespace strata {

using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using cplx = std::complex<double>;

// Relative/absolute pair used by every rank and kernel decision.
// Singular values above rel * sigma_max + abs count toward the rank.
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;

  double threshold(double sigma_max) const { return rel * sigma_max + abs; }
};

// Subspace of R^N or C^N carried by an orthonormal column basis.
template <typename Scalar>
struct BasicSubspace {
  Eigen::Index ambient = 0;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> basis;  // ambient x dim, orthonormal

  Eigen::Index dim() const { return basis.cols(); }

  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> projector() const {
    if (dim() == 0)
      return Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(ambient, ambient);
    return basis * basis.adjoint();
  }
};

using RealSubspace = BasicSubspace<double>;
using ComplexSubspace = BasicSubspace<cplx>;

int rank_tol(const Mat& m, const Tolerance& tol = {});
int rank_tol(const CMat& m, const Tolerance& tol = {});

RealSubspace kernel(const Mat& m, const Tolerance& tol = {});
ComplexSubspace kernel(const CMat& m, const Tolerance& tol = {});

// Rank-revealing orthonormalization of the column span.
RealSubspace span_of(const Mat& columns, const Tolerance& tol = {});
ComplexSubspace span_of(const CMat& columns, const Tolerance& tol = {});

// Orthogonal complement inside the full ambient space.
RealSubspace complement(const RealSubspace& s);
ComplexSubspace complement(const ComplexSubspace& s);

// Orthogonal complement of `inner` inside `outer` (assumes inner is contained in outer).
ComplexSubspace complement_in(const ComplexSubspace& inner, const ComplexSubspace& outer,
                              const Tolerance& tol = {});

// Cosines of principal angles between two subspaces, descending.
Vec principal_angle_cosines(const ComplexSubspace& a, const ComplexSubspace& b);
Vec principal_angle_cosines(const RealSubspace& a, const RealSubspace& b);

// Intersection via the null space of the stacked complement projectors; the
// dimension is certified by principal-angle cosines above 1 - 1e-8.
RealSubspace intersect(const RealSubspace& a, const RealSubspace& b, const Tolerance& tol = {});
ComplexSubspace intersect(const ComplexSubspace& a, const ComplexSubspace& b,
                          const Tolerance& tol = {});

// Matrix exponential, scaling-and-squaring with diagonal Pade approximants.
Mat expm(const Mat& m);

// Frobenius distance between the orthogonal projectors of two subspaces
// (basis-independent equality measure).
double projector_distance(const ComplexSubspace& a, const ComplexSubspace& b);
double projector_distance(const RealSubspace& a, const RealSubspace& b);

bool is_orthonormal(const RealSubspace& s, double tol = 1e-8);
bool is_orthonormal(const ComplexSubspace& s, double tol = 1e-8);

CMat complexify(const Mat& m);
ComplexSubspace conjugate(const ComplexSubspace& s);

// Direct sum of subspace bases (columns concatenated, re-orthonormalized).
ComplexSubspace direct_sum(const ComplexSubspace& a, const ComplexSubspace& b,
                           const Tolerance& tol = {});

void require_finite(const Mat& m, const char* what);
void require_finite(const CMat& m, const char* what);

}  // namespace strata
