#pragma once

#include <utility>
#include <vector>

#include "strata/structures.hpp"

namespace strata {

// (m1, m_minus1, s) with 2*m1 = dim ker(J+K), 2*m_minus1 = dim ker(J-K),
// 2*s = rank [J,K]; k = s/2 in the metric case.
struct StratumSignature {
  int n = 0;
  int m1 = 0;
  int m_minus1 = 0;
  int s = 0;
  std::optional<int> k;
  bool same_orientation = true;

  bool operator==(const StratumSignature& o) const {
    return n == o.n && m1 == o.m1 && m_minus1 == o.m_minus1 && s == o.s;
  }
};

// One JK-eigenvalue block of Im[J,K]: {J,K} = 2e there, f = sqrt(1 - e^2).
struct EigenBlock {
  double e = 0.0;
  double f = 1.0;
  RealSubspace v_e;
};

// Orthogonal, J,K-invariant splitting V = Im[J,K] + ker(J+K) + ker(J-K),
// with Im[J,K] refined into the V_e blocks.
struct CanonicalDecomposition {
  std::vector<EigenBlock> blocks_e;
  RealSubspace v1;        // ker(J+K)
  RealSubspace v_minus1;  // ker(J-K)
  Mat p0, p1, pm1;        // g-orthogonal projectors, p0 + p1 + pm1 = I
  Mat j, k, g;
};

struct IDPoly {
  enum class Kind { TMinus1, TPlus1, Quadratic } kind = Kind::TMinus1;
  cplx c;  // unit-circle root, quadratic case only

  bool same(const IDPoly& o, double tol = 1e-6) const {
    if (kind != o.kind) return false;
    return kind != Kind::Quadratic || std::abs(c - o.c) <= tol;
  }
};

struct IDSummand {
  IDPoly p;
  int multiplicity = 0;
  std::vector<RealSubspace> carriers;  // 2-dim for t-+1, 4-dim for quadratics
};

struct IDInfinityDecomposition {
  std::vector<IDSummand> summands;
};

struct BundleMapReport {
  // Complex ranks of the five restricted maps:
  //  1) J+K : V01_K -> V01_J     2) J-K : V01_K -> V10_J
  //  3) J+K : V10_J -> V10_K     4) J-K : V01_J -> V10_K
  //  5) [J,K] : V01_K -> V10_K
  int rank[5] = {0, 0, 0, 0, 0};
  double containment_residual = 0.0;  // worst image-in-target defect
  bool metric_checked = false;
  double transpose_identity_residual = 0.0;  // (J+K) + g^{-1}(J+K)^t g
  double lowered_skew_residual = 0.0;        // g[J,K] + (g[J,K])^t
};

// (-i)- and (+i)-eigenspaces of K acting on the complexification.
ComplexSubspace eigenspace_01(const ComplexStructure& k);
ComplexSubspace eigenspace_10(const ComplexStructure& k);

StratumSignature classify_pair(const ComplexStructure& j, const ComplexStructure& k,
                               const Tolerance& tol = {});

CanonicalDecomposition canonical_decomposition(const ComplexStructure& j,
                                               const ComplexStructure& k, const Metric& g,
                                               const Tolerance& tol = {});

// J' = (JK - e)/f on the requested block, in the block basis; anticommutes
// with the restrictions of both J and K.
Mat quaternionic_frame(const CanonicalDecomposition& dec, int block_index);

IDInfinityDecomposition decompose_iD_infinity(const ComplexStructure& j,
                                              const ComplexStructure& k, const Metric& g,
                                              const Tolerance& tol = {});

// (dim_C(V10_J ∩ V01_K), dim_C(V01_J ∩ V01_K)); equals (m1, m_minus1).
std::pair<int, int> eigenspace_intersection_dims(const ComplexStructure& j,
                                                 const ComplexStructure& k,
                                                 const Tolerance& tol = {});

BundleMapReport bundle_map_ranks(const ComplexStructure& j, const ComplexStructure& k,
                                 const Tolerance& tol = {});

// True when both carry certified metrics agreeing within tolerance.
bool shared_metric(const ComplexStructure& j, const ComplexStructure& k);

}  // namespace strata
