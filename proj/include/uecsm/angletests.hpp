#pragma once

#include <optional>
#include <vector>

#include "uecsm/matcore.hpp"
#include "uecsm/spectra.hpp"
#include "uecsm/verdict.hpp"

namespace uecsm {

struct PairDeviation {
  std::size_t i = 0;
  std::size_t j = 0;
  double value = 0.0;
};

struct TripleDeviation {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  double value = 0.0;
};

struct AngleReport {
  Verdict verdict;
  std::vector<PairDeviation> pair_deviations;
  std::vector<TripleDeviation> triple_deviations;
};

/// Floor of the relative normalization max(floor, |lhs|, |rhs|) used for
/// triple-product deviations. Triple products of unit vectors are bounded by
/// one, so tiny products are compared on an absolute scale.
inline constexpr double kTripleFloor = 1e-3;

/// Vanishing threshold for pairwise eigenvector inner products.
inline constexpr double kOrthogonalThreshold = 1e-10;

/// Weak angle test: | |<x_i,x_j>| - |<y_i,y_j>| | for all i < j.
AngleReport wat(const SpectralData& s, double tol = kDefaultTol);

/// Strong angle test: <x_i,x_j><x_j,x_k><x_k,x_i> equals the conjugate of the
/// corresponding y-product for all i <= j <= k.
AngleReport sat(const SpectralData& s, double tol = kDefaultTol);

/// Linear strong angle test: same triples, no conjugation.
AngleReport lsat(const SpectralData& s, double tol = kDefaultTol);

/// 3x3 determinant criterion det X*X = prod (1 - |<x_i,x_j>|^2).
///
/// Requires all pairwise <x_i,x_j> to be non-vanishing; throws
/// OrthogonalEigenvectors otherwise. The residual list also carries the
/// biorthogonality identities det X*X = |<x_i,y_i>|^2 (1 - |<x_j,x_k>|^2) and
/// det Y*Y = |<x_1,y_1>|^2 (1 - |<y_2,y_3>|^2), which hold for every matrix
/// with distinct eigenvalues.
Verdict det_criterion_3(const SpectralData& s, double tol = kDefaultTol);

struct AngleSuite {
  SpectralData spectrum;
  AngleReport wat;
  AngleReport sat;
  AngleReport lsat;
  std::optional<Verdict> det3;
  /// Decided by the SAT; WAT and LSAT are diagnostics.
  bool uecsm = false;
};

/// Runs eigensystem, then WAT, SAT, LSAT (and the determinant criterion for
/// n = 3). Propagates DegenerateSpectrum.
AngleSuite angle_suite(const CMatrix& t, double tol = kDefaultTol,
                       double distinct_tol = kDefaultDistinctTol);

}  // namespace uecsm
