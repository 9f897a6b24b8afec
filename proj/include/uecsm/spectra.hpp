#pragma once

#include <span>
#include <vector>

#include "uecsm/matcore.hpp"

namespace uecsm {

inline constexpr double kDefaultDistinctTol = 1e-6;

/// Distinct eigenvalues of T with paired unit eigenvectors x_i of T and y_i
/// of T* (for conj(lambda_i)).
struct SpectralData {
  std::size_t n = 0;
  CVector eigenvalues;
  std::vector<CVector> x_vecs;
  std::vector<CVector> y_vecs;
  double gap = 0.0;

  CMatrix x_matrix() const { return CMatrix::from_columns(x_vecs); }
  CMatrix y_matrix() const { return CMatrix::from_columns(y_vecs); }
};

/// Eigensystem of a matrix with distinct eigenvalues.
///
/// Eigenvalues are sorted by (real, imag). Each eigenvector is a unit vector
/// whose first non-negligible component is real and positive. Throws
/// DegenerateSpectrum when the minimum eigenvalue gap is at most
/// distinct_tol * max(1, ||T||_F), NoConvergence when the root finder or
/// the eigenvector refinement fails. Accuracy is guaranteed for n <= 4.
SpectralData eigensystem(const CMatrix& t, double distinct_tol = kDefaultDistinctTol);

/// Coefficients of det(lambda I - T), highest degree first (leading 1),
/// by the Faddeev-LeVerrier recursion.
CVector characteristic_polynomial(const CMatrix& t);

/// Horner evaluation; coefficients highest degree first.
Complex polyval(std::span<const Complex> coeffs, Complex z);

/// Roots of a monic polynomial by Durand-Kerner iteration.
///
/// Runs at most max_iters sweeps per attempt and restarts from perturbed
/// starting points; throws NoConvergence if no attempt converges.
CVector polynomial_roots(std::span<const Complex> coeffs, int max_iters = 200);

/// Unit vector spanning the numerical kernel of (a - shift I), found by
/// inverse iteration.
CVector kernel_vector(const CMatrix& a, Complex shift, int refinements = 2);

}  // namespace uecsm
