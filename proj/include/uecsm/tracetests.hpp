#pragma once

#include <array>
#include <vector>

#include "uecsm/matcore.hpp"
#include "uecsm/verdict.hpp"

namespace uecsm {

/// A tuple of word traces together with the degree of each defining word.
struct TraceSignature {
  enum class Kind { Phi3, Djokovic20, Psi7 };

  Kind kind;
  CVector values;
  std::vector<int> degrees;
};

/// Djokovic's twenty words w_1..w_20 in x and y; unitary equivalence of 4x4
/// matrices A, B holds iff tr w_i(A, A*) = tr w_i(B, B*) for all of them.
const std::array<Word, 20>& djokovic_words();

/// Degrees of the seven Psi products (letters counted in T and T*).
const std::array<int, 7>& psi_degrees();

/// Pearcy-Sibirskii signature of a 3x3 matrix:
/// (tr X, tr X^2, tr X^3, tr X*X, tr X*X^2, tr X*^2X^2, tr X*X^2X*^2X).
TraceSignature phi3(const CMatrix& t);

/// 3x3 criterion tr[T*T(T*T - TT*)TT*] = 0, residual normalized by ||T||_F^6.
Verdict trace_test_3(const CMatrix& t, double tol = kDefaultTol);

/// The twenty traces tr w_i(T, T*) for a 4x4 matrix.
TraceSignature djokovic_signature(const CMatrix& t);

/// Djokovic unitary-equivalence test for two 4x4 matrices.
///
/// Entry i passes when |tr w_i(A,A*) - tr w_i(B,B*)| <= tol * m^deg_i with
/// m = max(||A||_F, ||B||_F).
Verdict unitary_equivalence_4(const CMatrix& a, const CMatrix& b, double tol = kDefaultTol);

/// The seven traces Psi_1..Psi_7 of a 4x4 matrix, each evaluated from its
/// commutator form so the leading terms cancel before the trace is taken.
TraceSignature psi7(const CMatrix& t);

/// UECSM decision from the trace criteria.
///
/// n = 1, 2: always UECSM. n = 3: trace_test_3. n = 4: every normalized
/// |Psi_i(T)| / ||T||_F^deg_i within tol. Throws UnsupportedDimension for
/// n >= 5.
Verdict uecsm_verdict(const CMatrix& t, double tol = kDefaultTol);

/// Tests T unitarily equivalent to its transpose: Phi(T) vs Phi(T^t) for
/// n = 3, unitary_equivalence_4(T, T^t) for n = 4, trivially true for n <= 2.
Verdict transpose_equivalence(const CMatrix& t, double tol = kDefaultTol);

}  // namespace uecsm
