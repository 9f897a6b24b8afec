#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "uecsm/matcore.hpp"
#include "uecsm/verdict.hpp"

namespace uecsm {

/// Signature (k, n - k) of the Hermitian form
/// <v,w>_k = sum_{j<=k} v_j conj(w_j) - sum_{j>k} v_j conj(w_j).
struct Signature {
  int k = 0;
  int n = 0;

  Signature() = default;
  Signature(int positive, int total);

  int negative() const noexcept { return n - k; }
};

/// A = I_k (+) -I_{n-k}
CMatrix signature_matrix(const Signature& sig);

Complex indefinite_inner(std::span<const Complex> v, std::span<const Complex> w, const Signature& sig);

inline constexpr double kIsotropicThreshold = 1e-10;

/// Indefinite Gram-Schmidt.
///
/// Processes the vectors in order, normalizing each by |<v,v>_k|^(1/2), then
/// reorders the columns so the k positive ones come first and rescales the
/// last column by a unimodular phase so that det Q = 1. The result satisfies
/// Q* A Q = A. Throws IsotropicVector when a partial vector has
/// |<v,v>_k| < kIsotropicThreshold and SignatureMismatch when the sign
/// pattern does not match sig.
CMatrix indefinite_gram_schmidt(std::span<const CVector> vectors, const Signature& sig);

/// Residuals ||Q*AQ - A||_F and |det Q - 1|.
Verdict su_membership(const CMatrix& q, const Signature& sig, double tol = 1e-10);

/// Q diag(d) Q^{-1}. Throws RepeatedDiagonal or SingularMatrix.
CMatrix conjugated_diagonal(const CMatrix& q, std::span<const Complex> d);

struct TripleProduct {
  std::array<std::size_t, 3> ijk;  // 1-based
  Complex value;
  bool real = false;
};

/// Cyclic products <q_i,q_j><q_j,q_k><q_k,q_i> of the raw columns for i<j<k.
///
/// QDQ^{-1} with Q in SU(k, n-k) passes the SAT exactly when every such
/// product is real; positive column scaling does not change that.
std::vector<TripleProduct> sat_obstruction(const CMatrix& q, double tol = kDefaultTol);

inline const std::array<Complex, 4> kDefaultDiagonal{-1.0, 0.0, 1.0, 2.0};

struct Construction {
  CMatrix t;
  CMatrix q;
  CVector d;
  Signature sig;
  int attempts = 0;            // Gram-Schmidt inputs drawn
  int isotropic_restarts = 0;  // draws rejected as isotropic
  int sat_rejections = 0;      // draws rejected because the SAT held
  int conditioning_rejections = 0;
};

/// Builds T = Q diag(d) Q^{-1} with Q in SU(k, n-k) from Gaussian-integer
/// seeds (entries in {-2..2} + {-2..2}i), deterministic in seed. By
/// construction T passes the LSAT; no SAT screening is applied.
Construction construct_lsat(std::uint64_t seed, const Signature& sig, std::span<const Complex> d);

/// As construct_lsat, rejecting draws whose triple products are all real,
/// so the result passes the WAT and LSAT but fails the SAT (verified before
/// returning). Requires min(k, n-k) >= 2; throws ExhaustedRetries after
/// 1000 draws.
Construction generate_wat_not_sat(std::uint64_t seed, const Signature& sig, std::span<const Complex> d);

}  // namespace uecsm
