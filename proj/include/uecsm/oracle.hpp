#pragma once

#include <cstdint>
#include <optional>

#include "uecsm/matcore.hpp"
#include "uecsm/verdict.hpp"

namespace uecsm {

inline constexpr double kDefaultWitnessTol = 1e-6;
inline constexpr std::size_t kOracleMaxDim = 6;

enum class OracleStatus { Witness, Inconclusive };

/// Outcome of the search for a unitary U with U T U* symmetric.
///
/// Inconclusive only means no witness was found; it is not evidence that T
/// fails to be UECSM.
struct OracleResult {
  OracleStatus status = OracleStatus::Inconclusive;
  std::optional<CMatrix> u;
  /// Best ||U T U* - (U T U*)^t||_F / ||T||_F over all restarts.
  double residual = 0.0;
  int iterations = 0;
  int restarts_used = 0;
};

struct OracleOptions {
  int restarts = 20;
  int max_iters = 300;
  double witness_tol = kDefaultWitnessTol;
  std::uint64_t seed = 0x5ca1ab1eULL;
};

/// f(U) = ||U T U* - (U T U*)^t||_F^2
double symmetry_objective(const CMatrix& t, const CMatrix& u);

/// Skew-Hermitian G with d/de f(cayley(e W) U) at e = 0 equal to
/// Re tr(G* W) for every skew-Hermitian W.
CMatrix symmetry_gradient(const CMatrix& t, const CMatrix& u);

/// (I - W/2)^{-1} (I + W/2); unitary when W is skew-Hermitian.
CMatrix cayley(const CMatrix& omega);

/// Multi-start descent on the unitary group. Restart 0 starts from the
/// identity, later ones from Haar-random unitaries derived from the seed.
/// Stops at the first restart that reaches witness_tol. Throws CostGuard
/// for n > kOracleMaxDim.
OracleResult find_symmetrizer(const CMatrix& t, const OracleOptions& options = {});

OracleResult find_symmetrizer(const CMatrix& t, int restarts, int max_iters,
                              double witness_tol = kDefaultWitnessTol);

/// Checks ||U*U - I||_F and the relative symmetry residual of U T U*.
Verdict verify_witness(const CMatrix& t, const CMatrix& u, double tol = kDefaultWitnessTol);

}  // namespace uecsm
