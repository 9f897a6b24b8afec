#pragma once

#include <array>
#include <vector>

#include "uecsm/matcore.hpp"
#include "uecsm/verdict.hpp"

namespace uecsm {

/// Strictly upper-triangular 4x4 entries at (1,2), (1,3), (1,4), (2,3),
/// (2,4), (3,4) respectively.
struct NilpotentParams {
  Complex a, b, c, d, e, f;
};

CMatrix build_matrix(const NilpotentParams& p);

/// Closed-form trace polynomials for the nilpotent family.
///
/// psi4, psi7 hold for all parameters; the *_d0 forms equal Psi_1, Psi_6
/// when d = 0 and the *_a0 forms equal them when a = 0. Every field is a
/// polynomial and is evaluated regardless of regime.
struct PsiClosedForms {
  Complex psi4;
  Complex psi7;
  Complex psi1_d0;
  Complex psi6_d0;
  Complex psi1_a0;
  Complex psi6_a0;
};

PsiClosedForms psi_closed_forms(const NilpotentParams& p);

/// Quadratic of condition (4): (|b|^2+|d|^2)(|b|^2+|d|^2-|c|^2-|e|^2-|f|^2)
/// + |b conj(c) + d conj(e)|^2.
double condition4_quadratic(const NilpotentParams& p);

/// Mirror of condition4_quadratic under a <-> f, b <-> e.
double condition5_quadratic(const NilpotentParams& p);

struct NilpotentClassification {
  /// Condition numbers 1..6 that hold, ascending.
  std::vector<int> satisfied;
  bool uecsm = false;
  /// |a| = |f| and |b| = |e| alone, without the phase relation ae = bf.
  bool literal_condition6 = false;
};

/// Six-way UECSM classification of the nilpotent family:
///   (1) d = 0 and ae + bf = 0
///   (2) d = 0 and |a|^2 + |b|^2 = |e|^2 + |f|^2
///   (3) a = 0 and f = 0
///   (4) a = 0 and condition4_quadratic = 0
///   (5) f = 0 and condition5_quadratic = 0
///   (6) |a| = |f|, |b| = |e| and ae = bf
/// Moduli alone do not suffice in (6): for a, d, f != 0 with ae != bf the
/// Psi traces do not vanish. Equalities are tested relative to the summed
/// magnitudes of both sides; zero gates use tol * (1 + max |entry|).
NilpotentClassification classify(const NilpotentParams& p, double tol = kDefaultTol);

}  // namespace uecsm
