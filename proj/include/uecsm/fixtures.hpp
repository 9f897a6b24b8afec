#pragma once

#include <array>
#include <string>
#include <vector>

#include "uecsm/matcore.hpp"
#include "uecsm/nilpotent4.hpp"

namespace uecsm::fixtures {

/// The four nilpotent matrices (a,b,c,d,e,f) = (2,9,1,0,e,7), e = 4,5,6,7;
/// only e = 6 is UECSM.
std::array<NilpotentParams, 4> stump_params();

/// Diagonal-shifted nilpotents with entries 2,2 (UECSM) and 1,2 (not).
CMatrix t1();
CMatrix t2();

/// An element of SU(2,2) obtained by indefinite Gram-Schmidt.
CMatrix su22_q();

/// su22_q() diag(-1,0,1,2) su22_q()^{-1}, printed as (1/6)(integer matrix).
CMatrix su22_conjugate();

/// Integer 4x4 matrix that passes the WAT and LSAT but is not UECSM.
CMatrix balayan();

/// A complex symmetric matrix with Gaussian-integer entries.
CMatrix symmetric4();

/// Rows (0,0,0), (a,1,0), (b,0,lambda). For lambda != 0, 1 it is UECSM iff
/// a = 0 or b = 0.
CMatrix triangular3(Complex a, Complex b, Complex lambda);

struct NamedMatrix {
  std::string label;
  CMatrix matrix;
  bool uecsm;
};

/// Every named matrix above with its known UECSM status.
std::vector<NamedMatrix> named_matrices();

}  // namespace uecsm::fixtures
