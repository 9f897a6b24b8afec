#pragma once

#include <cstdint>
#include <random>

#include "uecsm/matcore.hpp"

namespace uecsm {

using Rng = std::mt19937_64;

/// Standard complex Gaussian entry (real and imaginary parts N(0, 1/2)).
Complex random_gaussian(Rng& rng);

CMatrix random_gaussian_matrix(std::size_t n, Rng& rng);

/// Haar-distributed unitary via Gram-Schmidt on a Gaussian matrix.
CMatrix random_unitary(std::size_t n, Rng& rng);

/// Complex symmetric matrix with Gaussian entries.
CMatrix random_symmetric(std::size_t n, Rng& rng);

/// Integer entries drawn uniformly from [lo, hi].
CMatrix random_integer_matrix(std::size_t n, int lo, int hi, Rng& rng);

/// Orthonormalizes the columns of a (modified Gram-Schmidt, two passes).
CMatrix orthonormalize_columns(const CMatrix& a);

}  // namespace uecsm
