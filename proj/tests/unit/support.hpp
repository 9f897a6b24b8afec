#pragma once

#include <algorithm>
#include <complex>
#include <numeric>
#include <vector>

#include "uecsm/matcore.hpp"
#include "uecsm/random.hpp"

namespace testing {

using uecsm::CMatrix;
using uecsm::Complex;

// Reference product, deliberately the textbook triple loop.
inline CMatrix naive_mul(const CMatrix& a, const CMatrix& b) {
  const std::size_t n = a.dim();
  CMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

// Leibniz formula over all permutations.
inline Complex leibniz_det(const CMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Complex total = 0.0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Complex term = inversions % 2 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) term *= a(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline CMatrix conj_by(const CMatrix& u, const CMatrix& t) { return naive_mul(naive_mul(u, t), uecsm::adjoint(u)); }

inline double sym_defect(const CMatrix& s) { return uecsm::frobenius_norm(s - uecsm::transpose(s)); }

// A random UECSM matrix: U S U* with S complex symmetric.
inline CMatrix random_uecsm(std::size_t n, uecsm::Rng& rng) {
  return conj_by(uecsm::random_unitary(n, rng), uecsm::random_symmetric(n, rng));
}

}  // namespace testing
