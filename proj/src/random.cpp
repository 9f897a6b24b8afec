#include "uecsm/random.hpp"

#include <cmath>

#include "uecsm/errors.hpp"

namespace uecsm {

Complex random_gaussian(Rng& rng) {
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  const double re = g(rng);
  const double im = g(rng);
  return {re, im};
}

CMatrix random_gaussian_matrix(std::size_t n, Rng& rng) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_gaussian(rng);
  }
  return m;
}

CMatrix orthonormalize_columns(const CMatrix& a) {
  const std::size_t n = a.dim();
  std::vector<CVector> q;
  q.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    CVector v = a.column(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& u : q) {
        const Complex c = inner(v, u);
        for (std::size_t i = 0; i < n; ++i) v[i] -= c * u[i];
      }
    }
    const double nv = norm(v);
    if (nv < 1e-14) throw SingularMatrix("orthonormalize_columns: rank deficient input");
    for (auto& z : v) z /= nv;
    q.push_back(std::move(v));
  }
  return CMatrix::from_columns(q);
}

CMatrix random_unitary(std::size_t n, Rng& rng) {
  for (;;) {
    try {
      return orthonormalize_columns(random_gaussian_matrix(n, rng));
    } catch (const SingularMatrix&) {
      // measure-zero event; redraw
    }
  }
}

CMatrix random_symmetric(std::size_t n, Rng& rng) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = random_gaussian(rng);
      m(j, i) = m(i, j);
    }
  }
  return m;
}

CMatrix random_integer_matrix(std::size_t n, int lo, int hi, Rng& rng) {
  std::uniform_int_distribution<int> u(lo, hi);
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<double>(u(rng));
  }
  return m;
}

}  // namespace uecsm
