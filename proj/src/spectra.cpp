#include "uecsm/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "uecsm/errors.hpp"

namespace uecsm {

namespace {

struct RootResult {
  CVector roots;
  bool converged = false;
};

RootResult durand_kerner(std::span<const Complex> coeffs, int max_iters) {
  const std::size_t deg = coeffs.size() - 1;
  RootResult out;
  if (deg == 0) {
    out.converged = true;
    return out;
  }
  double bound = 0.0;
  for (std::size_t k = 1; k <= deg; ++k) bound = std::max(bound, std::abs(coeffs[k]));
  const double radius = 1.0 + bound;

  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> jitter(-0.1, 0.1);
  constexpr int kAttempts = 6;

  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    CVector z(deg);
    Complex seed{0.4, 0.9};
    if (attempt > 0) seed += Complex{jitter(rng), jitter(rng)};
    Complex p = 1.0;
    for (std::size_t k = 0; k < deg; ++k) {
      p *= seed;
      z[k] = radius * p / std::abs(p) * (0.5 + 0.5 * static_cast<double>(k + 1) / deg);
    }
    for (int it = 0; it < max_iters; ++it) {
      double step = 0.0;
      double scale = 0.0;
      for (std::size_t i = 0; i < deg; ++i) {
        Complex denom = 1.0;
        for (std::size_t j = 0; j < deg; ++j) {
          if (j != i) denom *= z[i] - z[j];
        }
        if (denom == Complex{}) denom = std::numeric_limits<double>::epsilon() * radius;
        const Complex delta = polyval(coeffs, z[i]) / denom;
        z[i] -= delta;
        step = std::max(step, std::abs(delta));
        scale = std::max(scale, std::abs(z[i]));
      }
      if (!std::all_of(z.begin(), z.end(), is_finite)) break;
      if (step <= 1e-14 * (1.0 + scale)) {
        out.roots = z;
        out.converged = true;
        return out;
      }
    }
    if (std::all_of(z.begin(), z.end(), is_finite)) out.roots = z;
  }
  return out;
}

// Newton polishing; keeps the update only when the residual shrinks.
Complex polish_root(std::span<const Complex> coeffs, Complex z) {
  std::vector<Complex> deriv;
  const std::size_t deg = coeffs.size() - 1;
  for (std::size_t k = 0; k < deg; ++k) {
    deriv.push_back(coeffs[k] * static_cast<double>(deg - k));
  }
  double res = std::abs(polyval(coeffs, z));
  for (int it = 0; it < 4; ++it) {
    const Complex d = polyval(deriv, z);
    if (d == Complex{}) break;
    const Complex cand = z - polyval(coeffs, z) / d;
    const double cres = std::abs(polyval(coeffs, cand));
    if (!(cres < res)) break;
    z = cand;
    res = cres;
  }
  return z;
}

void normalize_phase(CVector& v) {
  const double nv = norm(v);
  for (auto& z : v) z /= nv;
  for (const auto& z : v) {
    if (std::abs(z) > 1e-8) {
      const Complex phase = std::conj(z) / std::abs(z);
      for (auto& w : v) w *= phase;
      break;
    }
  }
}

double min_gap(std::span<const Complex> values) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      gap = std::min(gap, std::abs(values[i] - values[j]));
    }
  }
  return gap;
}

}  // namespace

Complex polyval(std::span<const Complex> coeffs, Complex z) {
  Complex acc = 0.0;
  for (const auto& c : coeffs) acc = acc * z + c;
  return acc;
}

CVector characteristic_polynomial(const CMatrix& t) {
  const std::size_t n = t.dim();
  CVector c(n + 1);
  c[0] = 1.0;
  CMatrix m(n);  // M_0 = 0
  const CMatrix id = CMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = mul(t, m) + c[k - 1] * id;
    c[k] = -trace(mul(t, m)) / static_cast<double>(k);
  }
  return c;
}

CVector polynomial_roots(std::span<const Complex> coeffs, int max_iters) {
  if (coeffs.empty() || coeffs[0] != Complex{1.0}) {
    throw InvalidArgument("polynomial_roots: polynomial must be monic");
  }
  RootResult r = durand_kerner(coeffs, max_iters);
  if (!r.converged) throw NoConvergence("polynomial_roots: Durand-Kerner did not converge");
  for (auto& z : r.roots) z = polish_root(coeffs, z);
  return r.roots;
}

CVector kernel_vector(const CMatrix& a, Complex shift, int refinements) {
  const std::size_t n = a.dim();
  const double scale = std::max(1.0, frobenius_norm(a));
  CMatrix b = a;
  for (std::size_t i = 0; i < n; ++i) b(i, i) -= shift;

  CVector v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = Complex{1.0 + 0.1 * static_cast<double>(i), 0.37 * static_cast<double>(i + 1)};
  }
  v = normalized(v);

  CMatrix shifted = b;
  double nudge = std::numeric_limits<double>::epsilon() * scale;
  for (int step = 0; step <= refinements; ++step) {
    for (;;) {
      try {
        CVector w = solve(shifted, v);
        if (!std::all_of(w.begin(), w.end(), is_finite) || norm(w) == 0.0) {
          throw SingularMatrix("kernel_vector: overflow");
        }
        v = normalized(w);
        break;
      } catch (const SingularMatrix&) {
        // exact eigenvalue: move the shift off the spectrum slightly
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) = b(i, i) - nudge;
        nudge *= 16.0;
        if (nudge > 1e-6 * scale) throw NoConvergence("kernel_vector: cannot regularize shift");
      }
    }
  }
  return v;
}

SpectralData eigensystem(const CMatrix& t, double distinct_tol) {
  if (!(distinct_tol > 0.0)) throw InvalidArgument("eigensystem: distinct_tol must be positive");
  const std::size_t n = t.dim();
  const double tnorm = frobenius_norm(t);
  const double threshold = distinct_tol * std::max(1.0, tnorm);

  SpectralData s;
  s.n = n;
  if (n == 1) {
    s.eigenvalues = {t(0, 0)};
    s.x_vecs = {CVector{1.0}};
    s.y_vecs = {CVector{1.0}};
    s.gap = std::numeric_limits<double>::infinity();
    return s;
  }

  const CVector coeffs = characteristic_polynomial(t);
  RootResult roots = durand_kerner(coeffs, 200);
  if (roots.roots.size() != n) throw NoConvergence("eigensystem: root finder produced no roots");
  for (auto& z : roots.roots) z = polish_root(coeffs, z);

  if (min_gap(roots.roots) <= threshold) {
    throw DegenerateSpectrum("eigensystem: eigenvalue gap " + std::to_string(min_gap(roots.roots)) +
                             " below threshold " + std::to_string(threshold));
  }
  if (!roots.converged) {
    // Durand-Kerner stalls at multiple roots, whose estimates then split by
    // about eps^(1/m); a tight cluster means the spectrum is degenerate.
    if (min_gap(roots.roots) <= 1e-3 * std::max(1.0, tnorm)) {
      throw DegenerateSpectrum("eigensystem: clustered eigenvalues (gap " +
                               std::to_string(min_gap(roots.roots)) + ") stall the root finder");
    }
    throw NoConvergence("eigensystem: Durand-Kerner did not converge");
  }

  const double tie = 1e-9 * std::max(1.0, tnorm);
  std::sort(roots.roots.begin(), roots.roots.end(), [tie](Complex a, Complex b) {
    if (std::abs(a.real() - b.real()) > tie) return a.real() < b.real();
    return a.imag() < b.imag();
  });

  const CMatrix tstar = adjoint(t);
  s.eigenvalues.resize(n);
  s.x_vecs.resize(n);
  s.y_vecs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex lambda = roots.roots[i];
    CVector x = kernel_vector(t, lambda);
    CVector y = kernel_vector(tstar, std::conj(lambda));
    // two-sided Rayleigh quotient sharpens the eigenvalue
    const Complex yx = inner(x, y);
    if (std::abs(yx) > 1e-8) {
      const Complex refined = inner(matvec(t, x), y) / yx;
      if (std::abs(refined - lambda) < 0.25 * threshold + 1e-6 * std::max(1.0, tnorm)) {
        lambda = refined;
        x = kernel_vector(t, lambda, 1);
        y = kernel_vector(tstar, std::conj(lambda), 1);
      }
    }
    normalize_phase(x);
    normalize_phase(y);
    s.eigenvalues[i] = lambda;
    s.x_vecs[i] = std::move(x);
    s.y_vecs[i] = std::move(y);
  }
  s.gap = min_gap(s.eigenvalues);
  if (s.gap <= threshold) {
    throw DegenerateSpectrum("eigensystem: refined eigenvalue gap below threshold");
  }

  const double res_tol = 1e-8 * std::max(1.0, tnorm);
  for (std::size_t i = 0; i < n; ++i) {
    CVector r = matvec(t, s.x_vecs[i]);
    for (std::size_t k = 0; k < n; ++k) r[k] -= s.eigenvalues[i] * s.x_vecs[i][k];
    if (norm(r) > res_tol) {
      throw NoConvergence("eigensystem: eigenvector residual " + std::to_string(norm(r)));
    }
  }
  return s;
}

}  // namespace uecsm
