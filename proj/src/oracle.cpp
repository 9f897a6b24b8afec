#include "uecsm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "uecsm/errors.hpp"
#include "uecsm/random.hpp"

namespace uecsm {

namespace {

using RealMatrix = std::vector<std::vector<double>>;

CMatrix conjugated(const CMatrix& t, const CMatrix& u) { return mul(mul(u, t), adjoint(u)); }

// Skew-Hermitian basis: for i<j the real generator E_ij - E_ji and the
// imaginary generator i(E_ij + E_ji); i E_ii on the diagonal.
std::vector<CMatrix> skew_hermitian_basis(std::size_t n) {
  std::vector<CMatrix> basis;
  const Complex I{0.0, 1.0};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      CMatrix re(n);
      re(i, j) = 1.0;
      re(j, i) = -1.0;
      basis.push_back(re);
      CMatrix im(n);
      im(i, j) = I;
      im(j, i) = I;
      basis.push_back(im);
    }
    CMatrix d(n);
    d(i, i) = I;
    basis.push_back(d);
  }
  return basis;
}

// Residual vector r with ||r||^2 = ||K||_F^2 for antisymmetric K.
std::vector<double> antisymmetric_residual(const CMatrix& k) {
  std::vector<double> r;
  const double s = std::sqrt(2.0);
  for (std::size_t i = 0; i < k.dim(); ++i) {
    for (std::size_t j = i + 1; j < k.dim(); ++j) {
      r.push_back(s * k(i, j).real());
      r.push_back(s * k(i, j).imag());
    }
  }
  return r;
}

// Solves (M + mu I) x = b for symmetric positive semidefinite M by Cholesky.
std::vector<double> damped_solve(RealMatrix m, double mu, std::span<const double> b) {
  const std::size_t n = b.size();
  for (std::size_t i = 0; i < n; ++i) m[i][i] += mu;
  for (std::size_t j = 0; j < n; ++j) {
    double d = m[j][j];
    for (std::size_t k = 0; k < j; ++k) d -= m[j][k] * m[j][k];
    d = std::sqrt(std::max(d, std::numeric_limits<double>::min()));
    m[j][j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m[i][j];
      for (std::size_t k = 0; k < j; ++k) s -= m[i][k] * m[j][k];
      m[i][j] = s / d;
    }
  }
  std::vector<double> x(b.begin(), b.end());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) x[i] -= m[i][k] * x[k];
    x[i] /= m[i][i];
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t k = i + 1; k < n; ++k) x[i] -= m[k][i] * x[k];
    x[i] /= m[i][i];
  }
  return x;
}

struct Descent {
  CMatrix u;
  double objective = 0.0;
  int iterations = 0;
};

// Levenberg-Marquardt directions in the tangent space, Cayley retraction,
// step halving until the objective decreases (Armijo).
Descent descend(const CMatrix& t, CMatrix u, int max_iters, double target) {
  const std::size_t n = t.dim();
  const auto basis = skew_hermitian_basis(n);
  const std::size_t p = basis.size();
  Descent out{u, symmetry_objective(t, u), 0};
  int stalled = 0;

  for (int it = 0; it < max_iters; ++it) {
    out.iterations = it + 1;
    if (out.objective <= target) break;
    const CMatrix s = conjugated(t, out.u);
    const std::vector<double> r = antisymmetric_residual(s - transpose(s));
    const std::size_t m = r.size();

    RealMatrix jac(m, std::vector<double>(p));
    for (std::size_t q = 0; q < p; ++q) {
      const CMatrix ds = commutator(basis[q], s);
      const std::vector<double> col = antisymmetric_residual(ds - transpose(ds));
      for (std::size_t i = 0; i < m; ++i) jac[i][q] = col[i];
    }
    RealMatrix jtj(p, std::vector<double>(p, 0.0));
    std::vector<double> jtr(p, 0.0);
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t i = 0; i < m; ++i) jtr[a] -= jac[i][a] * r[i];
      for (std::size_t b = a; b < p; ++b) {
        double acc = 0.0;
        for (std::size_t i = 0; i < m; ++i) acc += jac[i][a] * jac[i][b];
        jtj[a][b] = acc;
        jtj[b][a] = acc;
      }
    }
    const double mu = std::sqrt(out.objective) + 1e-14;
    const std::vector<double> delta = damped_solve(jtj, mu, jtr);

    CMatrix omega(n);
    double slope = 0.0;  // directional derivative of f along delta
    for (std::size_t q = 0; q < p; ++q) {
      omega += delta[q] * basis[q];
      slope -= 2.0 * jtr[q] * delta[q];
    }
    if (!(slope < 0.0)) break;

    double step = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 40; ++halving) {
      const CMatrix cand = mul(cayley(step * omega), out.u);
      const double fc = symmetry_objective(t, cand);
      if (fc <= out.objective + 1e-4 * step * slope) {
        const double previous = out.objective;
        out.u = cand;
        out.objective = fc;
        accepted = true;
        stalled = (previous - fc) <= 1e-10 * previous ? stalled + 1 : 0;
        break;
      }
      step *= 0.5;
    }
    if (!accepted || stalled >= 5) break;
  }
  return out;
}

}  // namespace

double symmetry_objective(const CMatrix& t, const CMatrix& u) {
  const CMatrix s = conjugated(t, u);
  const double k = frobenius_norm(s - transpose(s));
  return k * k;
}

CMatrix symmetry_gradient(const CMatrix& t, const CMatrix& u) {
  const CMatrix s = conjugated(t, u);
  const CMatrix m = commutator(s, conjugate(s - transpose(s)));
  return 2.0 * (m - adjoint(m));
}

CMatrix cayley(const CMatrix& omega) {
  const std::size_t n = omega.dim();
  const CMatrix id = CMatrix::identity(n);
  const CMatrix half = 0.5 * omega;
  return mul(inverse(id - half), id + half);
}

OracleResult find_symmetrizer(const CMatrix& t, const OracleOptions& options) {
  if (t.dim() > kOracleMaxDim) {
    throw CostGuard("find_symmetrizer: n = " + std::to_string(t.dim()) + " exceeds " +
                    std::to_string(kOracleMaxDim));
  }
  if (options.restarts < 1) throw InvalidArgument("find_symmetrizer: restarts must be >= 1");
  const std::size_t n = t.dim();
  OracleResult result;
  const double tnorm = frobenius_norm(t);
  if (tnorm == 0.0) {
    result.status = OracleStatus::Witness;
    result.u = CMatrix::identity(n);
    result.restarts_used = 1;
    return result;
  }
  const CMatrix unit = (1.0 / tnorm) * t;
  // polish well below the witness threshold before declaring success
  const double target = std::pow(options.witness_tol * 1e-3, 2);

  double best = std::numeric_limits<double>::infinity();
  CMatrix best_u;
  for (int r = 0; r < options.restarts; ++r) {
    CMatrix start = CMatrix::identity(n);
    if (r > 0) {
      Rng rng(options.seed + static_cast<std::uint64_t>(r));
      start = random_unitary(n, rng);
    }
    Descent d = descend(unit, start, options.max_iters, target);
    result.iterations += d.iterations;
    result.restarts_used = r + 1;
    CMatrix u = orthonormalize_columns(d.u);
    const double residual = std::sqrt(symmetry_objective(unit, u));
    if (residual < best) {
      best = residual;
      best_u = u;
    }
    if (best <= options.witness_tol) break;
  }
  result.residual = best;
  if (best <= options.witness_tol) {
    result.status = OracleStatus::Witness;
    result.u = best_u;
  }
  return result;
}

OracleResult find_symmetrizer(const CMatrix& t, int restarts, int max_iters, double witness_tol) {
  OracleOptions o;
  o.restarts = restarts;
  o.max_iters = max_iters;
  o.witness_tol = witness_tol;
  return find_symmetrizer(t, o);
}

Verdict verify_witness(const CMatrix& t, const CMatrix& u, double tol) {
  if (t.dim() != u.dim()) throw DimensionMismatch("verify_witness: shapes differ");
  const double unitarity = frobenius_norm(mul(adjoint(u), u) - CMatrix::identity(u.dim()));
  const CMatrix s = conjugated(t, u);
  const double scale = std::max(frobenius_norm(t), std::numeric_limits<double>::min());
  const double symmetry = frobenius_norm(s - transpose(s)) / scale;
  return make_verdict("verify_witness", {{"unitarity", unitarity}, {"symmetry", symmetry}}, tol);
}

}  // namespace uecsm
