#include "uecsm/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "uecsm/angletests.hpp"
#include "uecsm/errors.hpp"
#include "uecsm/tracetests.hpp"

namespace uecsm {

namespace {

constexpr int kMaxDraws = 1000;
// Q with huge entries makes T = QDQ^{-1} so non-normal that its eigenvectors
// cannot be recovered to the angle-test tolerances.
constexpr double kMaxColumnNorm = 1e3;
constexpr double kVerifyTol = 1e-7;
constexpr double kTraceMarginTol = 1e-6;

void require_distinct(std::span<const Complex> d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[i] == d[j]) throw RepeatedDiagonal("conjugated_diagonal: repeated diagonal entry");
    }
  }
}

std::vector<CVector> draw_gaussian_integers(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> u(-2, 2);
  std::vector<CVector> vs(static_cast<std::size_t>(n), CVector(static_cast<std::size_t>(n)));
  for (auto& v : vs) {
    for (auto& z : v) {
      const double re = u(rng);
      const double im = u(rng);
      z = Complex{re, im};
    }
  }
  return vs;
}

Construction build(std::uint64_t seed, const Signature& sig, std::span<const Complex> d,
                   bool require_sat_failure) {
  if (static_cast<int>(d.size()) != sig.n) {
    throw DimensionMismatch("construction: diagonal length must equal n");
  }
  require_distinct(d);
  std::mt19937_64 rng(seed);
  Construction out;
  out.sig = sig;
  out.d.assign(d.begin(), d.end());
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    ++out.attempts;
    const auto vs = draw_gaussian_integers(sig.n, rng);
    CMatrix q;
    try {
      q = indefinite_gram_schmidt(vs, sig);
    } catch (const IsotropicVector&) {
      ++out.isotropic_restarts;
      continue;
    } catch (const SignatureMismatch&) {
      // linearly dependent draw
      ++out.isotropic_restarts;
      continue;
    }
    bool well_conditioned = true;
    for (std::size_t j = 0; j < q.dim(); ++j) {
      if (norm(q.column(j)) > kMaxColumnNorm) well_conditioned = false;
    }
    if (!well_conditioned) {
      ++out.conditioning_rejections;
      continue;
    }
    CMatrix t = conjugated_diagonal(q, d);
    if (require_sat_failure) {
      const auto triples = sat_obstruction(q);
      const bool all_real = std::all_of(triples.begin(), triples.end(),
                                        [](const TripleProduct& tp) { return tp.real; });
      if (all_real) {
        ++out.sat_rejections;
        continue;
      }
      try {
        const AngleSuite suite = angle_suite(t, kVerifyTol);
        if (!suite.wat.verdict.pass || !suite.lsat.verdict.pass || suite.sat.verdict.pass) {
          ++out.sat_rejections;
          continue;
        }
        // Strongly non-normal draws shrink the normalized trace residuals
        // toward the tolerance; keep only draws the trace test also rejects.
        if (sig.n <= 4 && uecsm_verdict(t, kTraceMarginTol).pass) {
          ++out.conditioning_rejections;
          continue;
        }
      } catch (const Error&) {
        ++out.conditioning_rejections;
        continue;
      }
    }
    out.q = std::move(q);
    out.t = std::move(t);
    return out;
  }
  throw ExhaustedRetries("construction: no acceptable draw after " + std::to_string(kMaxDraws) +
                         " attempts");
}

}  // namespace

Signature::Signature(int positive, int total) : k(positive), n(total) {
  if (total < 1 || positive < 0 || positive > total) {
    throw InvalidArgument("Signature: need 0 <= k <= n and n >= 1");
  }
}

CMatrix signature_matrix(const Signature& sig) {
  CMatrix a(static_cast<std::size_t>(sig.n));
  for (int i = 0; i < sig.n; ++i) a(i, i) = i < sig.k ? 1.0 : -1.0;
  return a;
}

Complex indefinite_inner(std::span<const Complex> v, std::span<const Complex> w, const Signature& sig) {
  if (v.size() != static_cast<std::size_t>(sig.n) || w.size() != static_cast<std::size_t>(sig.n)) {
    throw DimensionMismatch("indefinite_inner: vector length must equal n");
  }
  Complex s = 0.0;
  for (int j = 0; j < sig.n; ++j) {
    const Complex term = v[j] * std::conj(w[j]);
    s += j < sig.k ? term : -term;
  }
  return s;
}

CMatrix indefinite_gram_schmidt(std::span<const CVector> vectors, const Signature& sig) {
  if (vectors.size() != static_cast<std::size_t>(sig.n)) {
    throw DimensionMismatch("indefinite_gram_schmidt: need n vectors");
  }
  std::vector<CVector> basis;
  std::vector<double> signs;
  for (const auto& input : vectors) {
    if (input.size() != static_cast<std::size_t>(sig.n)) {
      throw DimensionMismatch("indefinite_gram_schmidt: vector length must equal n");
    }
    CVector v = input;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t j = 0; j < basis.size(); ++j) {
        // <q_j, q_j>_k = signs[j] = +-1
        const Complex c = indefinite_inner(v, basis[j], sig) * signs[j];
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * basis[j][i];
      }
    }
    const Complex self = indefinite_inner(v, v, sig);
    if (std::abs(self.real()) < kIsotropicThreshold) {
      throw IsotropicVector("indefinite_gram_schmidt: isotropic partial vector");
    }
    const double scale = 1.0 / std::sqrt(std::abs(self.real()));
    for (auto& z : v) z *= scale;
    basis.push_back(std::move(v));
    signs.push_back(self.real() > 0 ? 1.0 : -1.0);
  }

  std::vector<CVector> ordered;
  for (int pass = 0; pass < 2; ++pass) {
    const double wanted = pass == 0 ? 1.0 : -1.0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (signs[j] == wanted) ordered.push_back(basis[j]);
    }
  }
  const auto positives = std::count(signs.begin(), signs.end(), 1.0);
  if (positives != sig.k) {
    throw SignatureMismatch("indefinite_gram_schmidt: produced " + std::to_string(positives) +
                            " positive vectors, signature needs " + std::to_string(sig.k));
  }
  CMatrix q = CMatrix::from_columns(ordered);
  const Complex det = determinant(q);
  if (std::abs(det) == 0.0) throw SignatureMismatch("indefinite_gram_schmidt: dependent input");
  const Complex phase = std::conj(det) / std::abs(det);
  const std::size_t last = q.dim() - 1;
  for (std::size_t i = 0; i < q.dim(); ++i) q(i, last) *= phase;
  return q;
}

Verdict su_membership(const CMatrix& q, const Signature& sig, double tol) {
  if (q.dim() != static_cast<std::size_t>(sig.n)) {
    throw DimensionMismatch("su_membership: dimension does not match signature");
  }
  const CMatrix a = signature_matrix(sig);
  const double form = frobenius_norm(mul(mul(adjoint(q), a), q) - a);
  const double det = std::abs(determinant(q) - 1.0);
  return make_verdict("su_membership", {{"form", form}, {"determinant", det}}, tol);
}

CMatrix conjugated_diagonal(const CMatrix& q, std::span<const Complex> d) {
  if (d.size() != q.dim()) throw DimensionMismatch("conjugated_diagonal: diagonal length mismatch");
  require_distinct(d);
  const CMatrix qinv = inverse(q);
  return mul(mul(q, CMatrix::diagonal(d)), qinv);
}

std::vector<TripleProduct> sat_obstruction(const CMatrix& q, double tol) {
  const std::size_t n = q.dim();
  std::vector<CVector> cols;
  for (std::size_t j = 0; j < n; ++j) {
    cols.push_back(q.column(j));
    if (norm(cols.back()) == 0.0) throw InvalidArgument("sat_obstruction: zero column");
  }
  std::vector<TripleProduct> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const Complex v = inner(cols[i], cols[j]) * inner(cols[j], cols[k]) * inner(cols[k], cols[i]);
        out.push_back({{i + 1, j + 1, k + 1}, v, std::abs(v.imag()) <= tol * std::abs(v)});
      }
    }
  }
  return out;
}

Construction construct_lsat(std::uint64_t seed, const Signature& sig, std::span<const Complex> d) {
  return build(seed, sig, d, false);
}

Construction generate_wat_not_sat(std::uint64_t seed, const Signature& sig, std::span<const Complex> d) {
  if (std::min(sig.k, sig.negative()) < 2) {
    throw PreconditionViolation(
        "generate_wat_not_sat: signature (" + std::to_string(sig.k) + "," +
        std::to_string(sig.negative()) +
        ") has a cone of dimension < 2; such constructions are always UECSM");
  }
  return build(seed, sig, d, true);
}

}  // namespace uecsm
