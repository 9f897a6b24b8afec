#include "uecsm/angletests.hpp"

#include <algorithm>
#include <cmath>

#include "uecsm/errors.hpp"

namespace uecsm {

namespace {

using Gram = std::vector<std::vector<Complex>>;

Gram gram(const std::vector<CVector>& v) {
  const std::size_t n = v.size();
  Gram g(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g[i][j] = inner(v[i], v[j]);
  }
  return g;
}

Complex cyclic(const Gram& g, std::size_t i, std::size_t j, std::size_t k) {
  return g[i][j] * g[j][k] * g[k][i];
}

std::string triple_name(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

AngleReport triple_test(const SpectralData& s, double tol, bool conjugate_rhs, const char* name) {
  const Gram gx = gram(s.x_vecs);
  const Gram gy = gram(s.y_vecs);
  AngleReport rep;
  std::vector<Residual> res;
  for (std::size_t i = 0; i < s.n; ++i) {
    for (std::size_t j = i; j < s.n; ++j) {
      for (std::size_t k = j; k < s.n; ++k) {
        const Complex lhs = cyclic(gx, i, j, k);
        Complex rhs = cyclic(gy, i, j, k);
        if (conjugate_rhs) rhs = std::conj(rhs);
        const double scale = std::max({kTripleFloor, std::abs(lhs), std::abs(rhs)});
        const double dev = std::abs(lhs - rhs) / scale;
        rep.triple_deviations.push_back({i, j, k, dev});
        res.push_back({triple_name(i, j, k), dev});
      }
    }
  }
  rep.verdict = make_verdict(name, std::move(res), tol);
  return rep;
}

}  // namespace

AngleReport wat(const SpectralData& s, double tol) {
  AngleReport rep;
  std::vector<Residual> res;
  for (std::size_t i = 0; i < s.n; ++i) {
    for (std::size_t j = i + 1; j < s.n; ++j) {
      const double dev =
          std::abs(std::abs(inner(s.x_vecs[i], s.x_vecs[j])) - std::abs(inner(s.y_vecs[i], s.y_vecs[j])));
      rep.pair_deviations.push_back({i, j, dev});
      res.push_back({"(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")", dev});
    }
  }
  rep.verdict = make_verdict("wat", std::move(res), tol);
  return rep;
}

AngleReport sat(const SpectralData& s, double tol) { return triple_test(s, tol, true, "sat"); }

AngleReport lsat(const SpectralData& s, double tol) { return triple_test(s, tol, false, "lsat"); }

Verdict det_criterion_3(const SpectralData& s, double tol) {
  if (s.n != 3) throw DimensionMismatch("det_criterion_3: requires n = 3");
  const auto& x = s.x_vecs;
  const auto& y = s.y_vecs;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (std::abs(inner(x[i], x[j])) < kOrthogonalThreshold) {
        throw OrthogonalEigenvectors("det_criterion_3: eigenvectors " + std::to_string(i + 1) +
                                     " and " + std::to_string(j + 1) + " are orthogonal");
      }
    }
  }
  const CMatrix xm = s.x_matrix();
  const CMatrix ym = s.y_matrix();
  const double det_xx = determinant(mul(adjoint(xm), xm)).real();
  const double det_yy = determinant(mul(adjoint(ym), ym)).real();
  auto one_minus = [](const CVector& a, const CVector& b) { return 1.0 - std::norm(inner(a, b)); };

  const double product = one_minus(x[0], x[1]) * one_minus(x[1], x[2]) * one_minus(x[2], x[0]);
  std::vector<Residual> res{{"determinant", std::abs(det_xx - product)}};

  // det X*X = |<x_i,y_i>|^2 (1 - |<x_j,x_k>|^2) for each cyclic (i, j, k)
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j = (i + 1) % 3;
    const std::size_t k = (i + 2) % 3;
    const double rhs = std::norm(inner(x[i], y[i])) * one_minus(x[j], x[k]);
    res.push_back({"identity_x" + std::to_string(i + 1), std::abs(det_xx - rhs)});
  }
  const double rhs_y = std::norm(inner(x[0], y[0])) * one_minus(y[1], y[2]);
  res.push_back({"identity_y1", std::abs(det_yy - rhs_y)});
  return make_verdict("det_criterion_3", std::move(res), tol);
}

AngleSuite angle_suite(const CMatrix& t, double tol, double distinct_tol) {
  SpectralData spec = eigensystem(t, distinct_tol);
  AngleSuite suite{spec, wat(spec, tol), sat(spec, tol), lsat(spec, tol), std::nullopt, false};
  if (spec.n == 3) {
    try {
      suite.det3 = det_criterion_3(spec, tol);
    } catch (const OrthogonalEigenvectors&) {
      // inapplicable; the trace test covers this case
    }
  }
  suite.uecsm = suite.sat.verdict.pass;
  return suite;
}

}  // namespace uecsm
