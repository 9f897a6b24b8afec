#include "uecsm/nilpotent4.hpp"

#include <algorithm>
#include <cmath>

namespace uecsm {

namespace {

constexpr double kTiny = 1e-300;

double sq(Complex z) { return std::norm(z); }

}  // namespace

CMatrix build_matrix(const NilpotentParams& p) {
  CMatrix t(4);
  t(0, 1) = p.a;
  t(0, 2) = p.b;
  t(0, 3) = p.c;
  t(1, 2) = p.d;
  t(1, 3) = p.e;
  t(2, 3) = p.f;
  return t;
}

PsiClosedForms psi_closed_forms(const NilpotentParams& p) {
  const double a2 = sq(p.a), b2 = sq(p.b), c2 = sq(p.c), d2 = sq(p.d), e2 = sq(p.e), f2 = sq(p.f);
  PsiClosedForms out{};
  out.psi4 = a2 * d2 * f2 * (a2 + b2 - e2 - f2);
  out.psi7 = a2 * d2 * d2 * f2 * (a2 - f2);

  const Complex aebf = p.a * p.e + p.b * p.f;
  out.psi1_d0 = std::norm(aebf) * (a2 + b2 - e2 - f2);
  out.psi6_d0 = std::conj(p.c) * aebf * out.psi1_d0;

  const Complex v34 = p.b * std::conj(p.c) + p.d * std::conj(p.e);
  out.psi1_a0 = f2 * ((b2 + d2) * (b2 + d2 - c2 - e2 - f2) + std::norm(v34));
  out.psi6_a0 = p.f * v34 * out.psi1_a0;
  return out;
}

double condition4_quadratic(const NilpotentParams& p) {
  const double s = sq(p.b) + sq(p.d);
  return s * (s - sq(p.c) - sq(p.e) - sq(p.f)) + std::norm(p.b * std::conj(p.c) + p.d * std::conj(p.e));
}

double condition5_quadratic(const NilpotentParams& p) {
  const double s = sq(p.d) + sq(p.e);
  return s * (s - sq(p.a) - sq(p.b) - sq(p.c)) + std::norm(p.c * std::conj(p.e) + p.b * std::conj(p.d));
}

NilpotentClassification classify(const NilpotentParams& p, double tol) {
  const double a = std::abs(p.a), b = std::abs(p.b), c = std::abs(p.c), d = std::abs(p.d),
               e = std::abs(p.e), f = std::abs(p.f);
  const double biggest = std::max({a, b, c, d, e, f});
  auto is_zero = [&](double m) { return m <= tol * (1.0 + biggest); };
  auto rel_eq = [&](double lhs, double rhs) {
    return std::abs(lhs - rhs) <= tol * (std::abs(lhs) + std::abs(rhs) + kTiny);
  };

  const bool d0 = is_zero(d);
  const bool a0 = is_zero(a);
  const bool f0 = is_zero(f);

  // quadratic of (4): both sides of "positive part == negative part"
  auto quadratic_vanishes = [&](double s, double others, Complex cross) {
    const double lhs = s * s + std::norm(cross);
    const double rhs = s * others;
    return rel_eq(lhs, rhs);
  };

  NilpotentClassification out;
  const Complex ae = p.a * p.e;
  const Complex bf = p.b * p.f;
  if (d0 && std::abs(ae + bf) <= tol * (std::abs(ae) + std::abs(bf) + kTiny)) {
    out.satisfied.push_back(1);
  }
  if (d0 && rel_eq(a * a + b * b, e * e + f * f)) out.satisfied.push_back(2);
  if (a0 && f0) out.satisfied.push_back(3);
  if (a0 && quadratic_vanishes(b * b + d * d, c * c + e * e + f * f,
                               p.b * std::conj(p.c) + p.d * std::conj(p.e))) {
    out.satisfied.push_back(4);
  }
  if (f0 && quadratic_vanishes(d * d + e * e, a * a + b * b + c * c,
                               p.c * std::conj(p.e) + p.b * std::conj(p.d))) {
    out.satisfied.push_back(5);
  }
  out.literal_condition6 = rel_eq(a, f) && rel_eq(b, e);
  if (out.literal_condition6 && std::abs(ae - bf) <= tol * (std::abs(ae) + std::abs(bf) + kTiny)) {
    out.satisfied.push_back(6);
  }
  out.uecsm = !out.satisfied.empty();
  return out;
}

}  // namespace uecsm
