#include <doctest.h>

#include "support.hpp"
#include "uecsm/errors.hpp"
#include "uecsm/fixtures.hpp"
#include "uecsm/tracetests.hpp"

using namespace uecsm;

namespace {

Complex reversal_residual(std::size_t i, const CMatrix& t) {
  const Word& w = djokovic_words()[i];
  const CMatrix s = adjoint(t);
  return trace(evaluate_word(w, t, s)) - trace(evaluate_word(w.reversed(), t, s));
}

CMatrix unit(const CMatrix& t) { return (1.0 / frobenius_norm(t)) * t; }

}  // namespace

TEST_CASE("word list") {
  const auto& w = djokovic_words();
  CHECK(w[0] == Word::parse("x"));
  CHECK(w[11] == Word::parse("x2y2xy"));
  CHECK(w[12] == Word::parse("y2x2yx"));
  CHECK(w[19] == Word::parse("x3y3x2y2"));
  const int degrees[] = {1, 2, 2, 3, 3, 4, 4, 4, 4, 5, 6, 6, 6, 7, 8, 8, 8, 9, 9, 10};
  for (std::size_t i = 0; i < 20; ++i) CHECK(w[i].degree() == degrees[i]);
  CHECK(psi_degrees() == std::array<int, 7>{6, 7, 8, 8, 9, 9, 10});
}

TEST_CASE("psi degrees match the words they replace") {
  const std::size_t source[] = {11, 13, 14, 15, 17, 18, 19};
  for (std::size_t i = 0; i < 7; ++i) CHECK(djokovic_words()[source[i]].degree() == psi_degrees()[i]);
}

TEST_CASE("Psi of the T1/T2 pair") {
  const TraceSignature p1 = psi7(fixtures::t1());
  const TraceSignature p2 = psi7(fixtures::t2());
  for (const auto& v : p1.values) CHECK(std::abs(v) < 1e-10);
  CHECK(std::abs(p2.values[0] - Complex(-12.0)) < 1e-9);
  for (std::size_t i = 1; i < 7; ++i) CHECK(std::abs(p2.values[i]) < 1e-10);
  CHECK(uecsm_verdict(fixtures::t1()).pass);
  CHECK_FALSE(uecsm_verdict(fixtures::t2()).pass);
}

TEST_CASE("Psi vanishes on unitary conjugates of symmetric matrices") {
  Rng rng(31);
  for (int rep = 0; rep < 200; ++rep) {
    const CMatrix t = testing::random_uecsm(4, rng);
    const Verdict v = uecsm_verdict(t);
    CHECK(v.pass);
    CHECK(v.max_residual() < 1e-12);
    CHECK(transpose_equivalence(t).pass);
  }
}

TEST_CASE("Psi entries are the reversal residuals of words 12,14,15,16,18,19,20") {
  Rng rng(32);
  const std::size_t source[] = {11, 13, 14, 15, 17, 18, 19};
  for (int rep = 0; rep < 100; ++rep) {
    const CMatrix t = unit(random_gaussian_matrix(4, rng));
    const TraceSignature psi = psi7(t);
    for (std::size_t i = 0; i < 7; ++i) {
      CHECK(std::abs(std::abs(psi.values[i]) - std::abs(reversal_residual(source[i], t))) < 1e-12);
    }
  }
}

TEST_CASE("word reductions") {
  Rng rng(33);
  for (int rep = 0; rep < 200; ++rep) {
    const CMatrix t = unit(random_gaussian_matrix(4, rng));
    for (std::size_t i = 0; i < 11; ++i) CHECK(std::abs(reversal_residual(i, t)) < 1e-12);
    CHECK(std::abs(reversal_residual(11, t) + reversal_residual(12, t)) < 1e-12);
    CHECK(std::abs(reversal_residual(15, t) + reversal_residual(16, t)) < 1e-12);
  }
}

TEST_CASE("unitary invariance of the trace signatures") {
  Rng rng(34);
  for (int rep = 0; rep < 100; ++rep) {
    const CMatrix t4 = unit(random_gaussian_matrix(4, rng));
    const CMatrix u4 = random_unitary(4, rng);
    const TraceSignature a = psi7(t4);
    const TraceSignature b = psi7(testing::conj_by(u4, t4));
    for (std::size_t i = 0; i < 7; ++i) CHECK(std::abs(a.values[i] - b.values[i]) < 1e-12);
    CHECK(unitary_equivalence_4(t4, testing::conj_by(u4, t4)).pass);

    const CMatrix t3 = unit(random_gaussian_matrix(3, rng));
    const CMatrix u3 = random_unitary(3, rng);
    const TraceSignature p = phi3(t3);
    const TraceSignature q = phi3(testing::conj_by(u3, t3));
    for (std::size_t i = 0; i < 7; ++i) CHECK(std::abs(p.values[i] - q.values[i]) < 1e-12);
    CHECK(std::abs(trace_test_3(t3).max_residual() - trace_test_3(testing::conj_by(u3, t3)).max_residual()) < 1e-12);
  }
}

TEST_CASE("verdicts are scale invariant") {
  Rng rng(35);
  for (int rep = 0; rep < 50; ++rep) {
    const CMatrix t4 = random_gaussian_matrix(4, rng);
    const CMatrix t3 = random_gaussian_matrix(3, rng);
    for (double c : {1e-6, 3.0, 1e6}) {
      const Complex z = c * std::polar(1.0, 0.7);
      CHECK(uecsm_verdict(z * t4).max_residual() ==
            doctest::Approx(uecsm_verdict(t4).max_residual()).epsilon(1e-8));
      CHECK(trace_test_3(z * t3).max_residual() ==
            doctest::Approx(trace_test_3(t3).max_residual()).epsilon(1e-8));
    }
  }
}

TEST_CASE("Djokovic test separates a matrix from a non-equivalent one") {
  const Verdict v = unitary_equivalence_4(fixtures::t1(), fixtures::t2());
  CHECK_FALSE(v.pass);
  CHECK(v.residuals.size() == 20);
  CHECK(unitary_equivalence_4(fixtures::t1(), fixtures::t1()).pass);
}

TEST_CASE("3x3 trace test on the nilpotent family") {
  const auto m = fixtures::triangular3;
  CHECK(trace_test_3(m(0.0, 2.0, 3.0)).pass);
  CHECK(trace_test_3(m(2.0, 0.0, 3.0)).pass);
  CHECK(trace_test_3(m(0.0, Complex(1, 1), Complex(-2, 1))).pass);
  CHECK_FALSE(trace_test_3(m(2.0, 3.0, 3.0)).pass);
  CHECK_FALSE(trace_test_3(m(Complex(0, 1), 1.0, -1.0)).pass);
  CHECK(trace_test_3(CMatrix(3)).pass);
}

TEST_CASE("small dimensions are always UECSM") {
  Rng rng(36);
  CHECK(uecsm_verdict(random_gaussian_matrix(1, rng)).pass);
  CHECK(uecsm_verdict(random_gaussian_matrix(2, rng)).pass);
  CHECK(transpose_equivalence(random_gaussian_matrix(2, rng)).pass);
}

TEST_CASE("dimension errors") {
  CHECK_THROWS_AS(uecsm_verdict(CMatrix(5)), UnsupportedDimension);
  CHECK_THROWS_AS(transpose_equivalence(CMatrix(5)), UnsupportedDimension);
  CHECK_THROWS_AS(psi7(CMatrix(3)), DimensionMismatch);
  CHECK_THROWS_AS(phi3(CMatrix(4)), DimensionMismatch);
  CHECK_THROWS_AS(unitary_equivalence_4(CMatrix(4), CMatrix(3)), DimensionMismatch);
}

TEST_CASE("transpose equivalence tracks UECSM for 3x3") {
  Rng rng(37);
  int agree = 0;
  int total = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const CMatrix t = random_integer_matrix(3, -3, 3, rng);
    const Verdict a = trace_test_3(t);
    const Verdict b = transpose_equivalence(t);
    if (a.max_residual() > 1e-6 || a.max_residual() < 1e-12) {
      ++total;
      if (a.pass == b.pass) ++agree;
    }
  }
  CHECK(agree == total);
}
