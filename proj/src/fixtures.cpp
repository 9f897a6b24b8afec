#include "uecsm/fixtures.hpp"

#include <cmath>

namespace uecsm::fixtures {

std::array<NilpotentParams, 4> stump_params() {
  std::array<NilpotentParams, 4> out{};
  const double es[] = {4.0, 5.0, 6.0, 7.0};
  for (std::size_t i = 0; i < 4; ++i) out[i] = {2.0, 9.0, 1.0, 0.0, es[i], 7.0};
  return out;
}

CMatrix t1() {
  return {{1, 0, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}, {0, 0, 0, 0}};
}

CMatrix t2() {
  return {{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}, {0, 0, 0, 0}};
}

CMatrix su22_q() {
  using C = Complex;
  const double s6 = std::sqrt(6.0);
  const double s23 = std::sqrt(2.0 / 3.0);
  return {
      {C{1, 0.5}, 0.0, -C{1, -1} / (2 * s6), C{0, 1} / s6},
      {C{0, -0.5}, C{0, 2}, C{7, 5} / (2 * s6), C{0, -1} / s6},
      {-0.5 * C{1, -1}, C{1, -1}, -C{1, 4} / s6, -s23},
      {0.0, C{0, -1}, -s23 * C{1, 1}, s23},
  };
}

CMatrix su22_conjugate() {
  using C = Complex;
  CMatrix m{
      {-10.0, C{4, -6}, C{-3, -11}, C{0, 2}},
      {C{4, 6}, -22.0, C{-15, 17}, C{-12, -2}},
      {C{3, -11}, C{15, 17}, 28.0, C{2, 6}},
      {C{0, 2}, C{12, -2}, C{2, -6}, 16.0},
  };
  return (1.0 / 6.0) * m;
}

CMatrix balayan() {
  return {{5, 0, -1, 3}, {2, 4, 1, 2}, {2, -2, 6, -2}, {0, -2, 1, 4}};
}

CMatrix symmetric4() {
  using C = Complex;
  return {
      {C{1, 1}, 2.0, C{0, -1}, 3.0},
      {2.0, C{-2, 0}, C{1, 1}, C{0, 2}},
      {C{0, -1}, C{1, 1}, C{0, 3}, -1.0},
      {3.0, C{0, 2}, -1.0, C{4, -1}},
  };
}

CMatrix triangular3(Complex a, Complex b, Complex lambda) {
  return {{0, 0, 0}, {a, 1, 0}, {b, 0, lambda}};
}

std::vector<NamedMatrix> named_matrices() {
  std::vector<NamedMatrix> out;
  const auto stump = stump_params();
  const char* names[] = {"stump_e4", "stump_e5", "stump_e6", "stump_e7"};
  for (std::size_t i = 0; i < stump.size(); ++i) {
    out.push_back({names[i], build_matrix(stump[i]), i == 2});
  }
  out.push_back({"t1", t1(), true});
  out.push_back({"t2", t2(), false});
  out.push_back({"su22_conjugate", su22_conjugate(), false});
  out.push_back({"balayan", balayan(), false});
  out.push_back({"symmetric4", symmetric4(), true});
  out.push_back({"triangular3_a0", triangular3(0.0, 2.0, 3.0), true});
  out.push_back({"triangular3_generic", triangular3(2.0, 3.0, 3.0), false});
  return out;
}

}  // namespace uecsm::fixtures
