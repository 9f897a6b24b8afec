#pragma once

#include <string>
#include <vector>

namespace uecsm {

inline constexpr double kDefaultTol = 1e-8;

struct Residual {
  std::string name;
  double value = 0.0;
};

/// Outcome of one criterion: pass iff every residual is within tol.
struct Verdict {
  std::string criterion;
  bool pass = true;
  std::vector<Residual> residuals;
  double tol = kDefaultTol;

  double max_residual() const {
    double m = 0.0;
    for (const auto& r : residuals) m = r.value > m ? r.value : m;
    return m;
  }
};

inline Verdict make_verdict(std::string criterion, std::vector<Residual> residuals, double tol) {
  Verdict v{std::move(criterion), true, std::move(residuals), tol};
  v.pass = v.max_residual() <= tol;
  return v;
}

}  // namespace uecsm
