#include "uecsm/tracetests.hpp"

#include <algorithm>
#include <cmath>

#include "uecsm/errors.hpp"

namespace uecsm {

namespace {

void require_dim(const CMatrix& t, std::size_t n, const char* op) {
  if (t.dim() != n) {
    throw DimensionMismatch(std::string(op) + ": expected " + std::to_string(n) + "x" +
                            std::to_string(n) + ", got " + std::to_string(t.dim()));
  }
}

// Word traces are homogeneous, so |w(T)| / ||T||^deg == |w(T / ||T||)|.
// Evaluating on the unit-norm matrix avoids overflow for large entries.
CMatrix unit_scaled(const CMatrix& t, double norm_t) {
  return norm_t > 0.0 ? (1.0 / norm_t) * t : t;
}

std::string indexed(const char* prefix, std::size_t i) { return prefix + std::to_string(i + 1); }

const std::array<int, 7> kPhiDegrees{1, 2, 3, 2, 3, 4, 6};

}  // namespace

const std::array<Word, 20>& djokovic_words() {
  static const std::array<Word, 20> words{
      Word::parse("x"),          Word::parse("x2"),        Word::parse("xy"),
      Word::parse("x3"),         Word::parse("x2y"),       Word::parse("x4"),
      Word::parse("x3y"),        Word::parse("x2y2"),      Word::parse("xyxy"),
      Word::parse("x3y2"),       Word::parse("x2yx2y"),    Word::parse("x2y2xy"),
      Word::parse("y2x2yx"),     Word::parse("x3y2xy"),    Word::parse("x3y2x2y"),
      Word::parse("x3y3xy"),     Word::parse("y3x3yx"),    Word::parse("x3yx2yxy"),
      Word::parse("x2y2xyx2y"),  Word::parse("x3y3x2y2"),
  };
  return words;
}

const std::array<int, 7>& psi_degrees() {
  static const std::array<int, 7> degrees{6, 7, 8, 8, 9, 9, 10};
  return degrees;
}

TraceSignature phi3(const CMatrix& t) {
  require_dim(t, 3, "phi3");
  const CMatrix s = adjoint(t);
  const CMatrix t2 = mul(t, t);
  const CMatrix s2 = mul(s, s);
  TraceSignature sig{TraceSignature::Kind::Phi3, {}, {kPhiDegrees.begin(), kPhiDegrees.end()}};
  sig.values = {
      trace(t),
      trace(t2),
      trace(mul(t2, t)),
      trace(mul(s, t)),
      trace(mul(s, t2)),
      trace(mul(s2, t2)),
      trace(mul(mul(mul(s, t2), s2), t)),
  };
  return sig;
}

Verdict trace_test_3(const CMatrix& t, double tol) {
  require_dim(t, 3, "trace_test_3");
  const double nt = frobenius_norm(t);
  if (nt == 0.0) return make_verdict("trace_test_3", {{"trace_identity", 0.0}}, tol);
  const CMatrix u = unit_scaled(t, nt);
  const CMatrix s = adjoint(u);
  const CMatrix st = mul(s, u);
  const CMatrix ts = mul(u, s);
  const Complex value = trace(mul(mul(st, st - ts), ts));
  return make_verdict("trace_test_3", {{"trace_identity", std::abs(value)}}, tol);
}

TraceSignature djokovic_signature(const CMatrix& t) {
  require_dim(t, 4, "djokovic_signature");
  const CMatrix s = adjoint(t);
  TraceSignature sig{TraceSignature::Kind::Djokovic20, {}, {}};
  for (const auto& w : djokovic_words()) {
    sig.values.push_back(trace(evaluate_word(w, t, s)));
    sig.degrees.push_back(w.degree());
  }
  return sig;
}

Verdict unitary_equivalence_4(const CMatrix& a, const CMatrix& b, double tol) {
  require_dim(a, 4, "unitary_equivalence_4");
  require_dim(b, 4, "unitary_equivalence_4");
  const double m = std::max(frobenius_norm(a), frobenius_norm(b));
  const TraceSignature sa = djokovic_signature(unit_scaled(a, m));
  const TraceSignature sb = djokovic_signature(unit_scaled(b, m));
  std::vector<Residual> res;
  for (std::size_t i = 0; i < sa.values.size(); ++i) {
    res.push_back({indexed("w", i), std::abs(sa.values[i] - sb.values[i])});
  }
  return make_verdict("unitary_equivalence_4", std::move(res), tol);
}

TraceSignature psi7(const CMatrix& t) {
  require_dim(t, 4, "psi7");
  const CMatrix s = adjoint(t);
  const CMatrix t2 = mul(t, t);
  const CMatrix s2 = mul(s, s);
  const CMatrix s3 = mul(s2, s);
  const CMatrix ts = mul(t, s);
  const CMatrix t2s = mul(t2, s);
  const CMatrix st2 = mul(s, t2);

  TraceSignature sig{TraceSignature::Kind::Psi7, {}, {psi_degrees().begin(), psi_degrees().end()}};
  sig.values.resize(7);
  // T (T T*^2 - T*^2 T) T T*
  sig.values[0] = trace(mul(mul(t, commutator(t, s2)), ts));
  // T (T^2 T*^2 - T*^2 T^2) T T*
  sig.values[1] = trace(mul(mul(t, commutator(t2, s2)), ts));
  // T^2 (T T*^2 - T*^2 T) T^2 T*
  sig.values[2] = trace(mul(mul(t2, commutator(t, s2)), t2s));
  // T (T^2 T*^3 - T*^3 T^2) T T*
  sig.values[3] = trace(mul(mul(t, commutator(t2, s3)), ts));
  // T [(T^2 T*)^2 - (T* T^2)^2] T T*
  sig.values[4] = trace(mul(mul(t, mul(t2s, t2s) - mul(st2, st2)), ts));
  // T^2 T* (T*T - TT*) T* T^2 T*
  sig.values[5] = trace(mul(mul(t2s, commutator(s, t)), mul(s, t2s)));
  // T^2 (T T*^3 - T*^3 T) T^2 T*^2
  sig.values[6] = trace(mul(mul(t2, commutator(t, s3)), mul(t2, s2)));
  return sig;
}

Verdict uecsm_verdict(const CMatrix& t, double tol) {
  switch (t.dim()) {
    case 1:
    case 2:
      // every 1x1 and 2x2 matrix is UECSM
      return make_verdict("uecsm_verdict", {}, tol);
    case 3: {
      Verdict v = trace_test_3(t, tol);
      v.criterion = "uecsm_verdict";
      return v;
    }
    case 4: {
      const double nt = frobenius_norm(t);
      const TraceSignature psi = psi7(unit_scaled(t, nt));
      std::vector<Residual> res;
      for (std::size_t i = 0; i < psi.values.size(); ++i) {
        res.push_back({indexed("psi", i), std::abs(psi.values[i])});
      }
      return make_verdict("uecsm_verdict", std::move(res), tol);
    }
    default:
      throw UnsupportedDimension("uecsm_verdict: no complete trace criterion for n = " +
                                 std::to_string(t.dim()));
  }
}

Verdict transpose_equivalence(const CMatrix& t, double tol) {
  switch (t.dim()) {
    case 1:
    case 2:
      return make_verdict("transpose_equivalence", {}, tol);
    case 3: {
      const double nt = frobenius_norm(t);
      const CMatrix u = unit_scaled(t, nt);
      const TraceSignature a = phi3(u);
      const TraceSignature b = phi3(transpose(u));
      std::vector<Residual> res;
      for (std::size_t i = 0; i < a.values.size(); ++i) {
        res.push_back({indexed("phi", i), std::abs(a.values[i] - b.values[i])});
      }
      return make_verdict("transpose_equivalence", std::move(res), tol);
    }
    case 4: {
      Verdict v = unitary_equivalence_4(t, transpose(t), tol);
      v.criterion = "transpose_equivalence";
      return v;
    }
    default:
      throw UnsupportedDimension("transpose_equivalence: word criteria implemented for n <= 4 only");
  }
}

}  // namespace uecsm
