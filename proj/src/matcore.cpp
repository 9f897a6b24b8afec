#include "uecsm/matcore.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "uecsm/errors.hpp"

namespace uecsm {

namespace {

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch(std::string(op) + ": dimensions " + std::to_string(a.dim()) +
                            " and " + std::to_string(b.dim()));
  }
}

// Laplace expansion along the first row over the listed rows/columns.
Complex cofactor_det(const CMatrix& a, std::span<const std::size_t> rows,
                     std::span<const std::size_t> cols) {
  const std::size_t m = rows.size();
  if (m == 1) return a(rows[0], cols[0]);
  if (m == 2) {
    return a(rows[0], cols[0]) * a(rows[1], cols[1]) - a(rows[0], cols[1]) * a(rows[1], cols[0]);
  }
  Complex det = 0.0;
  std::vector<std::size_t> sub_cols(m - 1);
  for (std::size_t c = 0; c < m; ++c) {
    const Complex pivot = a(rows[0], cols[c]);
    if (pivot == Complex{}) continue;
    std::size_t k = 0;
    for (std::size_t cc = 0; cc < m; ++cc) {
      if (cc != c) sub_cols[k++] = cols[cc];
    }
    const Complex minor = cofactor_det(a, rows.subspan(1), sub_cols);
    det += (c % 2 == 0 ? 1.0 : -1.0) * pivot * minor;
  }
  return det;
}

struct LU {
  CMatrix lu;
  std::vector<std::size_t> perm;
  int sign = 1;
  bool singular = false;
};

LU lu_decompose(const CMatrix& a) {
  const std::size_t n = a.dim();
  LU out{a, std::vector<std::size_t>(n), 1, false};
  for (std::size_t i = 0; i < n; ++i) out.perm[i] = i;
  CMatrix& m = out.lu;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(m(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(m(i, k)) > best) {
        best = std::abs(m(i, k));
        p = i;
      }
    }
    if (best == 0.0) {
      out.singular = true;
      continue;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      std::swap(out.perm[k], out.perm[p]);
      out.sign = -out.sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      m(i, k) /= m(k, k);
      const Complex l = m(i, k);
      if (l == Complex{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= l * m(k, j);
    }
  }
  return out;
}

CVector lu_solve(const LU& f, std::span<const Complex> b) {
  const std::size_t n = f.lu.dim();
  CVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[f.perm[i]];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
    x[i] /= f.lu(i, i);
  }
  return x;
}

}  // namespace

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

CMatrix::CMatrix(std::size_t n) : n_(n), data_(n * n) {
  if (n == 0) throw InvalidArgument("CMatrix: dimension must be >= 1");
}

CMatrix::CMatrix(std::size_t n, std::vector<Complex> entries) : n_(n), data_(std::move(entries)) {
  if (n == 0) throw InvalidArgument("CMatrix: dimension must be >= 1");
  if (data_.size() != n * n) {
    throw DimensionMismatch("CMatrix: expected " + std::to_string(n * n) + " entries, got " +
                            std::to_string(data_.size()));
  }
  if (!std::all_of(data_.begin(), data_.end(), is_finite)) {
    throw InvalidArgument("CMatrix: non-finite entry");
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  n_ = rows.size();
  if (n_ == 0) throw InvalidArgument("CMatrix: dimension must be >= 1");
  data_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw DimensionMismatch("CMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  if (!std::all_of(data_.begin(), data_.end(), is_finite)) {
    throw InvalidArgument("CMatrix: non-finite entry");
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const Complex> d) {
  CMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

CMatrix CMatrix::from_columns(std::span<const CVector> columns) {
  CMatrix m(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m;
}

CVector CMatrix::column(std::size_t j) const {
  CVector v(n_);
  for (std::size_t i = 0; i < n_; ++i) v[i] = (*this)(i, j);
  return v;
}

CVector CMatrix::row(std::size_t i) const {
  return CVector(data_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
}

void CMatrix::set_column(std::size_t j, std::span<const Complex> v) {
  if (v.size() != n_) throw DimensionMismatch("set_column: length mismatch");
  for (std::size_t i = 0; i < n_; ++i) (*this)(i, j) = v[i];
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
  require_same_dim(*this, rhs, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
  require_same_dim(*this, rhs, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
CMatrix operator*(const CMatrix& a, const CMatrix& b) { return mul(a, b); }

CMatrix mul(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "mul");
  const std::size_t n = a.dim();
  CMatrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

CMatrix adjoint(const CMatrix& a) {
  CMatrix t(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) t(j, i) = std::conj(a(i, j));
  }
  return t;
}

CMatrix transpose(const CMatrix& a) {
  CMatrix t(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

CMatrix conjugate(const CMatrix& a) {
  CMatrix t(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) t(i, j) = std::conj(a(i, j));
  }
  return t;
}

CMatrix power(const CMatrix& a, int k) {
  if (k < 0) throw InvalidArgument("power: negative exponent");
  CMatrix r = CMatrix::identity(a.dim());
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return mul(a, b) - mul(b, a); }

Complex trace(const CMatrix& a) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

double frobenius_norm(const CMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

Complex determinant(const CMatrix& a) {
  const std::size_t n = a.dim();
  if (n <= 4) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return cofactor_det(a, idx, idx);
  }
  const LU f = lu_decompose(a);
  if (f.singular) return 0.0;
  Complex det = static_cast<double>(f.sign);
  for (std::size_t i = 0; i < n; ++i) det *= f.lu(i, i);
  return det;
}

CMatrix inverse(const CMatrix& a) {
  const LU f = lu_decompose(a);
  if (f.singular) throw SingularMatrix("inverse: matrix is singular");
  const std::size_t n = a.dim();
  CMatrix inv(n);
  CVector e(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), Complex{});
    e[j] = 1.0;
    inv.set_column(j, lu_solve(f, e));
  }
  return inv;
}

CVector solve(const CMatrix& a, std::span<const Complex> b) {
  if (b.size() != a.dim()) throw DimensionMismatch("solve: rhs length mismatch");
  const LU f = lu_decompose(a);
  if (f.singular) throw SingularMatrix("solve: matrix is singular");
  return lu_solve(f, b);
}

CVector matvec(const CMatrix& a, std::span<const Complex> v) {
  if (v.size() != a.dim()) throw DimensionMismatch("matvec: length mismatch");
  CVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) out[i] += a(i, j) * v[j];
  }
  return out;
}

Complex inner(std::span<const Complex> v, std::span<const Complex> w) {
  if (v.size() != w.size()) throw DimensionMismatch("inner: length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * std::conj(w[i]);
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

CVector normalized(std::span<const Complex> v) {
  const double nv = norm(v);
  if (nv == 0.0) throw InvalidArgument("normalized: zero vector");
  CVector out(v.begin(), v.end());
  for (auto& z : out) z /= nv;
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return m;
}

std::string to_string(const CMatrix& a, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    os << (i == 0 ? "[" : " ");
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Complex z = a(i, j);
      os << (j == 0 ? "" : ", ") << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag())
         << "i";
    }
    os << (i + 1 == a.dim() ? "]" : ";\n");
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Word

Word::Word(std::vector<Run> runs) {
  for (const auto& r : runs) {
    if (r.exponent < 1) throw InvalidArgument("Word: exponents must be >= 1");
    if (!runs_.empty() && runs_.back().letter == r.letter) {
      runs_.back().exponent += r.exponent;
    } else {
      runs_.push_back(r);
    }
  }
  if (runs_.empty()) throw InvalidArgument("Word: empty word");
}

Word Word::parse(std::string_view text) {
  std::vector<Run> runs;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
      continue;
    }
    if (c != 'x' && c != 'y') throw ParseError("Word::parse: unexpected '" + std::string(1, c) + "'");
    ++i;
    if (i < text.size() && text[i] == '^') ++i;
    int exponent = 0;
    bool digits = false;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])) != 0) {
      exponent = exponent * 10 + (text[i] - '0');
      digits = true;
      ++i;
    }
    runs.push_back({static_cast<Letter>(c), digits ? exponent : 1});
  }
  return Word(std::move(runs));
}

int Word::degree() const noexcept {
  int d = 0;
  for (const auto& r : runs_) d += r.exponent;
  return d;
}

int Word::count(Letter l) const noexcept {
  int d = 0;
  for (const auto& r : runs_) {
    if (r.letter == l) d += r.exponent;
  }
  return d;
}

Word Word::reversed() const {
  return Word(std::vector<Run>(runs_.rbegin(), runs_.rend()));
}

std::string Word::to_string() const {
  std::string s;
  for (const auto& r : runs_) {
    s += static_cast<char>(r.letter);
    if (r.exponent > 1) s += std::to_string(r.exponent);
  }
  return s;
}

CMatrix evaluate_word(const Word& w, const CMatrix& x, const CMatrix& y) {
  require_same_dim(x, y, "evaluate_word");
  CMatrix r = CMatrix::identity(x.dim());
  for (const auto& run : w.runs()) {
    const CMatrix& m = run.letter == Letter::X ? x : y;
    for (int k = 0; k < run.exponent; ++k) r = mul(r, m);
  }
  return r;
}

}  // namespace uecsm
