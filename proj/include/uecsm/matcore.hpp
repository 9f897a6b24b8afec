#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace uecsm {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Dense square complex matrix stored row-major.
///
/// Dimensions are small (n <= 16 in practice); all operations allocate and
/// return new values.
class CMatrix {
 public:
  CMatrix() = default;

  /// Zero matrix of dimension n (n >= 1).
  explicit CMatrix(std::size_t n);

  /// Takes n*n row-major entries; rejects non-finite values.
  CMatrix(std::size_t n, std::vector<Complex> entries);

  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const Complex> d);
  static CMatrix from_columns(std::span<const CVector> columns);

  std::size_t dim() const noexcept { return n_; }
  bool empty() const noexcept { return n_ == 0; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const Complex> entries() const noexcept { return data_; }

  CVector column(std::size_t j) const;
  CVector row(std::size_t i) const;
  void set_column(std::size_t j, std::span<const Complex> v);

  bool operator==(const CMatrix&) const = default;

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(Complex s);

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(Complex s, CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

CMatrix mul(const CMatrix& a, const CMatrix& b);
CMatrix adjoint(const CMatrix& a);
CMatrix transpose(const CMatrix& a);
CMatrix conjugate(const CMatrix& a);
/// a^k for k >= 0.
CMatrix power(const CMatrix& a, int k);
/// a*b - b*a
CMatrix commutator(const CMatrix& a, const CMatrix& b);

Complex trace(const CMatrix& a);
double frobenius_norm(const CMatrix& a);

/// Cofactor expansion for n <= 4, LU with partial pivoting otherwise.
Complex determinant(const CMatrix& a);

/// Throws SingularMatrix when a pivot vanishes.
CMatrix inverse(const CMatrix& a);
CVector solve(const CMatrix& a, std::span<const Complex> b);

CVector matvec(const CMatrix& a, std::span<const Complex> v);

/// <v, w> = sum v_j conj(w_j), linear in the first slot.
Complex inner(std::span<const Complex> v, std::span<const Complex> w);
double norm(std::span<const Complex> v);
CVector normalized(std::span<const Complex> v);

/// max_{i,j} |a_ij - b_ij|
double max_abs_diff(const CMatrix& a, const CMatrix& b);

bool is_finite(Complex z) noexcept;

std::string to_string(const CMatrix& a, int precision = 6);

enum class Letter : char { X = 'x', Y = 'y' };

/// A word in two letters, stored as maximal runs (letter, exponent).
class Word {
 public:
  struct Run {
    Letter letter;
    int exponent;
    bool operator==(const Run&) const = default;
  };

  Word() = default;
  explicit Word(std::vector<Run> runs);

  /// Parses strings such as "x2y2xy" or "x^3 y x^2 y"; whitespace ignored.
  static Word parse(std::string_view text);

  std::span<const Run> runs() const noexcept { return runs_; }
  int degree() const noexcept;
  int count(Letter l) const noexcept;
  Word reversed() const;
  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Run> runs_;
};

inline Word reverse(const Word& w) { return w.reversed(); }

/// Left-to-right product with x and y substituted for the letters.
CMatrix evaluate_word(const Word& w, const CMatrix& x, const CMatrix& y);

}  // namespace uecsm
