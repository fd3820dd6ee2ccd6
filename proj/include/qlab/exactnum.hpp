#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qlab {

// Arbitrary-precision rational, canonical form (positive denominator,
// gcd(num, den) = 1) maintained by GMP on every arithmetic result.
using Rational = mpq_class;

/// Element of Q[i]: re + im*i with exact rational parts.
struct GaussRational {
  Rational re, im;

  GaussRational() : re(0), im(0) {}
  GaussRational(long r) : re(r), im(0) {}
  GaussRational(Rational r) : re(std::move(r)), im(0) {}
  GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }

  GaussRational conj() const { return {re, -im}; }

  /// |z|^2 = re^2 + im^2, a nonnegative rational; zero iff z = 0.
  Rational norm2() const { return re * re + im * im; }

  GaussRational inv() const {
    if (is_zero()) throw std::domain_error("GaussRational: division by zero");
    Rational n = norm2();
    return {re / n, -im / n};
  }

  friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
  friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
    return a * b.inv();
  }
  GaussRational& operator+=(const GaussRational& b) { return *this = *this + b; }
  GaussRational& operator-=(const GaussRational& b) { return *this = *this - b; }
  GaussRational& operator*=(const GaussRational& b) { return *this = *this * b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  /// Accepts "a/b", "a/b+c/di", "-1/2-3i", "i", "-2i"; inverse of str().
  static GaussRational parse(const std::string& text);
  /// Canonical literal: "a/b" when im = 0, else "a/b+c/di" (sign folded, /1 omitted).
  std::string str() const;
};

/// Dense matrix over Q[i], row-major. Subspaces are represented as row spaces.
struct ExactMatrix {
  int rows = 0, cols = 0;
  std::vector<GaussRational> data;

  ExactMatrix() = default;
  ExactMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {
    if (r < 0 || c < 0) throw std::invalid_argument("ExactMatrix: negative shape");
  }

  GaussRational& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  const GaussRational& at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  static ExactMatrix identity(int n);

  std::vector<GaussRational> row(int r) const {
    return {data.begin() + static_cast<size_t>(r) * cols,
            data.begin() + static_cast<size_t>(r + 1) * cols};
  }

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  std::string str() const;
};

struct RrefResult {
  ExactMatrix mat;  // reduced row echelon form, same shape as input
  int rank = 0;
};

/// Gauss-Jordan over Q[i]; exact, so no pivoting strategy is needed.
/// The RREF is the unique canonical representative of the row space.
RrefResult rref(const ExactMatrix& m);

/// Canonical basis of the row space: RREF with zero rows dropped (rank x cols).
ExactMatrix row_space_basis(const ExactMatrix& m);

/// Membership of v in the row space of m (m need not be reduced).
bool in_row_space(const ExactMatrix& m, const std::vector<GaussRational>& v);

/// True iff row space of a is contained in row space of b.
bool row_space_leq(const ExactMatrix& a, const ExactMatrix& b);

/// Rows of a followed by rows of b; column counts must agree.
ExactMatrix stack(const ExactMatrix& a, const ExactMatrix& b);

/// Canonical basis of (row space of a) ∩ (row space of b), via Zassenhaus.
ExactMatrix intersect_row_spaces(const ExactMatrix& a, const ExactMatrix& b);

/// Matrix product a·b; inner dimensions must agree.
ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b);

/// Conjugate transpose m^H.
ExactMatrix conj_transpose(const ExactMatrix& m);

/// Canonical basis (as rows) of the right kernel {x : m·x^T = 0}.
/// rank(m) + rows(null_space(m)) = cols(m).
ExactMatrix null_space(const ExactMatrix& m);

}  // namespace qlab
