#pragma once

#include "skm/rational.hpp"

#include <string>

namespace skm {

/// Zero-totalized complex rational re + im·i.
struct ComplexRational {
  Rational re;
  Rational im;

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  /// re² + im²
  Rational norm() const { return re * re + im * im; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  ComplexRational operator-() const { return {-re, -im}; }
  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;

  /// Rendered `a+bi`; zero components are omitted, zero renders as `0`.
  std::string to_string() const;
};

ComplexRational conjugate(const ComplexRational& a);
/// 0 ↦ 0, otherwise conj(a) scaled by 1/norm.
ComplexRational inv_complex(const ComplexRational& a);

/// Rational quaternion w + x·i + y·j + z·k. Coefficient order is (1, i, j, k) everywhere.
struct QuaternionRational {
  Rational w;
  Rational x;
  Rational y;
  Rational z;

  static QuaternionRational i() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
  static QuaternionRational j() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
  static QuaternionRational k() { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }

  bool is_zero() const { return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero(); }
  bool is_scalar() const { return x.is_zero() && y.is_zero() && z.is_zero(); }
  /// w² + x² + y² + z²
  Rational norm() const { return w * w + x * x + y * y + z * z; }

  friend QuaternionRational operator+(const QuaternionRational& a, const QuaternionRational& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  QuaternionRational operator-() const { return {-w, -x, -y, -z}; }
  friend bool operator==(const QuaternionRational&, const QuaternionRational&) = default;

  /// Rendered `a+bi+cj+dk` with the same omission rules as complex numbers.
  std::string to_string() const;
};

/// Hamilton product: i² = j² = k² = ijk = −1.
QuaternionRational mul_quaternion(const QuaternionRational& p, const QuaternionRational& q);
QuaternionRational conjugate(const QuaternionRational& q);
QuaternionRational inv_quaternion(const QuaternionRational& q);

inline QuaternionRational operator*(const QuaternionRational& a, const QuaternionRational& b) {
  return mul_quaternion(a, b);
}

}  // namespace skm
