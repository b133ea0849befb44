#pragma once

#include "skm/rational.hpp"

#include <array>
#include <string>
#include <string_view>

namespace skm {

/// A 2×2 matrix over ℚ₀.
struct Matrix2 {
  Rational x11;
  Rational x12;
  Rational x21;
  Rational x22;

  static Matrix2 zero() { return {}; }
  static Matrix2 identity() { return {Rational(1), Rational(0), Rational(0), Rational(1)}; }

  friend Matrix2 operator+(const Matrix2& a, const Matrix2& b) {
    return {a.x11 + b.x11, a.x12 + b.x12, a.x21 + b.x21, a.x22 + b.x22};
  }
  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a.x11 * b.x11 + a.x12 * b.x21, a.x11 * b.x12 + a.x12 * b.x22,
            a.x21 * b.x11 + a.x22 * b.x21, a.x21 * b.x12 + a.x22 * b.x22};
  }
  Matrix2 operator-() const { return {-x11, -x12, -x21, -x22}; }
  friend bool operator==(const Matrix2&, const Matrix2&) = default;

  /// `[[a,b],[c,d]]`
  std::string to_string() const;
  /// Inverse of to_string; whitespace is ignored. Throws std::invalid_argument.
  static Matrix2 parse(std::string_view text);
};

/// Zero pattern of a matrix, used to dispatch the inverse.
enum class SingularityClass {
  Regular,
  AllZero,
  ThreeZeroDiagTopLeft,      // [[x,0],[0,0]]
  ThreeZeroDiagBottomRight,  // [[0,0],[0,x]]
  ThreeZeroLowerLeft,        // [[0,0],[x,0]]
  ThreeZeroUpperRight,       // [[0,x],[0,0]]
  TwoZeroBottomRow,          // [[x,y],[0,0]]
  TwoZeroRightColumn,        // [[x,0],[y,0]]
  TwoZeroTopRow,             // [[0,0],[x,y]]
  TwoZeroLeftColumn,         // [[0,x],[0,y]]
  NoZeroSingular,
};

inline constexpr std::array<SingularityClass, 11> kAllSingularityClasses = {
    SingularityClass::Regular,
    SingularityClass::AllZero,
    SingularityClass::ThreeZeroDiagTopLeft,
    SingularityClass::ThreeZeroDiagBottomRight,
    SingularityClass::ThreeZeroLowerLeft,
    SingularityClass::ThreeZeroUpperRight,
    SingularityClass::TwoZeroBottomRow,
    SingularityClass::TwoZeroRightColumn,
    SingularityClass::TwoZeroTopRow,
    SingularityClass::TwoZeroLeftColumn,
    SingularityClass::NoZeroSingular,
};

std::string_view to_string(SingularityClass c);

Rational det(const Matrix2& m);

/// Regular iff det ≠ 0, otherwise the zero pattern. A singular matrix never has
/// exactly one zero entry; reaching that case throws std::logic_error.
SingularityClass classify(const Matrix2& m);

/// Total inverse making M₂(ℚ₀) an inversion ring (not a skew meadow).
Matrix2 inv_matrix(const Matrix2& m);

}  // namespace skm
