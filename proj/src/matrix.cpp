#include "skm/matrix.hpp"

#include <stdexcept>
#include <vector>

namespace skm {

std::string Matrix2::to_string() const {
  return "[[" + x11.to_string() + "," + x12.to_string() + "],[" + x21.to_string() + "," + x22.to_string() +
         "]]";
}

Matrix2 Matrix2::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (c != ' ' && c != '\t') compact += c;
  if (compact.size() < 4 || compact.rfind("[[", 0) != 0 || compact.substr(compact.size() - 2) != "]]")
    throw std::invalid_argument("malformed matrix '" + std::string(text) + "'");
  const std::string body = compact.substr(2, compact.size() - 4);
  const auto mid = body.find("],[");
  if (mid == std::string::npos) throw std::invalid_argument("malformed matrix '" + std::string(text) + "'");
  auto split_pair = [&](const std::string& row) {
    const auto comma = row.find(',');
    if (comma == std::string::npos || row.find(',', comma + 1) != std::string::npos)
      throw std::invalid_argument("malformed matrix row '" + row + "'");
    return std::pair{Rational::parse(row.substr(0, comma)), Rational::parse(row.substr(comma + 1))};
  };
  auto [a, b] = split_pair(body.substr(0, mid));
  auto [c, d] = split_pair(body.substr(mid + 3));
  return {a, b, c, d};
}

std::string_view to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::Regular: return "Regular";
    case SingularityClass::AllZero: return "AllZero";
    case SingularityClass::ThreeZeroDiagTopLeft: return "ThreeZeroDiagTopLeft";
    case SingularityClass::ThreeZeroDiagBottomRight: return "ThreeZeroDiagBottomRight";
    case SingularityClass::ThreeZeroLowerLeft: return "ThreeZeroLowerLeft";
    case SingularityClass::ThreeZeroUpperRight: return "ThreeZeroUpperRight";
    case SingularityClass::TwoZeroBottomRow: return "TwoZeroBottomRow";
    case SingularityClass::TwoZeroRightColumn: return "TwoZeroRightColumn";
    case SingularityClass::TwoZeroTopRow: return "TwoZeroTopRow";
    case SingularityClass::TwoZeroLeftColumn: return "TwoZeroLeftColumn";
    case SingularityClass::NoZeroSingular: return "NoZeroSingular";
  }
  return "?";
}

Rational det(const Matrix2& m) { return m.x11 * m.x22 - m.x12 * m.x21; }

SingularityClass classify(const Matrix2& m) {
  if (!det(m).is_zero()) return SingularityClass::Regular;

  const bool a = m.x11.is_zero(), b = m.x12.is_zero(), c = m.x21.is_zero(), d = m.x22.is_zero();
  const int zeros = a + b + c + d;
  switch (zeros) {
    case 4:
      return SingularityClass::AllZero;
    case 3:
      if (!a) return SingularityClass::ThreeZeroDiagTopLeft;
      if (!d) return SingularityClass::ThreeZeroDiagBottomRight;
      if (!c) return SingularityClass::ThreeZeroLowerLeft;
      return SingularityClass::ThreeZeroUpperRight;
    case 2:
      if (c && d) return SingularityClass::TwoZeroBottomRow;
      if (b && d) return SingularityClass::TwoZeroRightColumn;
      if (a && b) return SingularityClass::TwoZeroTopRow;
      if (a && c) return SingularityClass::TwoZeroLeftColumn;
      // Zeros on a diagonal leave det = ±(product of the other two) ≠ 0.
      break;
    case 1:
      // det = 0 with one zero forces a product of two nonzero entries to vanish.
      break;
    case 0:
      return SingularityClass::NoZeroSingular;
  }
  throw std::logic_error("classify: impossible zero pattern for singular matrix " + m.to_string());
}

Matrix2 inv_matrix(const Matrix2& m) {
  const Rational zero;
  const Rational two = Rational(1) + Rational(1);
  const Rational four = two + two;
  auto half_inv = [&](const Rational& v) { return (two * v).inverse(); };

  switch (classify(m)) {
    case SingularityClass::Regular: {
      const Rational dinv = det(m).inverse();
      return {m.x22 * dinv, -m.x12 * dinv, -m.x21 * dinv, m.x11 * dinv};
    }
    case SingularityClass::AllZero:
      return Matrix2::zero();
    case SingularityClass::ThreeZeroDiagTopLeft:
      return {m.x11.inverse(), zero, zero, zero};
    case SingularityClass::ThreeZeroDiagBottomRight:
      return {zero, zero, zero, m.x22.inverse()};
    case SingularityClass::ThreeZeroLowerLeft:
      return {zero, m.x21.inverse(), zero, zero};
    case SingularityClass::ThreeZeroUpperRight:
      return {zero, zero, m.x12.inverse(), zero};
    case SingularityClass::TwoZeroBottomRow:
      return {half_inv(m.x11), zero, half_inv(m.x12), zero};
    case SingularityClass::TwoZeroRightColumn:
      return {half_inv(m.x11), half_inv(m.x21), zero, zero};
    case SingularityClass::TwoZeroTopRow:
      return {zero, half_inv(m.x21), zero, half_inv(m.x22)};
    case SingularityClass::TwoZeroLeftColumn:
      return {zero, zero, half_inv(m.x12), half_inv(m.x22)};
    case SingularityClass::NoZeroSingular: {
      // m = [[x, x·y], [x·z, x·y·z]]
      const Rational& x = m.x11;
      const Rational y = m.x12 * x.inverse();
      const Rational z = m.x21 * x.inverse();
      const Rational base = (four * x).inverse();
      return {base, base * z.inverse(), base * y.inverse(), base * y.inverse() * z.inverse()};
    }
  }
  throw std::logic_error("inv_matrix: unhandled class");
}

}  // namespace skm
