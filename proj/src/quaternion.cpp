#include "skm/quaternion.hpp"

#include <utility>
#include <vector>

namespace skm {

namespace {

// Joins `coeff·unit` terms, dropping zero coefficients and unit coefficients ±1.
std::string render_terms(const std::vector<std::pair<const Rational*, const char*>>& terms) {
  std::string out;
  for (const auto& [coeff, unit] : terms) {
    if (coeff->is_zero()) continue;
    std::string piece;
    const bool has_unit = *unit != '\0';
    if (has_unit && *coeff == Rational(1)) {
      piece = unit;
    } else if (has_unit && *coeff == Rational(-1)) {
      piece = std::string("-") + unit;
    } else {
      piece = coeff->to_string() + unit;
    }
    if (!out.empty() && piece.front() != '-') out += '+';
    out += piece;
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string ComplexRational::to_string() const { return render_terms({{&re, ""}, {&im, "i"}}); }

ComplexRational conjugate(const ComplexRational& a) { return {a.re, -a.im}; }

ComplexRational inv_complex(const ComplexRational& a) {
  const Rational scale = a.norm().inverse();
  return {a.re * scale, -a.im * scale};
}

std::string QuaternionRational::to_string() const {
  return render_terms({{&w, ""}, {&x, "i"}, {&y, "j"}, {&z, "k"}});
}

QuaternionRational mul_quaternion(const QuaternionRational& p, const QuaternionRational& q) {
  return {
      p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
      p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
      p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
      p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
  };
}

QuaternionRational conjugate(const QuaternionRational& q) { return {q.w, -q.x, -q.y, -q.z}; }

QuaternionRational inv_quaternion(const QuaternionRational& q) {
  const Rational scale = q.norm().inverse();
  return {q.w * scale, -q.x * scale, -q.y * scale, -q.z * scale};
}

}  // namespace skm
