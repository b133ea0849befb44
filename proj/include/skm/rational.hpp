#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace skm {

/// Zero-totalized rational number.
///
/// Always held in canonical form: gcd(|num|, den) = 1, den >= 1, and zero is 0/1.
/// Equality is therefore structural.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  /// Parses `n` or `n/d` with optional leading '-'. Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  /// 0 ↦ 0, otherwise the reciprocal.
  Rational inverse() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// `n/d`, omitting `/1`.
  std::string to_string() const;

 private:
  mpq_class v_{0};
};

/// Total inverse on ℚ₀.
inline Rational inv_rational(const Rational& a) { return a.inverse(); }

}  // namespace skm
