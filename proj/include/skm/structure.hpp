#pragma once

#include "skm/errors.hpp"
#include "skm/value.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace skm {

/// Optional symbols beyond 0, 1, +, −, ·. A structure may lack any of them.
enum class Symbol { I, J, K, Conj, Inv };

std::string_view to_string(Symbol s);

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi], independent of the standard library's distributions.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Interpretation of the signature (0, 1, +, −, ·, ⁻¹) plus optional i, j, k, c.
///
/// All operations are total. Implementations are immutable after construction
/// and safe to share between threads.
class Structure {
 public:
  virtual ~Structure() = default;

  /// Selector-style name, e.g. `q0`, `fp:7`, `prod:fp:2,fp:3`.
  virtual std::string name() const = 0;

  virtual Value zero() const = 0;
  virtual Value one() const = 0;
  virtual Value add(const Value& a, const Value& b) const = 0;
  virtual Value neg(const Value& a) const = 0;
  virtual Value mul(const Value& a, const Value& b) const = 0;
  virtual Value inv(const Value& a) const = 0;

  virtual bool eq(const Value& a, const Value& b) const { return a == b; }

  virtual bool supports(Symbol s) const { return s == Symbol::Inv; }
  /// The constants i, j, k. Throws UnsupportedSymbol where undefined.
  virtual Value constant(Symbol s) const;
  /// The conjugation operator c. Throws UnsupportedSymbol where undefined.
  virtual Value conj(const Value& a) const;

  /// The full carrier when finite.
  virtual std::optional<std::vector<Value>> carrier() const { return std::nullopt; }
  /// A finite grid of elements built from entries {−n..n} ∪ {±1/2}.
  virtual std::vector<Value> grid(int n) const;
  /// One pseudo-random element with integer parts bounded by `bound`.
  /// `index` is the position in the stream; samplers may use it to force coverage.
  virtual Value sample(Rng& rng, std::int64_t bound, std::uint64_t index) const = 0;

  virtual std::string render(const Value& a) const = 0;

 protected:
  [[noreturn]] void unsupported(Symbol s) const;
};

using StructurePtr = std::shared_ptr<const Structure>;

// Derived operators, defined from the primitive ones on every structure.
Value sub(const Structure& s, const Value& a, const Value& b);
Value square(const Structure& s, const Value& a);
/// x̄ = x⁻¹
Value bar(const Structure& s, const Value& a);
/// 1ₓ = x·x⁻¹
Value local_unit(const Structure& s, const Value& a);
/// Z(x) = 1 − 1ₓ
Value z_of(const Structure& s, const Value& a);
/// x/y = x·y⁻¹
Value div(const Structure& s, const Value& a, const Value& b);
/// The numeral 1+1+⋯+1 (n ones), computed by doubling.
Value numeral(const Structure& s, std::uint64_t n);

/// Witnesses of unit regularity: y = (1−1ₓ) + x⁻¹ and y′ = (1−1ₓ) + x.
/// In a skew meadow x·y·x = x and y·y′ = 1.
std::pair<Value, Value> unit_regular_witness(const Structure& s, const Value& x);

/// ℚ₀
class RationalField final : public Structure {
 public:
  std::string name() const override { return "q0"; }
  Value zero() const override { return Rational(0); }
  Value one() const override { return Rational(1); }
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value inv(const Value& a) const override;
  std::vector<Value> grid(int n) const override;
  Value sample(Rng& rng, std::int64_t bound, std::uint64_t index) const override;
  std::string render(const Value& a) const override;
};

/// ℤ/p with 0⁻¹ = 0.
class PrimeField final : public Structure {
 public:
  /// Throws std::invalid_argument unless p is a prime below 2³².
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  PrimeFieldElement element(std::uint64_t r) const { return {r % p_, p_}; }

  std::string name() const override { return "fp:" + std::to_string(p_); }
  Value zero() const override { return element(0); }
  Value one() const override { return element(1); }
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value inv(const Value& a) const override;
  std::optional<std::vector<Value>> carrier() const override;
  Value sample(Rng& rng, std::int64_t bound, std::uint64_t index) const override;
  std::string render(const Value& a) const override;

 private:
  std::uint64_t p_;
};

/// Zero-totalized complex rationals with i and conjugation.
class ComplexField final : public Structure {
 public:
  std::string name() const override { return "c0"; }
  Value zero() const override { return ComplexRational{}; }
  Value one() const override { return ComplexRational{Rational(1), Rational(0)}; }
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value inv(const Value& a) const override;
  bool supports(Symbol s) const override { return s == Symbol::Inv || s == Symbol::I || s == Symbol::Conj; }
  Value constant(Symbol s) const override;
  Value conj(const Value& a) const override;
  std::vector<Value> grid(int n) const override;
  Value sample(Rng& rng, std::int64_t bound, std::uint64_t index) const override;
  std::string render(const Value& a) const override;
};

/// Zero-totalized rational quaternions with i, j, k and conjugation.
class QuaternionField final : public Structure {
 public:
  std::string name() const override { return "h0"; }
  Value zero() const override { return QuaternionRational{}; }
  Value one() const override { return QuaternionRational{Rational(1), Rational(0), Rational(0), Rational(0)}; }
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value inv(const Value& a) const override;
  bool supports(Symbol) const override { return true; }
  Value constant(Symbol s) const override;
  Value conj(const Value& a) const override;
  std::vector<Value> grid(int n) const override;
  Value sample(Rng& rng, std::int64_t bound, std::uint64_t index) const override;
  std::string render(const Value& a) const override;
};

/// M₂(ℚ₀) with the case-analysis inverse. An inversion ring, not a skew meadow.
class MatrixRing final : public Structure {
 public:
  std::string name() const override { return "m2q0"; }
  Value zero() const override { return Matrix2::zero(); }
  Value one() const override { return Matrix2::identity(); }
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value inv(const Value& a) const override;
  std::vector<Value> grid(int n) const override;
  /// The first 11 samples cover every SingularityClass in declaration order.
  Value sample(Rng& rng, std::int64_t bound, std::uint64_t index) const override;
  std::string render(const Value& a) const override;
};

/// Componentwise product of arbitrary (possibly heterogeneous) structures.
class ProductStructure final : public Structure {
 public:
  /// Throws std::invalid_argument on an empty factor list.
  explicit ProductStructure(std::vector<StructurePtr> factors);

  const std::vector<StructurePtr>& factors() const { return factors_; }
  Value make(std::vector<Value> parts) const;

  std::string name() const override;
  Value zero() const override;
  Value one() const override;
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value inv(const Value& a) const override;
  bool supports(Symbol s) const override;
  Value constant(Symbol s) const override;
  Value conj(const Value& a) const override;
  std::optional<std::vector<Value>> carrier() const override;
  std::vector<Value> grid(int n) const override;
  Value sample(Rng& rng, std::int64_t bound, std::uint64_t index) const override;
  /// `(c1, c2, ...)`
  std::string render(const Value& a) const override;

 private:
  const std::vector<Value>& parts(const Value& a) const;
  std::vector<StructurePtr> factors_;
};

/// The entry values {0, ±1, …, ±n, ±1/2} in a fixed order.
std::vector<Rational> grid_entries(int n);

}  // namespace skm
