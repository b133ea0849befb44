#include "skm/structure.hpp"

#include <stdexcept>

namespace skm {

std::string_view to_string(Symbol s) {
  switch (s) {
    case Symbol::I: return "i";
    case Symbol::J: return "j";
    case Symbol::K: return "k";
    case Symbol::Conj: return "c";
    case Symbol::Inv: return "inv";
  }
  return "?";
}

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

Value Structure::constant(Symbol s) const { unsupported(s); }
Value Structure::conj(const Value&) const { unsupported(Symbol::Conj); }

std::vector<Value> Structure::grid(int) const {
  if (auto c = carrier()) return *c;
  throw UsageError("structure '" + name() + "' has no grid");
}

void Structure::unsupported(Symbol s) const { throw UnsupportedSymbol(name(), std::string(to_string(s))); }

Value sub(const Structure& s, const Value& a, const Value& b) { return s.add(a, s.neg(b)); }
Value square(const Structure& s, const Value& a) { return s.mul(a, a); }
Value bar(const Structure& s, const Value& a) { return s.inv(a); }
Value local_unit(const Structure& s, const Value& a) { return s.mul(a, s.inv(a)); }
Value z_of(const Structure& s, const Value& a) { return sub(s, s.one(), local_unit(s, a)); }
Value div(const Structure& s, const Value& a, const Value& b) { return s.mul(a, s.inv(b)); }

Value numeral(const Structure& s, std::uint64_t n) {
  Value result = s.zero();
  Value power = s.one();  // 2^bit ones
  while (n != 0) {
    if (n & 1U) result = s.add(result, power);
    n >>= 1U;
    if (n != 0) power = s.add(power, power);
  }
  return result;
}

std::pair<Value, Value> unit_regular_witness(const Structure& s, const Value& x) {
  const Value z = z_of(s, x);
  return {s.add(z, s.inv(x)), s.add(z, x)};
}

std::vector<Rational> grid_entries(int n) {
  std::vector<Rational> out{Rational(0)};
  for (int k = 1; k <= n; ++k) {
    out.emplace_back(k);
    out.emplace_back(-k);
  }
  out.emplace_back(1, 2);
  out.emplace_back(-1, 2);
  return out;
}

namespace {

Rational sample_nonzero_rational(Rng& rng, std::int64_t bound) {
  std::int64_t n = 0;
  while (n == 0) n = uniform_int(rng, -bound, bound);
  return Rational(n, uniform_int(rng, 1, bound));
}

// Zero, ±1 occasionally so that conditional laws see their premises.
Rational sample_rational(Rng& rng, std::int64_t bound) {
  switch (uniform_int(rng, 0, 15)) {
    case 0: return Rational(0);
    case 1: return Rational(1);
    case 2: return Rational(-1);
    default: return sample_nonzero_rational(rng, bound);
  }
}

Rational sample_component(Rng& rng, std::int64_t bound) {
  if (uniform_int(rng, 0, 3) == 0) return Rational(0);
  return sample_nonzero_rational(rng, bound);
}

}  // namespace

// ---- ℚ₀ --------------------------------------------------------------------

Value RationalField::add(const Value& a, const Value& b) const { return a.as<Rational>() + b.as<Rational>(); }
Value RationalField::neg(const Value& a) const { return -a.as<Rational>(); }
Value RationalField::mul(const Value& a, const Value& b) const { return a.as<Rational>() * b.as<Rational>(); }
Value RationalField::inv(const Value& a) const { return inv_rational(a.as<Rational>()); }

std::vector<Value> RationalField::grid(int n) const {
  std::vector<Value> out;
  for (auto& r : grid_entries(n)) out.emplace_back(std::move(r));
  return out;
}

Value RationalField::sample(Rng& rng, std::int64_t bound, std::uint64_t) const {
  return sample_rational(rng, bound);
}

std::string RationalField::render(const Value& a) const { return a.as<Rational>().to_string(); }

// ---- ℤ/p -------------------------------------------------------------------

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 32U)) throw std::invalid_argument("modulus " + std::to_string(p) + " too large");
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
}

Value PrimeField::add(const Value& a, const Value& b) const {
  return element(a.as<PrimeFieldElement>().residue + b.as<PrimeFieldElement>().residue);
}

Value PrimeField::neg(const Value& a) const {
  const auto r = a.as<PrimeFieldElement>().residue;
  return element(r == 0 ? 0 : p_ - r);
}

Value PrimeField::mul(const Value& a, const Value& b) const {
  return element(a.as<PrimeFieldElement>().residue * b.as<PrimeFieldElement>().residue);
}

Value PrimeField::inv(const Value& a) const { return inv_prime_field(a.as<PrimeFieldElement>()); }

std::optional<std::vector<Value>> PrimeField::carrier() const {
  std::vector<Value> out;
  out.reserve(p_);
  for (std::uint64_t r = 0; r < p_; ++r) out.emplace_back(element(r));
  return out;
}

Value PrimeField::sample(Rng& rng, std::int64_t, std::uint64_t) const {
  return element(static_cast<std::uint64_t>(uniform_int(rng, 0, static_cast<std::int64_t>(p_) - 1)));
}

std::string PrimeField::render(const Value& a) const { return a.as<PrimeFieldElement>().to_string(); }

// ---- complex ---------------------------------------------------------------

Value ComplexField::add(const Value& a, const Value& b) const {
  return a.as<ComplexRational>() + b.as<ComplexRational>();
}
Value ComplexField::neg(const Value& a) const { return -a.as<ComplexRational>(); }
Value ComplexField::mul(const Value& a, const Value& b) const {
  return a.as<ComplexRational>() * b.as<ComplexRational>();
}
Value ComplexField::inv(const Value& a) const { return inv_complex(a.as<ComplexRational>()); }

Value ComplexField::constant(Symbol s) const {
  if (s == Symbol::I) return ComplexRational::i();
  unsupported(s);
}

Value ComplexField::conj(const Value& a) const { return conjugate(a.as<ComplexRational>()); }

std::vector<Value> ComplexField::grid(int n) const {
  const auto e = grid_entries(n);
  std::vector<Value> out;
  for (const auto& re : e)
    for (const auto& im : e) out.emplace_back(ComplexRational{re, im});
  return out;
}

Value ComplexField::sample(Rng& rng, std::int64_t bound, std::uint64_t) const {
  if (uniform_int(rng, 0, 15) == 0) return zero();
  auto re = sample_component(rng, bound);
  auto im = sample_component(rng, bound);
  return ComplexRational{std::move(re), std::move(im)};
}

std::string ComplexField::render(const Value& a) const { return a.as<ComplexRational>().to_string(); }

// ---- quaternions -----------------------------------------------------------

Value QuaternionField::add(const Value& a, const Value& b) const {
  return a.as<QuaternionRational>() + b.as<QuaternionRational>();
}
Value QuaternionField::neg(const Value& a) const { return -a.as<QuaternionRational>(); }
Value QuaternionField::mul(const Value& a, const Value& b) const {
  return mul_quaternion(a.as<QuaternionRational>(), b.as<QuaternionRational>());
}
Value QuaternionField::inv(const Value& a) const { return inv_quaternion(a.as<QuaternionRational>()); }

Value QuaternionField::constant(Symbol s) const {
  switch (s) {
    case Symbol::I: return QuaternionRational::i();
    case Symbol::J: return QuaternionRational::j();
    case Symbol::K: return QuaternionRational::k();
    default: unsupported(s);
  }
}

Value QuaternionField::conj(const Value& a) const { return conjugate(a.as<QuaternionRational>()); }

std::vector<Value> QuaternionField::grid(int n) const {
  const auto e = grid_entries(n);
  std::vector<Value> out;
  for (const auto& w : e)
    for (const auto& x : e)
      for (const auto& y : e)
        for (const auto& z : e) out.emplace_back(QuaternionRational{w, x, y, z});
  return out;
}

Value QuaternionField::sample(Rng& rng, std::int64_t bound, std::uint64_t) const {
  if (uniform_int(rng, 0, 15) == 0) return zero();
  QuaternionRational q;
  q.w = sample_component(rng, bound);
  q.x = sample_component(rng, bound);
  q.y = sample_component(rng, bound);
  q.z = sample_component(rng, bound);
  return q;
}

std::string QuaternionField::render(const Value& a) const { return a.as<QuaternionRational>().to_string(); }

// ---- M₂(ℚ₀) ----------------------------------------------------------------

Value MatrixRing::add(const Value& a, const Value& b) const { return a.as<Matrix2>() + b.as<Matrix2>(); }
Value MatrixRing::neg(const Value& a) const { return -a.as<Matrix2>(); }
Value MatrixRing::mul(const Value& a, const Value& b) const { return a.as<Matrix2>() * b.as<Matrix2>(); }
Value MatrixRing::inv(const Value& a) const { return inv_matrix(a.as<Matrix2>()); }

std::vector<Value> MatrixRing::grid(int n) const {
  const auto e = grid_entries(n);
  std::vector<Value> out;
  out.reserve(e.size() * e.size() * e.size() * e.size());
  for (const auto& a : e)
    for (const auto& b : e)
      for (const auto& c : e)
        for (const auto& d : e) out.emplace_back(Matrix2{a, b, c, d});
  return out;
}

Value MatrixRing::sample(Rng& rng, std::int64_t bound, std::uint64_t index) const {
  const Rational z;
  auto nz = [&] { return sample_nonzero_rational(rng, bound); };
  if (index < kAllSingularityClasses.size()) {
    switch (kAllSingularityClasses[index]) {
      case SingularityClass::Regular: {
        Matrix2 m{nz(), sample_rational(rng, bound), sample_rational(rng, bound), nz()};
        while (det(m).is_zero()) m.x22 = nz();
        return m;
      }
      case SingularityClass::AllZero: return Matrix2::zero();
      case SingularityClass::ThreeZeroDiagTopLeft: return Matrix2{nz(), z, z, z};
      case SingularityClass::ThreeZeroDiagBottomRight: return Matrix2{z, z, z, nz()};
      case SingularityClass::ThreeZeroLowerLeft: return Matrix2{z, z, nz(), z};
      case SingularityClass::ThreeZeroUpperRight: return Matrix2{z, nz(), z, z};
      case SingularityClass::TwoZeroBottomRow: return Matrix2{nz(), nz(), z, z};
      case SingularityClass::TwoZeroRightColumn: return Matrix2{nz(), z, nz(), z};
      case SingularityClass::TwoZeroTopRow: return Matrix2{z, z, nz(), nz()};
      case SingularityClass::TwoZeroLeftColumn: return Matrix2{z, nz(), z, nz()};
      case SingularityClass::NoZeroSingular: {
        const Rational x = nz(), y = nz(), w = nz();
        return Matrix2{x, x * y, x * w, x * y * w};
      }
    }
  }
  auto entry = [&] { return uniform_int(rng, 0, 2) == 0 ? Rational(0) : nz(); };
  Matrix2 m;
  m.x11 = entry();
  m.x12 = entry();
  m.x21 = entry();
  m.x22 = entry();
  return m;
}

std::string MatrixRing::render(const Value& a) const { return a.as<Matrix2>().to_string(); }

// ---- products --------------------------------------------------------------

ProductStructure::ProductStructure(std::vector<StructurePtr> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("product of zero factors");
}

const std::vector<Value>& ProductStructure::parts(const Value& a) const {
  const auto& p = a.as<ProductValue>().parts;
  if (p.size() != factors_.size()) throw std::invalid_argument("product element has wrong component count");
  return p;
}

Value ProductStructure::make(std::vector<Value> parts) const {
  if (parts.size() != factors_.size()) throw std::invalid_argument("product element has wrong component count");
  return ProductValue{std::move(parts)};
}

std::string ProductStructure::name() const {
  std::string out = "prod:";
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i != 0) out += ',';
    out += factors_[i]->name();
  }
  return out;
}

Value ProductStructure::zero() const {
  std::vector<Value> out;
  for (const auto& f : factors_) out.push_back(f->zero());
  return ProductValue{std::move(out)};
}

Value ProductStructure::one() const {
  std::vector<Value> out;
  for (const auto& f : factors_) out.push_back(f->one());
  return ProductValue{std::move(out)};
}

namespace {

template <typename Op>
Value componentwise(const std::vector<StructurePtr>& fs, const std::vector<Value>& a, Op op) {
  std::vector<Value> out;
  out.reserve(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) out.push_back(op(*fs[i], a[i], i));
  return ProductValue{std::move(out)};
}

}  // namespace

Value ProductStructure::add(const Value& a, const Value& b) const {
  const auto& pb = parts(b);
  return componentwise(factors_, parts(a), [&](const Structure& f, const Value& x, std::size_t i) {
    return f.add(x, pb[i]);
  });
}

Value ProductStructure::neg(const Value& a) const {
  return componentwise(factors_, parts(a), [](const Structure& f, const Value& x, std::size_t) { return f.neg(x); });
}

Value ProductStructure::mul(const Value& a, const Value& b) const {
  const auto& pb = parts(b);
  return componentwise(factors_, parts(a), [&](const Structure& f, const Value& x, std::size_t i) {
    return f.mul(x, pb[i]);
  });
}

Value ProductStructure::inv(const Value& a) const {
  return componentwise(factors_, parts(a), [](const Structure& f, const Value& x, std::size_t) { return f.inv(x); });
}

bool ProductStructure::supports(Symbol s) const {
  for (const auto& f : factors_)
    if (!f->supports(s)) return false;
  return true;
}

Value ProductStructure::constant(Symbol s) const {
  if (!supports(s)) unsupported(s);
  std::vector<Value> out;
  for (const auto& f : factors_) out.push_back(f->constant(s));
  return ProductValue{std::move(out)};
}

Value ProductStructure::conj(const Value& a) const {
  if (!supports(Symbol::Conj)) unsupported(Symbol::Conj);
  return componentwise(factors_, parts(a), [](const Structure& f, const Value& x, std::size_t) { return f.conj(x); });
}

namespace {

std::vector<Value> cartesian(const std::vector<std::vector<Value>>& sets) {
  std::vector<Value> out;
  std::vector<std::size_t> idx(sets.size(), 0);
  for (const auto& s : sets)
    if (s.empty()) return out;
  while (true) {
    std::vector<Value> parts;
    parts.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) parts.push_back(sets[i][idx[i]]);
    out.emplace_back(ProductValue{std::move(parts)});
    // last factor varies fastest
    std::size_t k = sets.size();
    while (k > 0) {
      --k;
      if (++idx[k] < sets[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

}  // namespace

std::optional<std::vector<Value>> ProductStructure::carrier() const {
  std::vector<std::vector<Value>> sets;
  for (const auto& f : factors_) {
    auto c = f->carrier();
    if (!c) return std::nullopt;
    sets.push_back(std::move(*c));
  }
  return cartesian(sets);
}

std::vector<Value> ProductStructure::grid(int n) const {
  std::vector<std::vector<Value>> sets;
  for (const auto& f : factors_) sets.push_back(f->grid(n));
  return cartesian(sets);
}

Value ProductStructure::sample(Rng& rng, std::int64_t bound, std::uint64_t index) const {
  std::vector<Value> out;
  for (const auto& f : factors_) out.push_back(f->sample(rng, bound, index));
  return ProductValue{std::move(out)};
}

std::string ProductStructure::render(const Value& a) const {
  const auto& p = parts(a);
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) out += ", ";
    out += factors_[i]->render(p[i]);
  }
  return out + ")";
}

}  // namespace skm
