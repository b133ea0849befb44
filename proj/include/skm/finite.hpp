#pragma once

#include "skm/errors.hpp"
#include "skm/parallel.hpp"
#include "skm/structure.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace skm {

using Index = std::uint32_t;

/// Raw operation tables of a finite carrier {0..n−1}. No axioms are implied.
struct RingTables {
  std::size_t n = 0;
  std::vector<Index> neg;  // n
  std::vector<Index> add;  // n·n, row-major
  std::vector<Index> mul;  // n·n, row-major

  Index plus(Index a, Index b) const { return add[a * n + b]; }
  Index times(Index a, Index b) const { return mul[a * n + b]; }
  Index one_index() const { return n == 1 ? 0 : 1; }
};

/// A table file could not be read or violates the ring axioms.
class TableError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an expansion or decomposition failed at element `witness`.
class PreconditionFailed : public Error {
 public:
  enum class Kind { NotStronglyRegular, NotDistinctlyRegular, NotSkewMeadow };
  PreconditionFailed(Kind kind, Index witness, std::string detail);

  Kind kind() const { return kind_; }
  Index witness() const { return witness_; }

 private:
  Kind kind_;
  Index witness_;
};

/// Violated ring equation with the lexicographically smallest witness tuple.
struct RingViolation {
  std::string law;
  std::vector<Index> witness;
  bool operator==(const RingViolation&) const = default;
};

/// Exhaustive check of the unital-ring axioms with 0 at index 0 and 1 at index 1
/// (index 0 for the trivial ring). Returns nothing when every axiom holds.
std::optional<RingViolation> find_ring_violation(const RingTables& t, Exec exec = Exec::Parallel);

/// Finite ring given by validated tables.
class FiniteRing {
 public:
  /// Throws TableError naming the violated equation and its witness.
  explicit FiniteRing(RingTables tables, Exec exec = Exec::Parallel);

  std::size_t order() const { return t_.n; }
  Index zero() const { return 0; }
  Index one() const { return t_.one_index(); }
  Index add(Index a, Index b) const { return t_.plus(a, b); }
  Index mul(Index a, Index b) const { return t_.times(a, b); }
  Index neg(Index a) const { return t_.neg[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  const RingTables& tables() const { return t_; }

 private:
  RingTables t_;
};

/// Finite ring together with an inverse table.
class FiniteInversionStructure {
 public:
  /// Throws TableError when the table has the wrong size or out-of-range entries.
  /// The IR and SkMd axioms are evaluated, not enforced.
  FiniteInversionStructure(FiniteRing ring, std::vector<Index> inv);

  const FiniteRing& ring() const { return ring_; }
  std::size_t order() const { return ring_.order(); }
  Index inv(Index a) const { return inv_[a]; }
  const std::vector<Index>& inv_table() const { return inv_; }
  Index local_unit(Index a) const { return ring_.mul(a, inv_[a]); }

  /// x·1 = x, (−x)⁻¹ = −(x⁻¹), Ref and Pil hold for every element.
  bool satisfies_ir() const { return ir_; }
  /// Ref and Ril hold for every element.
  bool satisfies_skmd() const { return skmd_; }

 private:
  FiniteRing ring_;
  std::vector<Index> inv_;
  bool ir_ = false;
  bool skmd_ = false;
};

struct RegularityFlags {
  bool regular = false;
  bool strongly_regular = false;
  bool distinctly_regular = false;
  bool unit_regular = false;
  bool reduced = false;
  bool idempotents_central = false;
  bool idempotents_commute = false;
  bool commutative = false;
  // First failing element per flag, when it fails.
  std::optional<Index> regular_witness;
  std::optional<Index> strongly_regular_witness;
  std::optional<Index> distinctly_regular_witness;
  std::optional<Index> reduced_witness;
};

/// Every flag by exhaustive quantifier evaluation.
RegularityFlags check_regularity(const FiniteRing& r, Exec exec = Exec::Parallel);

/// All y with x·y·x = x, ascending.
std::vector<Index> pseudoinverses(const FiniteRing& r, Index x);

/// Inverse from pseudoinverses: x⁻¹ = (x·y)·y for any y with x·y·x = x.
/// Throws PreconditionFailed(NotStronglyRegular) with the first x lacking y with x·x·y = x.
FiniteInversionStructure expand_strongly_regular(const FiniteRing& r, Exec exec = Exec::Parallel);

/// Inverse as the unique y with x·y·x = x and y·x·y = y.
/// Throws PreconditionFailed(NotDistinctlyRegular) with the first x having zero or several such y.
FiniteInversionStructure expand_distinctly_regular(const FiniteRing& r, Exec exec = Exec::Parallel);

struct UniquenessReport {
  bool pass = true;
  std::uint64_t pairs_checked = 0;
  /// (x, y) with y satisfying the four-condition premise but y ≠ x⁻¹.
  std::optional<std::pair<Index, Index>> witness;
};

/// If (xyx = x or xxy = x) and (yxy = y or yyx = y) then y = x⁻¹, for all x, y.
UniquenessReport verify_unique_inverse(const FiniteInversionStructure& s, Exec exec = Exec::Parallel);

struct Decomposition {
  /// Atoms of the central idempotents, ascending by index. Factor i is atoms[i]·S.
  std::vector<Index> atoms;
  /// Factor i with 0 at index 0 and atoms[i] at index 1; other elements follow in
  /// ascending order of their index in S.
  std::vector<FiniteInversionStructure> factors;
  /// factor_elements[i][j] is the element of S represented by index j of factor i.
  std::vector<std::vector<Index>> factor_elements;
  /// embedding[x][i] is the index of atoms[i]·x in factor i.
  std::vector<std::vector<Index>> embedding;

  std::vector<bool> factor_is_field;  // only idempotents 0 and unit, Gil, SkMd
  bool injective = false;
  bool preserves_operations = false;

  std::vector<std::size_t> factor_orders() const;
};

/// Splits a skew meadow into zero-totalized fields along its central idempotent atoms.
/// Throws PreconditionFailed(NotSkewMeadow) when s fails SkMd or is trivial.
Decomposition decompose(const FiniteInversionStructure& s);

struct SemigroupReport {
  bool regular = false;
  bool idempotents_commute = false;
  bool distinctly_regular = false;
  /// (regular ∧ idempotents commute) ⇔ distinctly regular
  bool commuting_idempotents_iff_distinct = false;
  /// inv(x·y) = inv(y)·inv(x) for all x, y
  bool pseudo_commutative = false;
  std::optional<std::pair<Index, Index>> pseudo_commutativity_witness;
  /// e = inv(e) for every idempotent e
  bool idempotents_self_inverse = false;
  bool products_of_idempotents_idempotent = false;
  /// pseudo-commutative ∧ self-inverse idempotents ⇒ products of idempotents idempotent
  bool self_inverse_implication = false;
  /// distinctly regular ⇒ the given inverse is pseudo-commutative
  bool distinct_implies_pseudo_commutative = false;

  bool all_implications_hold() const {
    return commuting_idempotents_iff_distinct && self_inverse_implication && distinct_implies_pseudo_commutative;
  }
};

SemigroupReport check_semigroup_props(const FiniteInversionStructure& s, Exec exec = Exec::Parallel);

/// Experimental: backtracking search for an inverse table making r an inversion
/// ring. Returns nothing when the search space is exhausted or `step_budget`
/// assignments have been tried. No completeness claim.
std::optional<std::vector<Index>> search_inversion_expansion(const FiniteRing& r, std::uint64_t step_budget);

// ---- generators ------------------------------------------------------------

/// ℤ/m for m ≥ 1 (residue r at index r).
FiniteRing zmod(std::uint32_t m);
/// ℤ/p₁ × ⋯ × ℤ/pₖ; arbitrary moduli are accepted.
FiniteRing zmod_product(const std::vector<std::uint32_t>& moduli);
/// M₂(ℤ/p), order p⁴.
FiniteRing matrix_ring_mod(std::uint32_t p);

// ---- text format -----------------------------------------------------------

/// `ring n`, `neg …`, n `add` rows, n `mul` rows and optionally `inv …`.
void write_table(std::ostream& os, const FiniteRing& r);
void write_table(std::ostream& os, const FiniteInversionStructure& s);

struct LoadedTable {
  RingTables tables;
  std::optional<std::vector<Index>> inv;
};

/// Parses the text format without validating the ring axioms. Throws TableError.
LoadedTable read_table(std::istream& is);

// ---- adapter ---------------------------------------------------------------

/// A finite table (possibly unvalidated) seen as a Structure. `inv` is
/// unsupported when no inverse table is given.
class TableStructure final : public Structure {
 public:
  TableStructure(std::string label, RingTables tables, std::optional<std::vector<Index>> inv = std::nullopt);
  explicit TableStructure(const FiniteInversionStructure& s, std::string label = "table");

  std::size_t order() const { return t_.n; }

  std::string name() const override { return label_; }
  Value zero() const override { return TableIndex{0}; }
  Value one() const override { return TableIndex{t_.one_index()}; }
  Value add(const Value& a, const Value& b) const override;
  Value neg(const Value& a) const override;
  Value mul(const Value& a, const Value& b) const override;
  Value inv(const Value& a) const override;
  bool supports(Symbol s) const override { return s == Symbol::Inv && inv_.has_value(); }
  std::optional<std::vector<Value>> carrier() const override;
  Value sample(Rng& rng, std::int64_t bound, std::uint64_t index) const override;
  std::string render(const Value& a) const override;

 private:
  Index idx(const Value& a) const;
  std::string label_;
  RingTables t_;
  std::optional<std::vector<Index>> inv_;
};

}  // namespace skm
