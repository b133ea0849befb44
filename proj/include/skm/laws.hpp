#pragma once

#include "skm/parallel.hpp"
#include "skm/structure.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skm {

enum class SuiteId { RU, SkMd, IR, PCIR, DerivedProps, QSpec, CSpec, HSpec };

std::string_view to_string(SuiteId id);
/// Case-insensitive; nothing for an unknown name.
std::optional<SuiteId> parse_suite(std::string_view name);

struct Law {
  std::string name;
  int arity = 0;
  /// Optional symbols the law mentions; run_suite refuses structures lacking any of them.
  std::vector<Symbol> symbols;
  std::function<bool(const Structure&, std::span<const Value>)> holds;
};

struct LawSuite {
  SuiteId id;
  std::vector<Law> laws;

  std::string_view name() const { return to_string(id); }
};

LawSuite suite(SuiteId id);
/// The twelve consequences of the skew meadow axioms, implications checked as implications.
LawSuite derived_props_catalog();
/// QSpec, CSpec and HSpec.
std::vector<LawSuite> spec_suites();

/// Tuple count above which exhaustive and grid modes check a seeded sample instead.
inline constexpr std::uint64_t kExhaustiveCap = std::uint64_t{1} << 25;

struct Mode {
  enum class Kind { Exhaustive, Grid, Random };
  Kind kind = Kind::Random;
  int grid = 2;
  std::uint64_t seed = 0;
  std::uint64_t samples = 10000;
  std::int64_t bound = 100;

  static Mode exhaustive() { return {Kind::Exhaustive}; }
  static Mode grid_of(int n) { return {Kind::Grid, n}; }
  static Mode random(std::uint64_t seed = 0, std::uint64_t samples = 10000, std::int64_t bound = 100) {
    return {Kind::Random, 2, seed, samples, bound};
  }
  std::string describe() const;
};

struct LawOutcome {
  std::string name;
  bool pass = true;
  /// Tuples evaluated: all of them on a pass, up to and including the witness on a failure.
  std::uint64_t cases = 0;
  /// The domain was too large and a seeded sample was checked instead.
  bool sampled = false;
  std::vector<Value> witness;
  std::string rendered_witness;
};

struct LawReport {
  std::string suite;
  std::string structure;
  Mode mode;
  std::vector<LawOutcome> outcomes;
  std::uint64_t total_cases = 0;

  bool all_pass() const;
  const LawOutcome* find(std::string_view law) const;
};

/// Deterministic in (suite, structure, mode); Serial and Parallel give identical reports.
/// Throws UnsupportedSymbol when a law needs a symbol the structure lacks, and
/// UsageError for exhaustive mode on an infinite structure.
LawReport run_suite(const LawSuite& suite, const Structure& s, const Mode& mode, Exec exec = Exec::Parallel);

/// `count` elements: the carrier cyclically when finite, otherwise seeded samples.
std::vector<Value> sample_stream(const Structure& s, std::uint64_t seed, std::int64_t bound, std::uint64_t count);

/// `(a, b, …)` using the structure's rendering.
std::string render_tuple(const Structure& s, std::span<const Value> tuple);

/// One `LAW <suite>.<name> <pass|fail> cases=<n> [witness=<tuple>]` line per law.
std::string render_porcelain(const LawReport& r);
std::string render_table(const LawReport& r);

}  // namespace skm
