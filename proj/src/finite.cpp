#include "skm/finite.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace skm {

PreconditionFailed::PreconditionFailed(Kind kind, Index witness, std::string detail)
    : Error(std::move(detail)), kind_(kind), witness_(witness) {}

// ---- ring validation -------------------------------------------------------

namespace {

struct TupleLaw {
  const char* name;
  int arity;
  std::function<bool(const RingTables&, const Index*)> holds;
};

const std::vector<TupleLaw>& ring_laws() {
  static const std::vector<TupleLaw> laws = {
      {"AddAssoc", 3,
       [](const RingTables& t, const Index* v) {
         return t.plus(t.plus(v[0], v[1]), v[2]) == t.plus(v[0], t.plus(v[1], v[2]));
       }},
      {"AddComm", 2, [](const RingTables& t, const Index* v) { return t.plus(v[0], v[1]) == t.plus(v[1], v[0]); }},
      {"AddIdentity", 1, [](const RingTables& t, const Index* v) { return t.plus(v[0], 0) == v[0]; }},
      {"AddInverse", 1, [](const RingTables& t, const Index* v) { return t.plus(v[0], t.neg[v[0]]) == 0; }},
      {"MulAssoc", 3,
       [](const RingTables& t, const Index* v) {
         return t.times(t.times(v[0], v[1]), v[2]) == t.times(v[0], t.times(v[1], v[2]));
       }},
      {"MulLeftUnit", 1, [](const RingTables& t, const Index* v) { return t.times(t.one_index(), v[0]) == v[0]; }},
      {"LeftDistributive", 3,
       [](const RingTables& t, const Index* v) {
         return t.times(v[0], t.plus(v[1], v[2])) == t.plus(t.times(v[0], v[1]), t.times(v[0], v[2]));
       }},
      {"RightDistributive", 3,
       [](const RingTables& t, const Index* v) {
         return t.times(t.plus(v[0], v[1]), v[2]) == t.plus(t.times(v[0], v[2]), t.times(v[1], v[2]));
       }},
  };
  return laws;
}

// Decodes a lexicographic tuple index (first component most significant).
void decode(std::uint64_t code, std::size_t n, int arity, Index* out) {
  for (int k = arity - 1; k >= 0; --k) {
    out[k] = static_cast<Index>(code % n);
    code /= n;
  }
}

std::uint64_t power(std::size_t n, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r *= n;
  return r;
}

void check_shape(const RingTables& t) {
  if (t.n == 0) throw TableError("ring of order 0");
  if (t.neg.size() != t.n || t.add.size() != t.n * t.n || t.mul.size() != t.n * t.n)
    throw TableError("table sizes do not match order " + std::to_string(t.n));
  auto in_range = [&](const std::vector<Index>& v) {
    return std::all_of(v.begin(), v.end(), [&](Index i) { return i < t.n; });
  };
  if (!in_range(t.neg) || !in_range(t.add) || !in_range(t.mul)) throw TableError("table entry out of range");
}

std::string describe(const RingViolation& v) {
  std::string out = "ring axiom " + v.law + " fails at (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i != 0) out += ", ";
    out += std::to_string(v.witness[i]);
  }
  return out + ")";
}

}  // namespace

std::optional<RingViolation> find_ring_violation(const RingTables& t, Exec exec) {
  check_shape(t);
  for (const auto& law : ring_laws()) {
    const std::uint64_t count = power(t.n, law.arity);
    const std::uint64_t bad = first_failure(count, exec, [&](std::uint64_t code) {
      Index v[3];
      decode(code, t.n, law.arity, v);
      return law.holds(t, v);
    });
    if (bad != count) {
      RingViolation out{law.name, std::vector<Index>(static_cast<std::size_t>(law.arity))};
      decode(bad, t.n, law.arity, out.witness.data());
      return out;
    }
  }
  return std::nullopt;
}

FiniteRing::FiniteRing(RingTables tables, Exec exec) : t_(std::move(tables)) {
  if (auto v = find_ring_violation(t_, exec)) throw TableError(describe(*v));
}

// ---- inversion structures --------------------------------------------------

FiniteInversionStructure::FiniteInversionStructure(FiniteRing ring, std::vector<Index> inv)
    : ring_(std::move(ring)), inv_(std::move(inv)) {
  const std::size_t n = ring_.order();
  if (inv_.size() != n) throw TableError("inv table has " + std::to_string(inv_.size()) + " entries, expected " +
                                         std::to_string(n));
  for (Index v : inv_)
    if (v >= n) throw TableError("inv entry out of range");

  const auto& r = ring_;
  ir_ = skmd_ = true;
  for (Index x = 0; x < n; ++x) {
    const Index xi = inv_[x];
    const bool ref = inv_[xi] == x;
    const bool pil = r.mul(x, r.mul(xi, x)) == x;
    const bool ril = r.mul(x, r.mul(x, xi)) == x;
    const bool right_unit = r.mul(x, r.one()) == x;
    const bool neg_sym = inv_[r.neg(x)] == r.neg(xi);
    ir_ = ir_ && right_unit && neg_sym && ref && pil;
    skmd_ = skmd_ && ref && ril;
  }
}

// ---- regularity ------------------------------------------------------------

RegularityFlags check_regularity(const FiniteRing& r, Exec exec) {
  const auto n = static_cast<Index>(r.order());
  RegularityFlags f;

  auto witness = [&](auto&& holds) -> std::optional<Index> {
    const std::uint64_t bad = first_failure(n, exec, [&](std::uint64_t x) { return holds(static_cast<Index>(x)); });
    if (bad == n) return std::nullopt;
    return static_cast<Index>(bad);
  };

  f.regular_witness = witness([&](Index x) {
    for (Index y = 0; y < n; ++y)
      if (r.mul(r.mul(x, y), x) == x) return true;
    return false;
  });
  f.strongly_regular_witness = witness([&](Index x) {
    for (Index y = 0; y < n; ++y)
      if (r.mul(r.mul(x, x), y) == x) return true;
    return false;
  });
  f.distinctly_regular_witness = witness([&](Index x) {
    int count = 0;
    for (Index y = 0; y < n && count < 2; ++y)
      if (r.mul(r.mul(x, y), x) == x && r.mul(r.mul(y, x), y) == y) ++count;
    return count == 1;
  });
  f.reduced_witness = witness([&](Index x) { return r.mul(x, x) != 0 || x == 0; });

  f.regular = !f.regular_witness;
  f.strongly_regular = !f.strongly_regular_witness;
  f.distinctly_regular = !f.distinctly_regular_witness;
  f.reduced = !f.reduced_witness;

  std::vector<char> is_unit(n, 0);
  for (Index y = 0; y < n; ++y)
    for (Index z = 0; z < n; ++z)
      if (r.mul(y, z) == r.one()) {
        is_unit[y] = 1;
        break;
      }
  f.unit_regular = !witness([&](Index x) {
    for (Index y = 0; y < n; ++y)
      if (is_unit[y] && r.mul(r.mul(x, y), x) == x) return true;
    return false;
  });

  std::vector<Index> idempotents;
  for (Index e = 0; e < n; ++e)
    if (r.mul(e, e) == e) idempotents.push_back(e);
  f.idempotents_central = !witness([&](Index x) {
    return std::all_of(idempotents.begin(), idempotents.end(), [&](Index e) { return r.mul(e, x) == r.mul(x, e); });
  });
  f.idempotents_commute = std::all_of(idempotents.begin(), idempotents.end(), [&](Index e) {
    return std::all_of(idempotents.begin(), idempotents.end(), [&](Index g) { return r.mul(e, g) == r.mul(g, e); });
  });
  f.commutative = !witness([&](Index x) {
    for (Index y = 0; y < n; ++y)
      if (r.mul(x, y) != r.mul(y, x)) return false;
    return true;
  });
  return f;
}

std::vector<Index> pseudoinverses(const FiniteRing& r, Index x) {
  std::vector<Index> out;
  for (Index y = 0; y < r.order(); ++y)
    if (r.mul(r.mul(x, y), x) == x) out.push_back(y);
  return out;
}

// ---- expansions ------------------------------------------------------------

FiniteInversionStructure expand_strongly_regular(const FiniteRing& r, Exec exec) {
  const auto flags = check_regularity(r, exec);
  if (flags.strongly_regular_witness) {
    const Index x = *flags.strongly_regular_witness;
    throw PreconditionFailed(PreconditionFailed::Kind::NotStronglyRegular, x,
                             "ring is not strongly regular: no y with x*x*y = x for x = " + std::to_string(x));
  }

  const auto n = static_cast<Index>(r.order());
  std::vector<Index> inv(n);
  for (Index x = 0; x < n; ++x) {
    const auto ps = pseudoinverses(r, x);
    if (ps.empty())
      throw PreconditionFailed(PreconditionFailed::Kind::NotStronglyRegular, x,
                               "no pseudoinverse for x = " + std::to_string(x));
    const Index local = r.mul(x, ps.front());
    inv[x] = r.mul(local, ps.front());
    // Neither the local unit nor the inverse may depend on the chosen pseudoinverse.
    for (Index y : ps) {
      if (r.mul(x, y) != local || r.mul(r.mul(x, y), y) != inv[x])
        throw std::logic_error("pseudoinverse choice changed the inverse of " + std::to_string(x));
    }
  }

  FiniteInversionStructure out(r, std::move(inv));
  if (!out.satisfies_skmd()) throw std::logic_error("expansion of a strongly regular ring is not a skew meadow");
  return out;
}

FiniteInversionStructure expand_distinctly_regular(const FiniteRing& r, Exec exec) {
  const auto n = static_cast<Index>(r.order());
  std::vector<Index> inv(n);
  std::vector<int> counts(n, 0);
  const std::uint64_t bad = first_failure(n, exec, [&](std::uint64_t xi) {
    const auto x = static_cast<Index>(xi);
    int count = 0;
    for (Index y = 0; y < n; ++y) {
      if (r.mul(r.mul(x, y), x) == x && r.mul(r.mul(y, x), y) == y) {
        if (count == 0) inv[x] = y;
        ++count;
      }
    }
    counts[x] = count;
    return count == 1;
  });
  if (bad != n) {
    const auto x = static_cast<Index>(bad);
    throw PreconditionFailed(PreconditionFailed::Kind::NotDistinctlyRegular, x,
                             "ring is not distinctly regular: x = " + std::to_string(x) + " has " +
                                 std::to_string(counts[x]) + " candidate inverses");
  }
  FiniteInversionStructure out(r, std::move(inv));
  if (!out.satisfies_ir()) throw std::logic_error("expansion of a distinctly regular ring is not an inversion ring");
  return out;
}

UniquenessReport verify_unique_inverse(const FiniteInversionStructure& s, Exec exec) {
  const auto& r = s.ring();
  const std::uint64_t n = s.order();
  const std::uint64_t total = n * n;
  const std::uint64_t bad = first_failure(total, exec, [&](std::uint64_t code) {
    const auto x = static_cast<Index>(code / n);
    const auto y = static_cast<Index>(code % n);
    const bool left = r.mul(r.mul(x, y), x) == x || r.mul(r.mul(x, x), y) == x;
    const bool right = r.mul(r.mul(y, x), y) == y || r.mul(r.mul(y, y), x) == y;
    return !(left && right) || y == s.inv(x);
  });
  UniquenessReport rep;
  rep.pass = bad == total;
  rep.pairs_checked = rep.pass ? total : bad + 1;
  if (!rep.pass) rep.witness = std::pair{static_cast<Index>(bad / n), static_cast<Index>(bad % n)};
  return rep;
}

// ---- decomposition ---------------------------------------------------------

std::vector<std::size_t> Decomposition::factor_orders() const {
  std::vector<std::size_t> out;
  for (const auto& f : factors) out.push_back(f.order());
  return out;
}

Decomposition decompose(const FiniteInversionStructure& s) {
  const auto& r = s.ring();
  const auto n = static_cast<Index>(s.order());
  if (!s.satisfies_skmd())
    throw PreconditionFailed(PreconditionFailed::Kind::NotSkewMeadow, 0, "structure does not satisfy SkMd");
  if (n < 2) throw PreconditionFailed(PreconditionFailed::Kind::NotSkewMeadow, 0, "trivial skew meadow");

  // Local units, closed under product and complement.
  std::set<Index> units;
  for (Index x = 0; x < n; ++x) units.insert(s.local_unit(x));
  for (bool grown = true; grown;) {
    grown = false;
    const std::vector<Index> current(units.begin(), units.end());
    for (Index e : current) {
      grown |= units.insert(r.sub(r.one(), e)).second;
      for (Index g : current) grown |= units.insert(r.mul(e, g)).second;
    }
  }
  for (Index e : units) {
    if (r.mul(e, e) != e) throw std::logic_error("local unit is not idempotent");
    for (Index x = 0; x < n; ++x)
      if (r.mul(e, x) != r.mul(x, e)) throw std::logic_error("local unit is not central");
  }

  Decomposition d;
  for (Index e : units) {
    if (e == 0) continue;
    const bool atom = std::all_of(units.begin(), units.end(), [&](Index g) {
      const Index m = r.mul(e, g);
      return m == 0 || m == e;
    });
    if (atom) d.atoms.push_back(e);
  }

  for (Index e : d.atoms) {
    std::set<Index> ideal;
    for (Index z = 0; z < n; ++z) ideal.insert(r.mul(e, z));
    std::vector<Index> elems{0, e};
    for (Index v : ideal)
      if (v != 0 && v != e) elems.push_back(v);
    std::map<Index, Index> pos;
    for (Index i = 0; i < elems.size(); ++i) pos[elems[i]] = i;

    const std::size_t m = elems.size();
    RingTables t;
    t.n = m;
    t.neg.resize(m);
    t.add.resize(m * m);
    t.mul.resize(m * m);
    std::vector<Index> inv(m);
    for (Index a = 0; a < m; ++a) {
      t.neg[a] = pos.at(r.neg(elems[a]));
      // Inverse of e·z is e·z⁻¹, which coincides with the inverse in S.
      inv[a] = pos.at(s.inv(elems[a]));
      for (Index b = 0; b < m; ++b) {
        t.add[a * m + b] = pos.at(r.add(elems[a], elems[b]));
        t.mul[a * m + b] = pos.at(r.mul(elems[a], elems[b]));
      }
    }
    d.factors.emplace_back(FiniteRing(std::move(t), Exec::Serial), std::move(inv));
    d.factor_elements.push_back(std::move(elems));
  }

  for (const auto& f : d.factors) {
    const auto& fr = f.ring();
    const auto m = static_cast<Index>(f.order());
    bool ok = f.satisfies_skmd();
    for (Index a = 0; a < m && ok; ++a) {
      if (fr.mul(a, a) == a && a != 0 && a != fr.one()) ok = false;
      if (a == 0) continue;
      bool has_left_inverse = false;
      for (Index y = 0; y < m && !has_left_inverse; ++y) has_left_inverse = fr.mul(y, a) == fr.one();
      ok = ok && has_left_inverse;
    }
    d.factor_is_field.push_back(ok);
  }

  const std::size_t k = d.atoms.size();
  std::vector<std::map<Index, Index>> positions(k);
  for (std::size_t i = 0; i < k; ++i)
    for (Index j = 0; j < d.factor_elements[i].size(); ++j) positions[i][d.factor_elements[i][j]] = j;
  d.embedding.assign(n, std::vector<Index>(k));
  for (Index x = 0; x < n; ++x)
    for (std::size_t i = 0; i < k; ++i) d.embedding[x][i] = positions[i].at(r.mul(d.atoms[i], x));

  d.injective = std::set<std::vector<Index>>(d.embedding.begin(), d.embedding.end()).size() == n;

  bool preserves = true;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& f = d.factors[i];
    const auto& fr = f.ring();
    preserves = preserves && d.embedding[0][i] == fr.zero() && d.embedding[r.one()][i] == fr.one();
    for (Index x = 0; x < n && preserves; ++x) {
      const Index hx = d.embedding[x][i];
      preserves = d.embedding[r.neg(x)][i] == fr.neg(hx) && d.embedding[s.inv(x)][i] == f.inv(hx);
      for (Index y = 0; y < n && preserves; ++y) {
        const Index hy = d.embedding[y][i];
        preserves = d.embedding[r.add(x, y)][i] == fr.add(hx, hy) && d.embedding[r.mul(x, y)][i] == fr.mul(hx, hy);
      }
    }
  }
  d.preserves_operations = preserves;
  return d;
}

// ---- semigroup-level properties --------------------------------------------

SemigroupReport check_semigroup_props(const FiniteInversionStructure& s, Exec exec) {
  const auto& r = s.ring();
  const auto n = static_cast<Index>(s.order());
  const auto flags = check_regularity(r, exec);

  SemigroupReport rep;
  rep.regular = flags.regular;
  rep.idempotents_commute = flags.idempotents_commute;
  rep.distinctly_regular = flags.distinctly_regular;
  rep.commuting_idempotents_iff_distinct = (rep.regular && rep.idempotents_commute) == rep.distinctly_regular;

  const std::uint64_t total = static_cast<std::uint64_t>(n) * n;
  const std::uint64_t bad = first_failure(total, exec, [&](std::uint64_t code) {
    const auto x = static_cast<Index>(code / n);
    const auto y = static_cast<Index>(code % n);
    return s.inv(r.mul(x, y)) == r.mul(s.inv(y), s.inv(x));
  });
  rep.pseudo_commutative = bad == total;
  if (!rep.pseudo_commutative)
    rep.pseudo_commutativity_witness = std::pair{static_cast<Index>(bad / n), static_cast<Index>(bad % n)};

  std::vector<Index> idempotents;
  for (Index e = 0; e < n; ++e)
    if (r.mul(e, e) == e) idempotents.push_back(e);
  rep.idempotents_self_inverse =
      std::all_of(idempotents.begin(), idempotents.end(), [&](Index e) { return s.inv(e) == e; });
  rep.products_of_idempotents_idempotent = std::all_of(idempotents.begin(), idempotents.end(), [&](Index e) {
    return std::all_of(idempotents.begin(), idempotents.end(), [&](Index g) {
      const Index p = r.mul(e, g);
      return r.mul(p, p) == p;
    });
  });
  rep.self_inverse_implication =
      !(rep.pseudo_commutative && rep.idempotents_self_inverse) || rep.products_of_idempotents_idempotent;
  rep.distinct_implies_pseudo_commutative = !rep.distinctly_regular || rep.pseudo_commutative;
  return rep;
}

// ---- inversion-compatibility search ----------------------------------------

std::optional<std::vector<Index>> search_inversion_expansion(const FiniteRing& r, std::uint64_t step_budget) {
  const auto n = static_cast<Index>(r.order());
  for (Index x = 0; x < n; ++x)
    if (r.mul(x, r.one()) != x) return std::nullopt;

  constexpr Index kUnset = UINT32_MAX;
  std::vector<Index> inv(n, kUnset);
  std::uint64_t steps = 0;

  // Sets inv[a] = b and inv[b] = a, logging every newly set slot.
  auto link = [&](Index a, Index b, std::vector<Index>& log) {
    for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}}) {
      if (inv[p] == kUnset) {
        inv[p] = q;
        log.push_back(p);
      } else if (inv[p] != q) {
        return false;
      }
    }
    return true;
  };

  std::function<bool()> solve = [&]() -> bool {
    Index x = 0;
    while (x < n && inv[x] != kUnset) ++x;
    if (x == n) return true;
    for (Index y = 0; y < n; ++y) {
      if (inv[y] != kUnset) continue;
      if (r.mul(r.mul(x, y), x) != x || r.mul(r.mul(y, x), y) != y) continue;
      if (++steps > step_budget) return false;
      std::vector<Index> log;
      // (−x)⁻¹ = −(x⁻¹) forces the negated pair as well.
      const bool ok = link(x, y, log) && link(r.neg(x), r.neg(y), log);
      if (ok && solve()) return true;
      for (Index p : log) inv[p] = kUnset;
      if (steps > step_budget) return false;
    }
    return false;
  };

  if (!solve()) return std::nullopt;
  FiniteInversionStructure candidate(r, inv);
  if (!candidate.satisfies_ir()) return std::nullopt;
  return inv;
}

// ---- generators ------------------------------------------------------------

namespace {

// Tables over codes 0..n−1, relabelled so that `one_code` lands on index 1.
RingTables build_tables(std::size_t n, Index one_code, const std::function<Index(Index)>& neg,
                        const std::function<Index(Index, Index)>& add, const std::function<Index(Index, Index)>& mul) {
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (n > 1) std::swap(perm[1], perm[one_code]);  // perm is an involution
  RingTables t;
  t.n = n;
  t.neg.resize(n);
  t.add.resize(n * n);
  t.mul.resize(n * n);
  for (Index a = 0; a < n; ++a) {
    t.neg[perm[a]] = perm[neg(a)];
    for (Index b = 0; b < n; ++b) {
      t.add[perm[a] * n + perm[b]] = perm[add(a, b)];
      t.mul[perm[a] * n + perm[b]] = perm[mul(a, b)];
    }
  }
  return t;
}

}  // namespace

FiniteRing zmod(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("zmod: modulus must be positive");
  return FiniteRing(build_tables(
      m, m == 1 ? 0 : 1, [m](Index a) { return static_cast<Index>((m - a) % m); },
      [m](Index a, Index b) { return static_cast<Index>((static_cast<std::uint64_t>(a) + b) % m); },
      [m](Index a, Index b) { return static_cast<Index>((static_cast<std::uint64_t>(a) * b) % m); }));
}

FiniteRing zmod_product(const std::vector<std::uint32_t>& moduli) {
  if (moduli.empty()) throw std::invalid_argument("zmod_product: no factors");
  std::size_t n = 1;
  for (auto m : moduli) {
    if (m == 0) throw std::invalid_argument("zmod_product: modulus must be positive");
    n *= m;
  }
  const std::size_t k = moduli.size();
  auto split = [&](Index code) {
    std::vector<std::uint32_t> r(k);
    for (std::size_t i = k; i-- > 0;) {
      r[i] = code % moduli[i];
      code /= moduli[i];
    }
    return r;
  };
  auto join = [&](const std::vector<std::uint32_t>& r) {
    Index code = 0;
    for (std::size_t i = 0; i < k; ++i) code = code * moduli[i] + r[i];
    return code;
  };
  std::vector<std::uint32_t> ones(k);
  for (std::size_t i = 0; i < k; ++i) ones[i] = 1 % moduli[i];
  auto lift = [&](auto op) {
    return [&, op](Index a, Index b) {
      auto x = split(a), y = split(b);
      for (std::size_t i = 0; i < k; ++i) x[i] = static_cast<std::uint32_t>(op(x[i], y[i]) % moduli[i]);
      return join(x);
    };
  };
  return FiniteRing(build_tables(
      n, join(ones),
      [&](Index a) {
        auto x = split(a);
        for (std::size_t i = 0; i < k; ++i) x[i] = (moduli[i] - x[i]) % moduli[i];
        return join(x);
      },
      lift([](std::uint64_t a, std::uint64_t b) { return a + b; }),
      lift([](std::uint64_t a, std::uint64_t b) { return a * b; })));
}

FiniteRing matrix_ring_mod(std::uint32_t p) {
  if (p < 2) throw std::invalid_argument("matrix_ring_mod: modulus must be at least 2");
  const std::size_t n = static_cast<std::size_t>(p) * p * p * p;
  using M = std::array<std::uint64_t, 4>;
  auto split = [p](Index c) {
    M m;
    for (int i = 3; i >= 0; --i) {
      m[static_cast<std::size_t>(i)] = c % p;
      c /= p;
    }
    return m;
  };
  auto join = [p](const M& m) {
    std::uint64_t c = 0;
    for (auto v : m) c = c * p + v % p;
    return static_cast<Index>(c);
  };
  return FiniteRing(build_tables(
      n, join({1, 0, 0, 1}),
      [&](Index a) {
        M m = split(a);
        for (auto& v : m) v = (p - v) % p;
        return join(m);
      },
      [&](Index a, Index b) {
        M x = split(a), y = split(b);
        return join({x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]});
      },
      [&](Index a, Index b) {
        M x = split(a), y = split(b);
        return join({x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
                     x[2] * y[1] + x[3] * y[3]});
      }));
}

// ---- text format -----------------------------------------------------------

namespace {

void write_row(std::ostream& os, const char* tag, const Index* row, std::size_t n) {
  os << tag;
  for (std::size_t i = 0; i < n; ++i) os << ' ' << row[i];
  os << '\n';
}

}  // namespace

void write_table(std::ostream& os, const FiniteRing& r) {
  const auto& t = r.tables();
  os << "ring " << t.n << '\n';
  write_row(os, "neg", t.neg.data(), t.n);
  for (std::size_t i = 0; i < t.n; ++i) write_row(os, "add", t.add.data() + i * t.n, t.n);
  for (std::size_t i = 0; i < t.n; ++i) write_row(os, "mul", t.mul.data() + i * t.n, t.n);
}

void write_table(std::ostream& os, const FiniteInversionStructure& s) {
  write_table(os, s.ring());
  write_row(os, "inv", s.inv_table().data(), s.order());
}

LoadedTable read_table(std::istream& is) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t no = 1; std::getline(is, line); ++no)
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.emplace_back(no, line);

  std::size_t cursor = 0;
  auto row = [&](const char* tag, std::size_t count) {
    if (cursor >= lines.size()) throw TableError(std::string("unexpected end of table, expected '") + tag + "' line");
    const auto& [no, text] = lines[cursor++];
    std::istringstream in(text);
    std::string word;
    in >> word;
    if (word != tag)
      throw TableError("line " + std::to_string(no) + ": expected '" + tag + "', found '" + word + "'");
    std::vector<Index> out;
    std::string tok;
    while (in >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 9)
        throw TableError("line " + std::to_string(no) + ": bad index '" + tok + "'");
      out.push_back(static_cast<Index>(std::stoul(tok)));
    }
    if (out.size() != count)
      throw TableError("line " + std::to_string(no) + ": expected " + std::to_string(count) + " entries, found " +
                       std::to_string(out.size()));
    return out;
  };

  const auto header = row("ring", 1);
  LoadedTable lt;
  auto& t = lt.tables;
  t.n = header[0];
  if (t.n == 0) throw TableError("ring of order 0");
  if (t.n > 4096) throw TableError("ring order " + std::to_string(t.n) + " exceeds 4096");
  t.neg = row("neg", t.n);
  for (std::size_t i = 0; i < t.n; ++i) {
    auto r = row("add", t.n);
    t.add.insert(t.add.end(), r.begin(), r.end());
  }
  for (std::size_t i = 0; i < t.n; ++i) {
    auto r = row("mul", t.n);
    t.mul.insert(t.mul.end(), r.begin(), r.end());
  }
  if (cursor < lines.size()) lt.inv = row("inv", t.n);
  if (cursor < lines.size())
    throw TableError("line " + std::to_string(lines[cursor].first) + ": trailing content");
  check_shape(t);
  if (lt.inv)
    for (Index v : *lt.inv)
      if (v >= t.n) throw TableError("inv entry out of range");
  return lt;
}

// ---- adapter ---------------------------------------------------------------

TableStructure::TableStructure(std::string label, RingTables tables, std::optional<std::vector<Index>> inv)
    : label_(std::move(label)), t_(std::move(tables)), inv_(std::move(inv)) {
  check_shape(t_);
  if (inv_ && inv_->size() != t_.n) throw TableError("inv table size mismatch");
}

TableStructure::TableStructure(const FiniteInversionStructure& s, std::string label)
    : TableStructure(std::move(label), s.ring().tables(), s.inv_table()) {}

Index TableStructure::idx(const Value& a) const { return a.as<TableIndex>().index; }

Value TableStructure::add(const Value& a, const Value& b) const { return TableIndex{t_.plus(idx(a), idx(b))}; }
Value TableStructure::neg(const Value& a) const { return TableIndex{t_.neg[idx(a)]}; }
Value TableStructure::mul(const Value& a, const Value& b) const { return TableIndex{t_.times(idx(a), idx(b))}; }

Value TableStructure::inv(const Value& a) const {
  if (!inv_) unsupported(Symbol::Inv);
  return TableIndex{(*inv_)[idx(a)]};
}

std::optional<std::vector<Value>> TableStructure::carrier() const {
  std::vector<Value> out;
  out.reserve(t_.n);
  for (Index i = 0; i < t_.n; ++i) out.emplace_back(TableIndex{i});
  return out;
}

Value TableStructure::sample(Rng& rng, std::int64_t, std::uint64_t) const {
  return TableIndex{static_cast<Index>(uniform_int(rng, 0, static_cast<std::int64_t>(t_.n) - 1))};
}

std::string TableStructure::render(const Value& a) const { return std::to_string(idx(a)); }

}  // namespace skm
