#include "skm/laws.hpp"

#include <algorithm>
#include <cctype>
#include <iomanip>
#include <sstream>

namespace skm {

namespace {

using Args = std::span<const Value>;

// Shorthands over a fixed structure.
struct Ops {
  const Structure& s;
  Value add(const Value& a, const Value& b) const { return s.add(a, b); }
  Value mul(const Value& a, const Value& b) const { return s.mul(a, b); }
  Value mul(const Value& a, const Value& b, const Value& c) const { return s.mul(s.mul(a, b), c); }
  Value neg(const Value& a) const { return s.neg(a); }
  Value inv(const Value& a) const { return s.inv(a); }
  Value conj(const Value& a) const { return s.conj(a); }
  Value unit(const Value& a) const { return local_unit(s, a); }
  Value z(const Value& a) const { return z_of(s, a); }
  Value zero() const { return s.zero(); }
  Value one() const { return s.one(); }
  Value c(Symbol k) const { return s.constant(k); }
  bool eq(const Value& a, const Value& b) const { return s.eq(a, b); }
};

Law law(std::string name, int arity, std::vector<Symbol> symbols, std::function<bool(const Ops&, Args)> f) {
  return Law{std::move(name), arity, std::move(symbols),
             [f = std::move(f)](const Structure& s, Args a) { return f(Ops{s}, a); }};
}

const std::vector<Symbol> kInv{Symbol::Inv};

std::vector<Law> ring_laws() {
  return {
      law("AddAssoc", 3, {},
          [](const Ops& o, Args a) { return o.eq(o.add(o.add(a[0], a[1]), a[2]), o.add(a[0], o.add(a[1], a[2]))); }),
      law("AddComm", 2, {}, [](const Ops& o, Args a) { return o.eq(o.add(a[0], a[1]), o.add(a[1], a[0])); }),
      law("AddIdentity", 1, {}, [](const Ops& o, Args a) { return o.eq(o.add(a[0], o.zero()), a[0]); }),
      law("AddInverse", 1, {}, [](const Ops& o, Args a) { return o.eq(o.add(a[0], o.neg(a[0])), o.zero()); }),
      law("MulAssoc", 3, {},
          [](const Ops& o, Args a) { return o.eq(o.mul(o.mul(a[0], a[1]), a[2]), o.mul(a[0], o.mul(a[1], a[2]))); }),
      law("MulLeftUnit", 1, {}, [](const Ops& o, Args a) { return o.eq(o.mul(o.one(), a[0]), a[0]); }),
      law("LeftDistributive", 3, {},
          [](const Ops& o, Args a) {
            return o.eq(o.mul(a[0], o.add(a[1], a[2])), o.add(o.mul(a[0], a[1]), o.mul(a[0], a[2])));
          }),
      law("RightDistributive", 3, {},
          [](const Ops& o, Args a) {
            return o.eq(o.mul(o.add(a[0], a[1]), a[2]), o.add(o.mul(a[0], a[2]), o.mul(a[1], a[2])));
          }),
  };
}

Law ref_law() {
  return law("Ref", 1, kInv, [](const Ops& o, Args a) { return o.eq(o.inv(o.inv(a[0])), a[0]); });
}

Law pil_law() {
  return law("Pil", 1, kInv, [](const Ops& o, Args a) { return o.eq(o.mul(a[0], o.mul(o.inv(a[0]), a[0])), a[0]); });
}

std::vector<Law> skmd_laws() {
  return {ref_law(),
          law("Ril", 1, kInv, [](const Ops& o, Args a) { return o.eq(o.mul(a[0], o.mul(a[0], o.inv(a[0]))), a[0]); })};
}

std::vector<Law> ir_laws() {
  return {law("RightUnit", 1, {}, [](const Ops& o, Args a) { return o.eq(o.mul(a[0], o.one()), a[0]); }),
          law("NegInverse", 1, kInv,
              [](const Ops& o, Args a) { return o.eq(o.inv(o.neg(a[0])), o.neg(o.inv(a[0]))); }),
          ref_law(), pil_law()};
}

std::vector<Law> pcir_laws() {
  return {law("InvAntiHom", 2, kInv,
              [](const Ops& o, Args a) {
                return o.eq(o.inv(o.mul(a[0], a[1])), o.mul(o.inv(a[1]), o.inv(a[0])));
              }),
          ref_law(), pil_law()};
}

std::vector<Law> derived_laws() {
  return {
      law("Reduced", 1, kInv,
          [](const Ops& o, Args a) { return !o.eq(o.mul(a[0], a[0]), o.zero()) || o.eq(a[0], o.zero()); }),
      law("InverseSquareAbsorb", 1, kInv,
          [](const Ops& o, Args a) {
            const Value xi = o.inv(a[0]);
            return o.eq(o.mul(xi, xi, a[0]), xi);
          }),
      law("RightInverseUnique", 2, kInv,
          [](const Ops& o, Args a) { return !o.eq(o.mul(a[0], a[1]), o.one()) || o.eq(a[0], o.inv(a[1])); }),
      law("LocalUnitIdempotent", 1, kInv,
          [](const Ops& o, Args a) {
            const Value e = o.unit(a[0]);
            return o.eq(o.mul(e, e), e);
          }),
      // (e, x): x·1 = x, Pil at x, and e·e = e implies e·x = x·e.
      law("IdempotentsCentral", 2, kInv,
          [](const Ops& o, Args a) {
            const Value& e = a[0];
            const Value& x = a[1];
            if (!o.eq(o.mul(x, o.one()), x)) return false;
            if (!o.eq(o.mul(x, o.inv(x), x), x)) return false;
            return !o.eq(o.mul(e, e), e) || o.eq(o.mul(e, x), o.mul(x, e));
          }),
      law("LocalUnitCommutes", 1, kInv,
          [](const Ops& o, Args a) { return o.eq(o.mul(a[0], o.inv(a[0])), o.mul(o.inv(a[0]), a[0])); }),
      law("DedekindFinite", 2, kInv,
          [](const Ops& o, Args a) {
            return !o.eq(o.mul(a[0], a[1]), o.one()) || o.eq(o.mul(a[1], a[0]), o.one());
          }),
      law("UnitRegular", 1, kInv,
          [](const Ops& o, Args a) {
            const auto [y, y2] = unit_regular_witness(o.s, a[0]);
            return o.eq(o.mul(a[0], y, a[0]), a[0]) && o.eq(o.mul(y, y2), o.one());
          }),
      law("UniqueInverse", 2, kInv,
          [](const Ops& o, Args a) {
            const Value& x = a[0];
            const Value& y = a[1];
            const bool left = o.eq(o.mul(x, y, x), x) || o.eq(o.mul(x, x, y), x);
            const bool right = o.eq(o.mul(y, x, y), y) || o.eq(o.mul(y, y, x), y);
            return !(left && right) || o.eq(y, o.inv(x));
          }),
      law("LocalUnitLaws", 2, kInv,
          [](const Ops& o, Args a) {
            const Value& x = a[0];
            const Value& y = a[1];
            const Value ux = o.unit(x), uy = o.unit(y), xy = o.mul(x, y), uxy = o.unit(xy);
            const Value xb = o.inv(x), yb = o.inv(y);
            return o.eq(o.mul(x, ux), x) && o.eq(o.mul(ux, x), x) && o.eq(o.mul(uxy, ux, uy), uxy) &&
                   o.eq(o.mul(ux, uy), o.mul(o.mul(xy, yb), xb)) && o.eq(o.inv(xy), o.mul(yb, xb));
          }),
      law("LocalUnitSymmetric", 2, kInv,
          [](const Ops& o, Args a) { return o.eq(o.unit(o.mul(a[0], a[1])), o.unit(o.mul(a[1], a[0]))); }),
      law("ZeroDivisorSymmetric", 2, kInv,
          [](const Ops& o, Args a) {
            return !o.eq(o.mul(a[0], a[1]), o.zero()) || o.eq(o.mul(a[1], a[0]), o.zero());
          }),
  };
}

Value sq(const Ops& o, const Value& a) { return o.mul(a, a); }

std::vector<Law> qspec_laws() {
  return {law("FourSquares", 4, kInv, [](const Ops& o, Args a) {
    Value sum = o.one();
    for (const auto& v : a) sum = o.add(sum, sq(o, v));
    return o.eq(o.z(sum), o.zero());
  })};
}

Law conj_constant(const char* name, Symbol k) {
  return law(name, 0, {k, Symbol::Conj}, [k](const Ops& o, Args) { return o.eq(o.conj(o.c(k)), o.neg(o.c(k))); });
}

Law square_constant(const char* name, Symbol k) {
  return law(name, 0, {k}, [k](const Ops& o, Args) { return o.eq(sq(o, o.c(k)), o.neg(o.one())); });
}

std::vector<Law> conj_laws(bool reversed) {
  const std::vector<Symbol> ci{Symbol::Conj, Symbol::Inv};
  const std::vector<Symbol> c{Symbol::Conj};
  return {
      law("ConjInv", 1, ci, [](const Ops& o, Args a) { return o.eq(o.conj(o.inv(a[0])), o.inv(o.conj(a[0]))); }),
      law("ConjAdd", 2, c,
          [](const Ops& o, Args a) { return o.eq(o.conj(o.add(a[0], a[1])), o.add(o.conj(a[0]), o.conj(a[1]))); }),
      reversed ? law("ConjMulReversed", 2, c,
                     [](const Ops& o, Args a) {
                       return o.eq(o.conj(o.mul(a[0], a[1])), o.mul(o.conj(a[1]), o.conj(a[0])));
                     })
               : law("ConjMul", 2, c,
                     [](const Ops& o, Args a) {
                       return o.eq(o.conj(o.mul(a[0], a[1])), o.mul(o.conj(a[0]), o.conj(a[1])));
                     }),
      law("ConjLocalUnit", 1, ci, [](const Ops& o, Args a) { return o.eq(o.unit(o.conj(a[0])), o.unit(a[0])); }),
  };
}

std::vector<Law> cspec_laws() {
  std::vector<Law> out{square_constant("ISquare", Symbol::I), conj_constant("ConjI", Symbol::I)};
  for (auto& l : conj_laws(false)) out.push_back(std::move(l));
  out.push_back(law("NormPositive", 2, {Symbol::Conj, Symbol::Inv}, [](const Ops& o, Args a) {
    const Value sum = o.add(o.add(o.one(), o.mul(a[0], o.conj(a[0]))), o.mul(a[1], o.conj(a[1])));
    return o.eq(o.z(sum), o.zero());
  }));
  return out;
}

std::vector<Law> hspec_laws() {
  std::vector<Law> out{square_constant("ISquare", Symbol::I), square_constant("JSquare", Symbol::J),
                       square_constant("KSquare", Symbol::K),
                       law("IJK", 0, {Symbol::I, Symbol::J, Symbol::K},
                           [](const Ops& o, Args) {
                             return o.eq(o.mul(o.c(Symbol::I), o.c(Symbol::J), o.c(Symbol::K)), o.neg(o.one()));
                           }),
                       conj_constant("ConjI", Symbol::I), conj_constant("ConjJ", Symbol::J)};
  for (auto& l : conj_laws(true)) out.push_back(std::move(l));
  out.push_back(law("NormPositive", 1, {Symbol::Conj, Symbol::Inv}, [](const Ops& o, Args a) {
    return o.eq(o.z(o.add(o.one(), o.mul(a[0], o.conj(a[0])))), o.zero());
  }));
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

constexpr SuiteId kAllSuites[] = {SuiteId::RU,           SuiteId::SkMd,  SuiteId::IR,    SuiteId::PCIR,
                                  SuiteId::DerivedProps, SuiteId::QSpec, SuiteId::CSpec, SuiteId::HSpec};

Rng law_rng(std::uint64_t seed, std::size_t law_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                    static_cast<std::uint32_t>(law_index)};
  return Rng(seq);
}

std::uint64_t checked_power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > (UINT64_MAX / base)) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace

std::string_view to_string(SuiteId id) {
  switch (id) {
    case SuiteId::RU: return "RU";
    case SuiteId::SkMd: return "SkMd";
    case SuiteId::IR: return "IR";
    case SuiteId::PCIR: return "PCIR";
    case SuiteId::DerivedProps: return "DerivedProps";
    case SuiteId::QSpec: return "QSpec";
    case SuiteId::CSpec: return "CSpec";
    case SuiteId::HSpec: return "HSpec";
  }
  return "?";
}

std::optional<SuiteId> parse_suite(std::string_view name) {
  const auto want = lower(name);
  for (auto id : kAllSuites)
    if (lower(to_string(id)) == want) return id;
  return std::nullopt;
}

LawSuite suite(SuiteId id) {
  switch (id) {
    case SuiteId::RU: return {id, ring_laws()};
    case SuiteId::SkMd: return {id, skmd_laws()};
    case SuiteId::IR: return {id, ir_laws()};
    case SuiteId::PCIR: return {id, pcir_laws()};
    case SuiteId::DerivedProps: return {id, derived_laws()};
    case SuiteId::QSpec: return {id, qspec_laws()};
    case SuiteId::CSpec: return {id, cspec_laws()};
    case SuiteId::HSpec: return {id, hspec_laws()};
  }
  throw std::invalid_argument("unknown suite");
}

LawSuite derived_props_catalog() { return suite(SuiteId::DerivedProps); }

std::vector<LawSuite> spec_suites() { return {suite(SuiteId::QSpec), suite(SuiteId::CSpec), suite(SuiteId::HSpec)}; }

std::string Mode::describe() const {
  switch (kind) {
    case Kind::Exhaustive: return "exhaustive";
    case Kind::Grid: return "grid " + std::to_string(grid);
    case Kind::Random:
      return "random seed=" + std::to_string(seed) + " samples=" + std::to_string(samples) +
             " bound=" + std::to_string(bound);
  }
  return "?";
}

bool LawReport::all_pass() const {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const LawOutcome& o) { return o.pass; });
}

const LawOutcome* LawReport::find(std::string_view law) const {
  for (const auto& o : outcomes)
    if (o.name == law) return &o;
  return nullptr;
}

std::vector<Value> sample_stream(const Structure& s, std::uint64_t seed, std::int64_t bound, std::uint64_t count) {
  std::vector<Value> out;
  out.reserve(count);
  if (auto carrier = s.carrier()) {
    for (std::uint64_t i = 0; i < count; ++i) out.push_back((*carrier)[i % carrier->size()]);
    return out;
  }
  Rng rng(seed);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(s.sample(rng, bound, i));
  return out;
}

std::string render_tuple(const Structure& s, std::span<const Value> tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i != 0) out += ", ";
    out += s.render(tuple[i]);
  }
  return out + ")";
}

LawReport run_suite(const LawSuite& suite, const Structure& s, const Mode& mode, Exec exec) {
  for (const auto& l : suite.laws)
    for (Symbol sym : l.symbols)
      if (!s.supports(sym)) throw UnsupportedSymbol(s.name(), std::string(to_string(sym)));

  std::vector<Value> domain;
  if (mode.kind == Mode::Kind::Exhaustive) {
    auto c = s.carrier();
    if (!c) throw UsageError("exhaustive mode needs a finite structure; '" + s.name() + "' is infinite");
    domain = std::move(*c);
  } else if (mode.kind == Mode::Kind::Grid) {
    if (mode.grid < 0) throw UsageError("grid size must be non-negative");
    domain = s.grid(mode.grid);
  }

  LawReport rep{std::string(suite.name()), s.name(), mode, {}, 0};
  for (std::size_t li = 0; li < suite.laws.size(); ++li) {
    const Law& l = suite.laws[li];
    const auto arity = static_cast<std::size_t>(l.arity);
    LawOutcome out{l.name};

    // Either `tuples` holds explicit tuples (flattened) or tuples are decoded from the domain.
    std::vector<Value> tuples;
    std::uint64_t count = 0;
    bool explicit_tuples = false;
    if (mode.kind == Mode::Kind::Random) {
      count = arity == 0 ? 1 : mode.samples;
      Rng rng = law_rng(mode.seed, li);
      const std::uint64_t values = count * arity;
      if (auto c = s.carrier()) {
        std::uniform_int_distribution<std::size_t> pick(0, c->size() - 1);
        for (std::uint64_t i = 0; i < values; ++i) tuples.push_back((*c)[pick(rng)]);
      } else {
        for (std::uint64_t i = 0; i < values; ++i) tuples.push_back(s.sample(rng, mode.bound, i));
      }
      explicit_tuples = true;
    } else {
      count = checked_power(domain.size(), l.arity);
      if (count > kExhaustiveCap) {
        out.sampled = true;
        count = mode.samples;
        Rng rng = law_rng(mode.seed, li);
        const auto last = static_cast<std::int64_t>(domain.size()) - 1;
        for (std::uint64_t i = 0; i < count * arity; ++i)
          tuples.push_back(domain[static_cast<std::size_t>(uniform_int(rng, 0, last))]);
        explicit_tuples = true;
      }
    }

    auto tuple_at = [&](std::uint64_t idx) {
      std::vector<Value> t(arity);
      if (explicit_tuples) {
        std::copy_n(tuples.begin() + static_cast<std::ptrdiff_t>(idx * arity), arity, t.begin());
      } else {
        for (std::size_t k = arity; k-- > 0;) {
          t[k] = domain[idx % domain.size()];
          idx /= domain.size();
        }
      }
      return t;
    };

    const std::uint64_t bad = first_failure(count, exec, [&](std::uint64_t idx) {
      const auto t = tuple_at(idx);
      return l.holds(s, t);
    });
    out.pass = bad == count;
    out.cases = out.pass ? count : bad + 1;
    if (!out.pass) {
      out.witness = tuple_at(bad);
      out.rendered_witness = render_tuple(s, out.witness);
    }
    rep.total_cases += out.cases;
    rep.outcomes.push_back(std::move(out));
  }
  return rep;
}

std::string render_porcelain(const LawReport& r) {
  std::ostringstream os;
  for (const auto& o : r.outcomes) {
    os << "LAW " << r.suite << '.' << o.name << ' ' << (o.pass ? "pass" : "fail") << " cases=" << o.cases;
    if (!o.pass) os << " witness=" << o.rendered_witness;
    os << '\n';
  }
  return os.str();
}

std::string render_table(const LawReport& r) {
  std::ostringstream os;
  os << "suite " << r.suite << " on " << r.structure << " (" << r.mode.describe() << ")\n";
  std::size_t width = 4;
  for (const auto& o : r.outcomes) width = std::max(width, o.name.size());
  os << "  " << std::left << std::setw(static_cast<int>(width)) << "law" << "  result  " << std::setw(10) << "cases"
     << "witness\n";
  for (const auto& o : r.outcomes) {
    os << "  " << std::setw(static_cast<int>(width)) << o.name << "  " << std::setw(6) << (o.pass ? "pass" : "FAIL")
       << "  ";
    const std::string cases = std::to_string(o.cases) + (o.sampled ? "*" : "");
    if (o.pass)
      os << cases << '\n';
    else
      os << std::setw(10) << cases << o.rendered_witness << '\n';
  }
  const auto failed = std::count_if(r.outcomes.begin(), r.outcomes.end(), [](const LawOutcome& o) { return !o.pass; });
  os << r.outcomes.size() - static_cast<std::size_t>(failed) << '/' << r.outcomes.size() << " laws pass, "
     << r.total_cases << " cases";
  if (std::any_of(r.outcomes.begin(), r.outcomes.end(), [](const LawOutcome& o) { return o.sampled; }))
    os << " (* sampled: domain above " << kExhaustiveCap << " tuples)";
  os << '\n';
  return os.str();
}

}  // namespace skm
