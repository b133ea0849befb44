#include "skm/cli.hpp"

#include "skm/finite.hpp"
#include "skm/laws.hpp"
#include "skm/term.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace skm {

namespace {

std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::uint64_t parse_u64(std::string_view s, std::string_view what) {
  if (s.empty() || s.size() > 19 || s.find_first_not_of("0123456789") != std::string_view::npos)
    throw UsageError("bad " + std::string(what) + " '" + std::string(s) + "'");
  return std::stoull(std::string(s));
}

LoadedTable load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return read_table(in);
}

StructurePtr table_structure(const std::string& path) {
  auto lt = load_table_file(path);
  FiniteRing ring(lt.tables);  // validates the ring axioms
  return std::make_shared<TableStructure>("table:" + path, std::move(lt.tables), std::move(lt.inv));
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

template <typename T>
std::string table_text(const T& t) {
  std::ostringstream os;
  write_table(os, t);
  return os.str();
}

// ---- commands --------------------------------------------------------------

int cmd_eval(const std::string& expr, const std::string& selector, std::ostream& out) {
  const auto s = parse_structure(selector);
  out << s->render(eval(parse(expr), *s)) << '\n';
  return exit_code::kOk;
}

int cmd_normalize(const std::string& expr, std::ostream& out) {
  out << print(print_canonical(normalize(parse(expr)))) << '\n';
  return exit_code::kOk;
}

struct CheckOptions {
  std::string suite;
  std::string structure = "q0";
  bool exhaustive = false;
  int grid = -1;
  std::uint64_t seed = 0;
  std::uint64_t samples = 10000;
  std::int64_t bound = 100;
  bool porcelain = false;
  bool expect_fail = false;
  bool serial = false;
};

int cmd_check(const CheckOptions& o, std::ostream& out) {
  const auto id = parse_suite(o.suite);
  if (!id) throw UsageError("unknown suite '" + o.suite + "'");
  if (o.exhaustive && o.grid >= 0) throw UsageError("--exhaustive and --grid are exclusive");
  if (o.bound < 1) throw UsageError("--bound must be positive");
  const auto s = parse_structure(o.structure);

  Mode mode = Mode::random(o.seed, o.samples, o.bound);
  if (o.exhaustive) mode.kind = Mode::Kind::Exhaustive;
  if (o.grid >= 0) {
    mode.kind = Mode::Kind::Grid;
    mode.grid = o.grid;
  }
  const auto rep = run_suite(suite(*id), *s, mode, o.serial ? Exec::Serial : Exec::Parallel);
  out << (o.porcelain ? render_porcelain(rep) : render_table(rep));
  const bool ok = rep.all_pass() != o.expect_fail;
  return ok ? exit_code::kOk : exit_code::kLawFailure;
}

void print_suite_summary(const FiniteInversionStructure& fs, std::ostream& out) {
  const TableStructure ts(fs);
  for (auto id : {SuiteId::RU, SuiteId::SkMd, SuiteId::IR, SuiteId::PCIR, SuiteId::DerivedProps}) {
    const auto rep = run_suite(suite(id), ts, Mode::exhaustive());
    out << "suite " << to_string(id) << ": " << (rep.all_pass() ? "pass" : "fail");
    for (const auto& o : rep.outcomes)
      if (!o.pass) out << ' ' << o.name << o.rendered_witness;
    out << '\n';
  }
}

int cmd_expand(const std::string& path, const std::string& flavor, const std::string& output, std::ostream& out,
               std::ostream& err) {
  auto lt = load_table_file(path);
  const FiniteRing ring(std::move(lt.tables));
  const auto fs = flavor == "strong" ? expand_strongly_regular(ring) : expand_distinctly_regular(ring);
  if (output.empty()) {
    write_table(out, fs);
    print_suite_summary(fs, err);
  } else {
    write_file(output, table_text(fs));
    out << "wrote " << output << '\n';
    print_suite_summary(fs, out);
  }
  return exit_code::kOk;
}

int cmd_decompose(const std::string& path, const std::string& prefix, std::ostream& out) {
  auto lt = load_table_file(path);
  if (!lt.inv) throw UsageError("'" + path + "' has no inv line; run expand first");
  const FiniteInversionStructure fs(FiniteRing(std::move(lt.tables)), std::move(*lt.inv));
  const auto d = decompose(fs);

  out << "factors:";
  for (auto n : d.factor_orders()) out << ' ' << n;
  out << "\natoms:";
  for (auto a : d.atoms) out << ' ' << a;
  out << '\n';
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    out << "factor " << i << ": order " << d.factors[i].order() << ", field " << (d.factor_is_field[i] ? "yes" : "no")
        << '\n';
    if (!prefix.empty()) {
      const auto file = prefix + ".factor" + std::to_string(i) + ".tbl";
      write_file(file, table_text(d.factors[i]));
      out << "  wrote " << file << '\n';
    }
  }
  out << "embedding:\n";
  for (Index x = 0; x < d.embedding.size(); ++x) {
    out << "  " << x << " -> (";
    for (std::size_t i = 0; i < d.embedding[x].size(); ++i) out << (i ? ", " : "") << d.embedding[x][i];
    out << ")\n";
  }
  out << "injective: " << (d.injective ? "yes" : "no") << '\n';
  out << "operations preserved: " << (d.preserves_operations ? "yes" : "no") << '\n';
  const bool fields = std::all_of(d.factor_is_field.begin(), d.factor_is_field.end(), [](bool b) { return b; });
  return d.injective && d.preserves_operations && fields ? exit_code::kOk : exit_code::kLawFailure;
}

int demo_matrix(std::ostream& out) {
  const MatrixRing m;
  const Matrix2 p{Rational(1), Rational(0), Rational(1), Rational(0)};
  const Value pv = p;
  const Value pp = m.mul(pv, pv);
  const Value pi = m.inv(pv);
  const Value pi2 = m.mul(pi, pi);
  out << "P = " << m.render(pv) << '\n';
  out << "P*P = " << m.render(pp) << (pp == pv ? "  (P is idempotent)" : "") << '\n';
  out << "inv(P) = " << m.render(pi) << '\n';
  out << "inv(P)*inv(P) = " << m.render(pi2) << (pi2 == pi ? "" : "  (differs from inv(P))") << '\n';

  const Value lhs = m.inv(m.mul(pv, pv));
  const Value rhs = m.mul(m.inv(pv), m.inv(pv));
  out << "inv(P*P) = " << m.render(lhs) << ", inv(P)*inv(P) = " << m.render(rhs)
      << (lhs == rhs ? "" : "  (pseudo-commutativity fails)") << '\n';

  const Value e21 = Matrix2{Rational(0), Rational(0), Rational(1), Rational(0)};
  const Value ril = m.mul(e21, m.mul(e21, m.inv(e21)));
  out << "e21 = " << m.render(e21) << ", inv(e21) = " << m.render(m.inv(e21)) << '\n';
  out << "e21*(e21*inv(e21)) = " << m.render(ril) << (ril == e21 ? "" : "  (Ril fails)") << '\n';
  const Value pil = m.mul(e21, m.mul(m.inv(e21), e21));
  out << "e21*(inv(e21)*e21) = " << m.render(pil) << (pil == e21 ? "  (Pil holds)" : "") << '\n';

  const bool expected = pp == pv && pi2 != pi && lhs != rhs && ril != e21 && pil == e21;
  out << (expected ? "observed: P idempotent, inv(P) not idempotent\n" : "unexpected outcome\n");
  return expected ? exit_code::kOk : exit_code::kLawFailure;
}

int demo_unit_regular(const std::string& selector, std::uint64_t seed, std::uint64_t samples, std::ostream& out) {
  const auto s = parse_structure(selector);
  if (!s->supports(Symbol::Inv)) throw UnsupportedSymbol(s->name(), "inv");
  bool ok = true;
  std::vector<Value> xs{s->zero()};
  for (auto& v : sample_stream(*s, seed, 20, samples)) xs.push_back(std::move(v));
  for (const auto& x : xs) {
    const auto [y, y2] = unit_regular_witness(*s, x);
    const Value xyx = s->mul(s->mul(x, y), x);
    const Value yy2 = s->mul(y, y2);
    const bool good = s->eq(xyx, x) && s->eq(yy2, s->one());
    ok = ok && good;
    out << "x = " << s->render(x) << "\n  y = Z(x) + inv(x) = " << s->render(y) << "\n  y' = Z(x) + x = " << s->render(y2)
        << "\n  x*y*x = " << s->render(xyx) << "\n  y*y' = " << s->render(yy2) << (good ? "  ok" : "  MISMATCH")
        << '\n';
  }
  return ok ? exit_code::kOk : exit_code::kLawFailure;
}

int demo_uniqueness(std::uint32_t m, std::ostream& out) {
  const auto fs = expand_strongly_regular(zmod(m));
  out << "Z/" << m << " inv:";
  for (auto v : fs.inv_table()) out << ' ' << v;
  const auto good = verify_unique_inverse(fs);
  out << "\nuniqueness: " << (good.pass ? "pass" : "fail") << ", " << good.pairs_checked << " pairs\n";

  bool control_fails = true;
  if (m > 3) {
    auto bad_inv = fs.inv_table();
    std::swap(bad_inv[2], bad_inv[3]);
    const FiniteInversionStructure corrupted(fs.ring(), bad_inv);
    const auto bad = verify_unique_inverse(corrupted);
    out << "corrupted (inv(2), inv(3) swapped) inv:";
    for (auto v : bad_inv) out << ' ' << v;
    out << "\nuniqueness: " << (bad.pass ? "pass" : "fail");
    if (bad.witness) out << " at (" << bad.witness->first << ", " << bad.witness->second << ")";
    out << '\n';
    control_fails = !bad.pass;
  }
  return good.pass && control_fails ? exit_code::kOk : exit_code::kLawFailure;
}

int cmd_generate(const std::string& spec, const std::string& output, std::ostream& out) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("generator must be zmod:<m>, zprod:<m>,<m>,... or m2:<p>");
  const auto kind = spec.substr(0, colon);
  const auto arg = spec.substr(colon + 1);
  auto small = [](std::string_view s) {
    const auto v = parse_u64(s, "modulus");
    if (v == 0 || v > 4096) throw UsageError("modulus must be in 1..4096");
    return static_cast<std::uint32_t>(v);
  };
  std::optional<FiniteRing> ring;
  if (kind == "zmod") {
    ring.emplace(zmod(small(arg)));
  } else if (kind == "zprod") {
    std::vector<std::uint32_t> moduli;
    std::uint64_t n = 1;
    for (const auto& part : split_top_level(arg)) {
      moduli.push_back(small(part));
      n *= moduli.back();
      if (n > 4096) throw UsageError("product order exceeds 4096");
    }
    ring.emplace(zmod_product(moduli));
  } else if (kind == "m2") {
    const auto p = small(arg);
    if (p < 2 || p > 7) throw UsageError("m2 modulus must be in 2..7");
    ring.emplace(matrix_ring_mod(p));
  } else {
    throw UsageError("unknown generator '" + kind + "'");
  }
  if (output.empty()) {
    write_table(out, *ring);
  } else {
    write_file(output, table_text(*ring));
    out << "wrote " << output << '\n';
  }
  return exit_code::kOk;
}

}  // namespace

StructurePtr parse_structure(std::string_view sel) {
  if (sel == "q0") return std::make_shared<RationalField>();
  if (sel == "c0") return std::make_shared<ComplexField>();
  if (sel == "h0") return std::make_shared<QuaternionField>();
  if (sel == "m2q0") return std::make_shared<MatrixRing>();
  if (sel.starts_with("fp:")) {
    const auto p = parse_u64(sel.substr(3), "prime");
    try {
      return std::make_shared<PrimeField>(p);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (sel.starts_with("table:")) {
    if (sel.size() == 6) throw UsageError("table: needs a path");
    return table_structure(std::string(sel.substr(6)));
  }
  if (sel.starts_with("prod:")) {
    auto grouped = [](const std::string& s) { return s.size() >= 2 && s.front() == '(' && s.back() == ')'; };
    auto parts = split_top_level(sel.substr(5));
    if (parts.size() == 1 && grouped(parts[0])) parts = split_top_level(parts[0].substr(1, parts[0].size() - 2));
    std::vector<StructurePtr> factors;
    for (const auto& part : parts) {
      if (part.empty() || part == "()") throw UsageError("empty factor in '" + std::string(sel) + "'");
      factors.push_back(parse_structure(grouped(part) ? "prod:" + part.substr(1, part.size() - 2) : part));
    }
    return std::make_shared<ProductStructure>(std::move(factors));
  }
  throw UsageError("unknown structure '" + std::string(sel) + "'");
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Skew meadows, inversion rings and zero-totalized division", "skm"};
  app.require_subcommand(1);

  std::string expr, selector = "q0";
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a closed term in a structure");
  eval_cmd->add_option("expr", expr, "Term, e.g. \"inv(1+1+1)\"")->required();
  eval_cmd->add_option("-s,--structure", selector, "q0 | c0 | h0 | m2q0 | fp:<p> | prod:<sel>,... | table:<path>");

  auto* norm_cmd = app.add_subcommand("normalize", "Canonical form of a closed term over the rationals");
  norm_cmd->add_option("expr", expr, "Term over 0, 1, +, -, *, inv")->required();

  CheckOptions co;
  auto* check_cmd = app.add_subcommand("check", "Run a law suite against a structure");
  check_cmd->add_option("--suite", co.suite, "RU | SkMd | IR | PCIR | DerivedProps | QSpec | CSpec | HSpec")
      ->required();
  check_cmd->add_option("-s,--structure", co.structure, "Structure selector");
  check_cmd->add_flag("--exhaustive", co.exhaustive, "Every tuple over a finite carrier");
  check_cmd->add_option("--grid", co.grid, "Every tuple over the grid with entries {-N..N} and +-1/2");
  check_cmd->add_option("--seed", co.seed, "Random seed");
  check_cmd->add_option("--samples", co.samples, "Tuples per law in random mode");
  check_cmd->add_option("--bound", co.bound, "Size bound for sampled rationals");
  check_cmd->add_flag("--porcelain", co.porcelain, "Machine-readable LAW lines");
  check_cmd->add_flag("--expect-fail", co.expect_fail, "Succeed only if some law fails (negative controls)");
  check_cmd->add_flag("--serial", co.serial, "Use the serial reference kernels");

  std::string path, flavor = "strong", output;
  auto* expand_cmd = app.add_subcommand("expand", "Add an inverse table to a finite regular ring");
  expand_cmd->add_option("table", path, "Ring table file")->required();
  expand_cmd->add_option("--flavor", flavor, "strong | distinct")->check(CLI::IsMember({"strong", "distinct"}));
  expand_cmd->add_option("-o,--output", output, "Output table file (stdout when absent)");

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a finite skew meadow into zero-totalized fields");
  decompose_cmd->add_option("table", path, "Table file with an inv line")->required();
  decompose_cmd->add_option("-o,--output", output, "Prefix for factor table files");

  std::string demo;
  std::uint64_t demo_seed = 0, demo_samples = 5;
  std::uint32_t demo_modulus = 7;
  auto* demo_cmd = app.add_subcommand("demo", "Narrated constructions");
  demo_cmd->add_option("name", demo, "matrix-counterexample | unit-regular | uniqueness")
      ->required()
      ->check(CLI::IsMember({"matrix-counterexample", "unit-regular", "uniqueness"}));
  demo_cmd->add_option("-s,--structure", selector, "Structure for unit-regular");
  demo_cmd->add_option("--seed", demo_seed, "Seed for unit-regular");
  demo_cmd->add_option("--samples", demo_samples, "Elements shown by unit-regular");
  demo_cmd->add_option("--modulus", demo_modulus, "Square-free modulus for uniqueness")
      ->check(CLI::Range(2U, 1000U));

  std::string gen;
  auto* gen_cmd = app.add_subcommand("generate", "Write a ring table: zmod:<m>, zprod:<m>,<m>,... or m2:<p>");
  gen_cmd->add_option("spec", gen, "Generator")->required();
  gen_cmd->add_option("-o,--output", output, "Output file (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    if (*eval_cmd) return cmd_eval(expr, selector, out);
    if (*norm_cmd) return cmd_normalize(expr, out);
    if (*check_cmd) return cmd_check(co, out);
    if (*expand_cmd) return cmd_expand(path, flavor, output, out, err);
    if (*decompose_cmd) return cmd_decompose(path, output, out);
    if (*gen_cmd) return cmd_generate(gen, output, out);
    if (*demo_cmd) {
      if (demo == "matrix-counterexample") return demo_matrix(out);
      if (demo == "unit-regular") return demo_unit_regular(selector, demo_seed, demo_samples, out);
      return demo_uniqueness(demo_modulus, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const UnsupportedSymbol& e) {
    err << "unsupported: " << e.what() << '\n';
    return exit_code::kUnsupported;
  } catch (const PreconditionFailed& e) {
    err << "precondition failed: " << e.what() << "\nwitness: " << e.witness() << '\n';
    return exit_code::kPrecondition;
  } catch (const TableError& e) {
    err << "table error: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}

}  // namespace skm
