#include "skm/term.hpp"

#include <algorithm>
#include <cctype>

namespace skm {

// ---- construction ----------------------------------------------------------

Term Term::make(Kind k, std::vector<Term> children, mpz_class value) {
  return Term(std::make_shared<const Node>(Node{k, std::move(value), std::move(children)}));
}

Term Term::zero() { return make(Kind::Zero, {}); }
Term Term::one() { return make(Kind::One, {}); }
Term Term::constant_i() { return make(Kind::ConstI, {}); }
Term Term::constant_j() { return make(Kind::ConstJ, {}); }
Term Term::constant_k() { return make(Kind::ConstK, {}); }
Term Term::numeral(mpz_class n) {
  if (n < 0) throw std::invalid_argument("negative numeral");
  return make(Kind::Numeral, {}, std::move(n));
}
Term Term::add(Term a, Term b) { return make(Kind::Add, {std::move(a), std::move(b)}); }
Term Term::sub(Term a, Term b) { return make(Kind::Sub, {std::move(a), std::move(b)}); }
Term Term::mul(Term a, Term b) { return make(Kind::Mul, {std::move(a), std::move(b)}); }
Term Term::div(Term a, Term b) { return make(Kind::Div, {std::move(a), std::move(b)}); }
Term Term::neg(Term a) { return make(Kind::Neg, {std::move(a)}); }
Term Term::inv(Term a) { return make(Kind::Inv, {std::move(a)}); }
Term Term::conj(Term a) { return make(Kind::Conj, {std::move(a)}); }
Term Term::square(Term a) { return make(Kind::Square, {std::move(a)}); }
Term Term::local_unit(Term a) { return make(Kind::LocalUnit, {std::move(a)}); }
Term Term::z_of(Term a) { return make(Kind::ZOf, {std::move(a)}); }

std::size_t Term::size() const {
  std::size_t n = 1;
  for (const auto& c : node_->children) n += c.size();
  return n;
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const auto& c : node_->children) d = std::max(d, c.depth());
  return d + 1;
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.arity() != b.arity()) return false;
  if (a.kind() == Term::Kind::Numeral && a.numeral_value() != b.numeral_value()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (!(a.operand(i) == b.operand(i))) return false;
  return true;
}

// ---- parsing ---------------------------------------------------------------

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i != 0) out += ", ";
    out += items[i];
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, std::string found)
    : Error("syntax error at offset " + std::to_string(offset) + ": expected one of {" + join(expected) +
            "}, found " + found),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

constexpr std::size_t kMaxNesting = 2000;

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Term parse_all() {
    Term t = expr();
    skip_ws();
    if (pos_ != src_.size()) fail({"'+'", "'-'", "'*'", "'^-1'", "end of input"});
    return t;
  }

 private:
  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxNesting) p_.fail({"shallower nesting"});
    }
    ~DepthGuard() { --p_.depth_; }
    Parser& p_;
  };

  [[noreturn]] void fail(std::vector<std::string> expected) {
    skip_ws();
    std::string found = pos_ >= src_.size() ? "end of input" : "'" + std::string(1, src_[pos_]) + "'";
    throw ParseError(pos_, std::move(expected), std::move(found));
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string("'") + c + "'"});
  }

  Term expr() {
    DepthGuard guard(*this);
    Term lhs = mulexp();
    while (true) {
      if (accept('+')) {
        lhs = Term::add(std::move(lhs), mulexp());
      } else if (accept('-')) {
        lhs = Term::sub(std::move(lhs), mulexp());
      } else {
        return lhs;
      }
    }
  }

  Term mulexp() {
    Term lhs = unexp();
    while (accept('*')) lhs = Term::mul(std::move(lhs), unexp());
    return lhs;
  }

  Term unexp() {
    DepthGuard guard(*this);
    if (accept('-')) return Term::neg(unexp());
    return postfix();
  }

  Term postfix() {
    Term t = atom();
    while (accept('^')) {
      expect('-');
      skip_ws();
      if (pos_ < src_.size() && src_[pos_] == '1' &&
          (pos_ + 1 >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
        ++pos_;
      } else {
        fail({"'1'"});
      }
      t = Term::inv(std::move(t));
    }
    return t;
  }

  Term call(Term (*wrap)(Term)) {
    expect('(');
    Term inner = expr();
    expect(')');
    return wrap(std::move(inner));
  }

  Term atom() {
    skip_ws();
    static const std::vector<std::string> kAtomStart = {"'0'", "'1'", "INT", "'i'", "'j'", "'k'", "'inv'",
                                                        "'c'", "'unit'", "'z'", "'('", "'-'"};
    if (pos_ >= src_.size()) fail(kAtomStart);
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const std::string digits(src_.substr(start, pos_ - start));
      if (digits == "0") return Term::zero();
      if (digits == "1") return Term::one();
      return Term::numeral(mpz_class(digits, 10));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const std::string_view word = src_.substr(start, pos_ - start);
      if (word == "i") return Term::constant_i();
      if (word == "j") return Term::constant_j();
      if (word == "k") return Term::constant_k();
      if (word == "inv") return call(&Term::inv);
      if (word == "c") return call(&Term::conj);
      if (word == "unit") return call(&Term::local_unit);
      if (word == "z") return call(&Term::z_of);
      pos_ = start;
      fail(kAtomStart);
    }
    if (accept('(')) {
      Term inner = expr();
      expect(')');
      return inner;
    }
    fail(kAtomStart);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

}  // namespace

Term parse(std::string_view src) { return Parser(src).parse_all(); }

// ---- printing --------------------------------------------------------------

namespace {

// Binding strength of the printed form.
int level(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Add:
    case Term::Kind::Sub: return 1;
    case Term::Kind::Mul:
    case Term::Kind::Div:
    case Term::Kind::Square: return 2;
    case Term::Kind::Neg: return 3;
    default: return 4;
  }
}

void print_to(const Term& t, std::string& out);

void print_at(const Term& t, int min_level, std::string& out) {
  if (level(t) < min_level) {
    out += '(';
    print_to(t, out);
    out += ')';
  } else {
    print_to(t, out);
  }
}

void print_call(const char* name, const Term& t, std::string& out) {
  out += name;
  out += '(';
  print_to(t.operand(0), out);
  out += ')';
}

void print_to(const Term& t, std::string& out) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Zero: out += '0'; return;
    case K::One: out += '1'; return;
    case K::ConstI: out += 'i'; return;
    case K::ConstJ: out += 'j'; return;
    case K::ConstK: out += 'k'; return;
    case K::Numeral: out += t.numeral_value().get_str(); return;
    case K::Add:
    case K::Sub:
      print_at(t.operand(0), 1, out);
      out += t.kind() == K::Add ? '+' : '-';
      print_at(t.operand(1), 2, out);
      return;
    case K::Mul:
      print_at(t.operand(0), 2, out);
      out += '*';
      print_at(t.operand(1), 3, out);
      return;
    case K::Div:
      print_at(t.operand(0), 2, out);
      out += "*inv(";
      print_to(t.operand(1), out);
      out += ')';
      return;
    case K::Square:
      print_at(t.operand(0), 2, out);
      out += '*';
      print_at(t.operand(0), 3, out);
      return;
    case K::Neg:
      out += '-';
      print_at(t.operand(0), 4, out);
      return;
    case K::Inv: print_call("inv", t, out); return;
    case K::Conj: print_call("c", t, out); return;
    case K::LocalUnit: print_call("unit", t, out); return;
    case K::ZOf: print_call("z", t, out); return;
  }
}

}  // namespace

std::string print(const Term& t) {
  std::string out;
  print_to(t, out);
  return out;
}

// ---- desugaring and evaluation ---------------------------------------------

Term desugar(const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::Zero:
    case K::One:
    case K::ConstI:
    case K::ConstJ:
    case K::ConstK: return t;
    case K::Numeral:
      if (t.numeral_value() == 0) return Term::zero();
      if (t.numeral_value() == 1) return Term::one();
      return t;
    case K::Add: return Term::add(desugar(t.operand(0)), desugar(t.operand(1)));
    case K::Mul: return Term::mul(desugar(t.operand(0)), desugar(t.operand(1)));
    case K::Neg: return Term::neg(desugar(t.operand(0)));
    case K::Inv: return Term::inv(desugar(t.operand(0)));
    case K::Conj: return Term::conj(desugar(t.operand(0)));
    case K::Sub: return Term::add(desugar(t.operand(0)), Term::neg(desugar(t.operand(1))));
    case K::Div: return Term::mul(desugar(t.operand(0)), Term::inv(desugar(t.operand(1))));
    case K::Square: {
      Term a = desugar(t.operand(0));
      return Term::mul(a, a);
    }
    case K::LocalUnit: {
      Term a = desugar(t.operand(0));
      return Term::mul(a, Term::inv(a));
    }
    case K::ZOf: {
      Term a = desugar(t.operand(0));
      return Term::add(Term::one(), Term::neg(Term::mul(a, Term::inv(a))));
    }
  }
  return t;
}

bool is_pure(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::ConstI:
    case Term::Kind::ConstJ:
    case Term::Kind::ConstK:
    case Term::Kind::Conj: return false;
    default: break;
  }
  for (std::size_t i = 0; i < t.arity(); ++i)
    if (!is_pure(t.operand(i))) return false;
  return true;
}

Value numeral(const Structure& s, const mpz_class& n) {
  Value result = s.zero();
  Value power = s.one();
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t b = 0; b < bits; ++b) {
    if (mpz_tstbit(n.get_mpz_t(), b) != 0) result = s.add(result, power);
    if (b + 1 < bits) power = s.add(power, power);
  }
  return result;
}

Value eval(const Term& t, const Structure& s) {
  using K = Term::Kind;
  auto arg = [&](std::size_t i) { return eval(t.operand(i), s); };
  switch (t.kind()) {
    case K::Zero: return s.zero();
    case K::One: return s.one();
    case K::ConstI: return s.constant(Symbol::I);
    case K::ConstJ: return s.constant(Symbol::J);
    case K::ConstK: return s.constant(Symbol::K);
    case K::Numeral: return numeral(s, t.numeral_value());
    case K::Add: return s.add(arg(0), arg(1));
    case K::Neg: return s.neg(arg(0));
    case K::Mul: return s.mul(arg(0), arg(1));
    case K::Inv: return s.inv(arg(0));
    case K::Conj: return s.conj(arg(0));
    case K::Sub: return sub(s, arg(0), arg(1));
    case K::Div: return div(s, arg(0), arg(1));
    case K::Square: return square(s, arg(0));
    case K::LocalUnit: return local_unit(s, arg(0));
    case K::ZOf: return z_of(s, arg(0));
  }
  throw std::logic_error("eval: unknown term kind");
}

// ---- normalization ---------------------------------------------------------

CanonicalRational CanonicalRational::from(const Rational& q) {
  if (q.is_zero()) return {};
  return {q.sign(), abs(q.num()), q.den()};
}

Rational CanonicalRational::value() const {
  if (sign == 0) return {};
  return Rational(sign < 0 ? mpz_class(-k) : k, l);
}

namespace {

void require_pure(const Term& t) {
  using K = Term::Kind;
  switch (t.kind()) {
    case K::ConstI: throw UnsupportedSymbol("q0", "i");
    case K::ConstJ: throw UnsupportedSymbol("q0", "j");
    case K::ConstK: throw UnsupportedSymbol("q0", "k");
    case K::Conj: throw UnsupportedSymbol("q0", "c");
    default: break;
  }
  for (std::size_t i = 0; i < t.arity(); ++i) require_pure(t.operand(i));
}

}  // namespace

CanonicalRational normalize(const Term& t) {
  require_pure(t);
  static const RationalField q0;
  return CanonicalRational::from(eval(t, q0).as<Rational>());
}

Term print_canonical(const CanonicalRational& c) {
  if (c.sign == 0) return Term::zero();
  Term body = Term::mul(Term::numeral(c.k), Term::inv(Term::numeral(c.l)));
  return c.sign < 0 ? Term::neg(std::move(body)) : body;
}

bool equiv(const Term& a, const Term& b) { return normalize(a) == normalize(b); }

}  // namespace skm
