#pragma once

#include "skm/errors.hpp"
#include "skm/rational.hpp"
#include "skm/structure.hpp"

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace skm {

/// Closed term over 0, 1, +, −, ·, ⁻¹ extended with i, j, k and conjugation c.
///
/// Sub, Div, Square, LocalUnit, ZOf and Numeral are sugar; desugar() removes all
/// of them except Numeral(n ≥ 2), which stands for the sum of n ones.
class Term {
 public:
  enum class Kind {
    Zero,
    One,
    ConstI,
    ConstJ,
    ConstK,
    Add,
    Neg,
    Mul,
    Inv,
    Conj,
    Sub,
    Div,
    Square,
    LocalUnit,
    ZOf,
    Numeral,
  };

  static Term zero();
  static Term one();
  static Term constant_i();
  static Term constant_j();
  static Term constant_k();
  static Term numeral(mpz_class n);
  static Term add(Term a, Term b);
  static Term sub(Term a, Term b);
  static Term mul(Term a, Term b);
  static Term div(Term a, Term b);
  static Term neg(Term a);
  static Term inv(Term a);
  static Term conj(Term a);
  static Term square(Term a);
  static Term local_unit(Term a);
  static Term z_of(Term a);

  Kind kind() const { return node_->kind; }
  std::size_t arity() const { return node_->children.size(); }
  const Term& operand(std::size_t i) const { return node_->children.at(i); }
  /// Only meaningful for Kind::Numeral.
  const mpz_class& numeral_value() const { return node_->value; }

  /// Number of nodes.
  std::size_t size() const;
  std::size_t depth() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    mpz_class value;
    std::vector<Term> children;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Kind k, std::vector<Term> children, mpz_class value = 0);

  std::shared_ptr<const Node> node_;
};

/// Syntax error with the byte offset where parsing stopped and the tokens that
/// would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, std::string found);

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Parses the surface syntax:
///
///   expr    := expr ('+' | '-') mulexp | mulexp
///   mulexp  := mulexp '*' unexp | unexp
///   unexp   := '-' unexp | postfix
///   postfix := postfix '^-1' | atom
///   atom    := '0' | '1' | INT | 'i' | 'j' | 'k' | 'inv' '(' expr ')' | 'c' '(' expr ')'
///            | 'unit' '(' expr ')' | 'z' '(' expr ')' | '(' expr ')'
Term parse(std::string_view src);

/// Text that parses back to a term with the same desugaring.
std::string print(const Term& t);

/// Removes Sub, Div, Square, LocalUnit, ZOf; rewrites Numeral(0), Numeral(1) to Zero, One.
Term desugar(const Term& t);

/// True when t uses none of i, j, k, c.
bool is_pure(const Term& t);

/// Homomorphic evaluation. Throws UnsupportedSymbol for constants or operators
/// the structure does not interpret.
Value eval(const Term& t, const Structure& s);

/// Numeral n evaluated in s by doubling.
Value numeral(const Structure& s, const mpz_class& n);

/// Element of the transversal {0, ±k·l⁻¹ : gcd(k, l) = 1}.
struct CanonicalRational {
  int sign = 0;  // 0 for zero, otherwise ±1
  mpz_class k = 0;
  mpz_class l = 1;

  static CanonicalRational from(const Rational& q);
  Rational value() const;
  friend bool operator==(const CanonicalRational&, const CanonicalRational&) = default;
};

/// The transversal form whose ℚ₀ value equals that of t. Throws UnsupportedSymbol
/// when t mentions i, j, k or c.
CanonicalRational normalize(const Term& t);

/// 0, k·inv(l) or −(k·inv(l)); the full shape is kept when l = 1.
Term print_canonical(const CanonicalRational& c);

/// Closed-term equality in ℚ₀.
bool equiv(const Term& a, const Term& b);

}  // namespace skm
