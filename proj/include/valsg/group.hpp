#pragma once

// Exact scalars and ordered abelian groups.
//
// Rat is GMP's mpq_class kept in canonical form. QuadRat is a + b*sqrt(2),
// used wherever a value group needs an element rationally independent of 1.
// GroupElem is a lex-ordered tuple of scalars whose per-coordinate kinds
// (the signature) are fixed at construction.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "valsg/errors.hpp"

namespace valsg {

using Int = mpz_class;
using Rat = mpq_class;

Rat make_rat(long num, long den = 1);
Rat parse_rat(const std::string& text);
std::string to_string(const Rat& r);

// Exact integer power of two as a rational, exponent may be negative.
Rat pow2(long e);

int sign(const Rat& r);

struct QuadRat {
  Rat a;
  Rat b;

  QuadRat() = default;
  QuadRat(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit QuadRat(const Rat& a_) : a(a_), b(0) {}

  // sign of a + b*sqrt(2), decided without leaving the rationals
  int sign() const;
  bool is_zero() const { return ::sgn(a) == 0 && ::sgn(b) == 0; }

  friend QuadRat operator+(const QuadRat& x, const QuadRat& y) { return {x.a + y.a, x.b + y.b}; }
  friend QuadRat operator-(const QuadRat& x, const QuadRat& y) { return {x.a - y.a, x.b - y.b}; }
  friend QuadRat operator-(const QuadRat& x) { return {-x.a, -x.b}; }
  friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend QuadRat operator*(const Rat& s, const QuadRat& x) { return {s * x.a, s * x.b}; }
  friend bool operator==(const QuadRat& x, const QuadRat& y) { return x.a == y.a && x.b == y.b; }
  friend std::strong_ordering operator<=>(const QuadRat& x, const QuadRat& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
};

std::string to_string(const QuadRat& q);

enum class ScalarKind : std::uint8_t { rational, quadratic };

using Scalar = std::variant<Rat, QuadRat>;

ScalarKind kind_of(const Scalar& s);
std::string to_string(const Scalar& s);
// -1, 0, 1; both scalars must have the same kind
int scalar_cmp(const Scalar& x, const Scalar& y);

class GroupElem {
public:
  GroupElem() = default;
  explicit GroupElem(std::vector<Scalar> coords) : coords_(std::move(coords)) {}
  GroupElem(std::initializer_list<Rat> coords);

  static GroupElem rat(const Rat& r) { return GroupElem({r}); }
  static GroupElem zero(const std::vector<ScalarKind>& signature);

  std::size_t rank() const { return coords_.size(); }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  std::vector<ScalarKind> signature() const;

  // Coordinate i as a rational; structural_error if it is quadratic.
  const Rat& as_rat(std::size_t i = 0) const;

  bool is_zero() const;
  // strictly greater than zero in the lex order
  bool is_positive() const;

  GroupElem operator-() const;
  friend GroupElem operator+(const GroupElem& x, const GroupElem& y);
  friend GroupElem operator-(const GroupElem& x, const GroupElem& y) { return x + (-y); }
  friend GroupElem operator*(long k, const GroupElem& x);
  friend GroupElem operator*(const Rat& k, const GroupElem& x);

  friend bool operator==(const GroupElem& x, const GroupElem& y);
  friend std::strong_ordering operator<=>(const GroupElem& x, const GroupElem& y);

  friend std::ostream& operator<<(std::ostream& os, const GroupElem& g);

private:
  std::vector<Scalar> coords_;
};

std::string to_string(const GroupElem& g);

// Total lex order; throws structural_error on signature mismatch.
std::strong_ordering lex_cmp(const GroupElem& x, const GroupElem& y);

// The cyclic subgroup generator*Z of Q.
struct QSubgroup {
  Rat generator;  // >= 0, zero only for the trivial group
  bool trivial() const { return ::sgn(generator) == 0; }
  bool contains(const Rat& r) const;
  friend bool operator==(const QSubgroup&, const QSubgroup&) = default;
};

// gcd over Q of the inputs; the all-zero list gives the trivial group.
QSubgroup q_subgroup(const std::vector<Rat>& gens);

// [big : small]; domain_error unless small is contained in big.
Int subgroup_index(const QSubgroup& small, const QSubgroup& big);

}  // namespace valsg
