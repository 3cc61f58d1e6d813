#pragma once

// K[x, 1/x, y] in the standard basis of the dyadic key polynomials.
//
// A standard monomial is x^l0 * prod_{j in mask} P_j with l0 any integer and
// bit j (j >= 1) of the mask set for each P_j used once. Its value
// l0 + sum beta_j determines it, so terms are keyed by value and the least
// key is the valuation. Products are expanded with
//   P_j^2 = P_{j+1} + x^(2^(j+1)) P_{j-1},
// where both right-hand terms have value at least 2 beta_j.
//
// An optional precision p marks every term of value >= p as unknown.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "valsg/hahn.hpp"
#include "valsg/poly.hpp"

namespace valsg {

struct StdMono {
  long l0 = 0;
  std::uint64_t mask = 0;  // bit 0 unused
  friend bool operator==(const StdMono&, const StdMono&) = default;
};

Rat std_mono_value(const StdMono& m);
std::string std_mono_string(const StdMono& m);

class StdElem {
public:
  struct Term {
    StdMono mono;
    Rat coeff;
  };

  StdElem() = default;

  static StdElem monomial(const StdMono& m, const Rat& c = Rat(1));
  static StdElem constant(const Rat& c) { return monomial(StdMono{}, c); }
  static StdElem x_power(long k) { return monomial(StdMono{k, 0}); }
  static StdElem key(std::size_t j);  // P_j
  static StdElem from_poly(const MPoly& f);  // f over {x, y}

  const std::map<Rat, Term>& terms() const { return terms_; }
  const std::optional<Rat>& precision() const { return precision_; }
  bool exact() const { return !precision_; }
  bool known_zero() const { return terms_.empty(); }

  // least known value; domain_error for an exact zero, precision_error when
  // nothing below the precision is known
  Rat value() const;

  StdElem truncated(const Rat& p) const;

  friend StdElem operator+(const StdElem& a, const StdElem& b);
  friend StdElem operator-(const StdElem& a, const StdElem& b);
  friend StdElem operator*(const Rat& s, const StdElem& a);
  friend StdElem operator*(const StdElem& a, const StdElem& b);
  StdElem pow(unsigned k) const;

  friend bool operator==(const StdElem& a, const StdElem& b);

  // Requires l0 >= 0 throughout and a known-exact element.
  MPoly to_poly() const;
  HahnSeries<Rat, Rat> to_series() const;
  std::string to_string() const;

private:
  void add(const StdMono& m, const Rat& c);
  std::map<Rat, Term> terms_;
  std::optional<Rat> precision_;
};

}  // namespace valsg
