#pragma once

// Sparse multivariate polynomials over Q.
//
// Terms are kept in graded-lex order (total degree first, then lex on the
// exponent vector read left to right in variable order); iteration runs from
// the largest term down, which is also the order used by the printer and the
// JSON encoding.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "valsg/group.hpp"
#include "valsg/json_io.hpp"

namespace valsg {

using Exponents = std::vector<std::uint32_t>;

struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MPoly {
public:
  using TermMap = std::map<Exponents, Rat, GrlexGreater>;

  static constexpr std::uint32_t default_degree_cap = 4096;

  MPoly() = default;
  explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MPoly constant(const std::vector<std::string>& vars, const Rat& c);
  static MPoly variable(const std::vector<std::string>& vars, const std::string& name);
  static MPoly monomial(const std::vector<std::string>& vars, const Exponents& e, const Rat& c = Rat(1));

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t var_index(const std::string& name) const;
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * x^e, dropping the term if the coefficient cancels.
  void add_term(const Exponents& e, const Rat& c);
  Rat coeff(const Exponents& e) const;

  std::uint32_t total_degree() const;  // 0 for the zero polynomial
  std::uint32_t degree(std::size_t var) const;
  std::uint32_t degree(const std::string& var) const { return degree(var_index(var)); }
  std::uint32_t min_degree(std::size_t var) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) { return mul(a, b); }
  friend MPoly operator*(const Rat& c, const MPoly& a);

  static MPoly mul(const MPoly& a, const MPoly& b, std::uint32_t degree_cap = default_degree_cap);
  MPoly pow(unsigned k, std::uint32_t degree_cap = default_degree_cap) const;

  // d/d(var)
  MPoly derivative(std::size_t var) const;

  // Replace each variable by a polynomial over `target_vars`; variables
  // without an entry are mapped to themselves (they must exist in the target).
  MPoly subst(const std::map<std::string, MPoly>& assignment, const std::vector<std::string>& target_vars,
              std::uint32_t degree_cap = default_degree_cap) const;

  // Same polynomial over a different variable list (must contain every
  // variable that actually occurs).
  MPoly with_vars(const std::vector<std::string>& target_vars) const;

  Rat eval(const std::vector<Rat>& point) const;

  // Coefficients of powers of `var`: result[k] is the coefficient of var^k,
  // a polynomial over the remaining variables (same variable list, var
  // exponent zero).
  std::vector<MPoly> coefficients_in(std::size_t var) const;

  // Every coefficient multiplied by c so that the leading coefficient is 1.
  MPoly monic() const;
  Rat leading_coeff() const;
  const Exponents& leading_exponents() const;

  friend bool operator==(const MPoly& a, const MPoly& b);

  std::string to_string() const;
  json to_json() const;

private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

std::string to_string(const MPoly& p);

// f(x, z) = x^i * q(x, z) check used for key-polynomial x-power divisibility.
// z_degree is the degree in z over the coefficient ring K[x, y] (y = x z):
// the least d with quotient = sum_{k <= d} a_k(x, y) z^k, which is the
// largest (z exponent - x exponent) over the terms. raw_z_degree is the
// plain degree in K[x, z].
struct XPowerQuotient {
  MPoly quotient;
  std::uint32_t z_degree;
  std::uint32_t raw_z_degree;
};

// Divides every term of f by x^i; domain_error naming the first term whose
// x exponent is below i.
XPowerQuotient x_power_divide(const MPoly& f, std::uint32_t i, const std::string& x = "x",
                              const std::string& z = "z");

// Quotient of p by a polynomial monic in `var` (division in var over the
// other variables). Returns {quotient, remainder}.
std::pair<MPoly, MPoly> divide_monic(const MPoly& p, const MPoly& divisor, std::size_t var);

// Rational function num/den, content-normalized (den leading coefficient 1).
class RatFunc {
public:
  RatFunc() = default;
  explicit RatFunc(MPoly num);
  RatFunc(MPoly num, MPoly den);

  static RatFunc constant(const std::vector<std::string>& vars, const Rat& c);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  friend bool operator==(const RatFunc& a, const RatFunc& b);

  std::string to_string() const;

private:
  void normalize();
  MPoly num_;
  MPoly den_;
};

std::string to_string(const RatFunc& r);

}  // namespace valsg
