#pragma once

// The dyadic plane valuation on K[x,y] given by the key polynomials
//   P_0 = x, P_1 = y, P_{i+1} = P_i^2 - x^(2^(i+1)) P_{i-1}
// with values beta_0 = 1, beta_{i+1} = 2 beta_i + 2^-(i+1).
//
// Every polynomial has a unique standard expansion in monomials
// x^l0 * P_1^l1 * ... * P_k^lk with l_j in {0, 1} for j >= 1; distinct
// standard monomials have distinct values (the 2-adic digits of the value
// recover l_1, l_2, ...), so the value of f is the least value among the
// monomials of its expansion.

#include <cstdint>
#include <string>
#include <vector>

#include "valsg/gen_stream.hpp"
#include "valsg/poly.hpp"
#include "valsg/semigroup.hpp"

namespace valsg {

Rat dyadic_beta(std::size_t i);         // by the recursion
Rat dyadic_beta_closed(std::size_t i);  // (2^(i+2) - 2^-i) / 3

struct KeyPoly {
  MPoly poly;
  Rat beta;
  unsigned m = 2;  // order of beta_i modulo the group of the earlier values (1 for i = 0)
};

class KeyPolySeq {
public:
  // P_0 .. P_count-1
  static KeyPolySeq build(std::size_t count, std::uint32_t degree_cap = MPoly::default_degree_cap);

  std::size_t size() const { return entries_.size(); }
  const KeyPoly& operator[](std::size_t i) const { return entries_.at(i); }
  const MPoly& poly(std::size_t i) const { return entries_.at(i).poly; }
  const Rat& beta(std::size_t i) const { return entries_.at(i).beta; }
  json to_json() const;

private:
  std::vector<KeyPoly> entries_;
};

// Shared sequence over the variables {x, y}, grown on demand and never
// shrunk; safe to call concurrently.
const KeyPolySeq& shared_key_polys(std::size_t count);

// Standard exponent vector (l0, l1, ..., lk), trailing zeros trimmed.
using StdExponents = std::vector<std::uint32_t>;

Rat standard_value(const StdExponents& l);
// x,y-adic order of the standard monomial: l0 + sum l_j 2^(j-1)
std::uint64_t standard_order(const StdExponents& l);

struct StdTerm {
  Rat coeff;
  StdExponents exps;
};

struct StdExpansion {
  std::vector<StdTerm> terms;  // increasing value
  MPoly reconstruct(const KeyPolySeq& kps) const;
  json to_json() const;
};

// f over {x, y}; domain_error when deg_y f >= 2^(size - 1).
StdExpansion standard_expansion(const MPoly& f, const KeyPolySeq& kps);
StdExpansion standard_expansion(const MPoly& f);

// domain_error for the zero polynomial.
Rat nu_bar(const MPoly& f);
Rat nu_bar(const RatFunc& f);

// Polynomial over {x, y} from text.
MPoly parse_xy(const std::string& text);

// True when l -> l0 + sum l_j beta_j is injective on standard vectors with
// indices up to max_j and 0 <= l0 <= max_l0.
bool check_standard_injectivity(std::size_t max_j, std::uint32_t max_l0);

struct KeyDivisibilityReport {
  std::size_t index = 0;
  MPoly quotient;
  std::uint32_t z_degree = 0;      // over K[x, y]
  std::uint32_t raw_z_degree = 0;  // in K[x, z]
  bool verdict = false;
};

// P_i(x, x z) = x^i h_i with h_i a polynomial in z of degree <= i over K[x, y].
KeyDivisibilityReport key_divisibility_check(std::size_t i);

// Module generators of M_n = nu_bar((x,y)^n \ 0) - n over M_0: the values
// value(l) - n for the minimal vectors l of order >= n.
struct MnGenerator {
  Rat value;
  StdExponents l;  // not necessarily standard: P_j^k allowed
};
std::vector<MnGenerator> mn_small_generators(unsigned n);  // those built from P_j of order < n
GenStream mn_coset_stream(unsigned n);
SemiModule mn_module(unsigned n);

// M_n below the bound, as a module table over M_0.
SemiTable module_Mn(unsigned n, const Rat& bound);

struct GeneratorWitness {
  std::size_t j = 0;
  Rat value;             // beta_j - n
  Int denominator;       // 2^j
  Int psi_denominator;   // 2^(j-1): every relevant element of Psi_{j-1} lies in (1/2^(j-1)) Z
  bool in_module = false;  // order of P_j is at least n
  bool certified = false;
};

std::vector<GeneratorWitness> new_generator_witness(unsigned n, std::size_t max_j);

}  // namespace valsg
