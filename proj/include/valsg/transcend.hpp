#pragma once

// A transcendental limit z = lim z_i over K(x, y) with the dyadic valuation.
//
// D_n is spanned by x^a y^b z^c with a + b + c <= n. tau_i is the largest
// value attained on D_i at z_{i-1}; each step adds f_i/g_i of value
// alpha_i > tau_i. All z_i lie in K[x, 1/x, y] because every g_i is a power
// of x, so values are computed exactly in the standard basis.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "valsg/std_ring.hpp"

namespace valsg {

struct RealizedValue {
  Rat target;
  StdMono numerator;      // f = x^l0 * prod P_j, l0 >= 0
  long x_denominator = 0;  // g = x^k
  StdElem quotient() const;  // f/g as a single standard monomial
  std::string f_string() const;
  std::string g_string() const;
  json to_json() const;
};

// f, g products of key polynomials with nu_bar(f) - nu_bar(g) = target.
// domain_error when the target needs P_j beyond the horizon.
RealizedValue realize_value(const Rat& target, std::size_t horizon = 60);

struct DMonomial {
  unsigned a = 0, b = 0, c = 0;  // x^a y^b z^c
};
std::vector<DMonomial> d_basis(unsigned n);

StdElem d_image(const DMonomial& m, const StdElem& z);

struct DSpectrum {
  SpectrumReport<Rat, Rat> report;
  Rat precision_used;
};

// Spectrum of D_n at z. Images are truncated at `precision`, which doubles
// until the elimination resolves (precision_error past max_precision).
DSpectrum d_spectrum(unsigned n, const StdElem& z, const Rat& precision, const Rat& max_precision);

struct TranscendStep {
  std::size_t i = 0;
  Rat tau;
  Rat lambda;
  Rat alpha;
  Rat g_product_value;  // nu_bar(g_1 ... g_{i-1})
  Rat lower_bound;      // the max that lambda must exceed
  RealizedValue realized;
  std::size_t spectrum_dimension = 0;
  std::vector<Rat> spectrum_values;
  long denominator_exponent = 0;  // lambda has denominator 2^(this + 1)
  std::string certificate_kind;   // "certified" or "denominator-heuristic"
  Rat precision_used;
};

struct TranscendState {
  std::size_t depth = 0;
  Rat precision;
  std::vector<TranscendStep> steps;
  std::vector<StdElem> z;  // z_0 = 0, ..., z_depth
  long denominator_horizon = 0;
  json to_json() const;
};

struct TranscendCheck {
  bool alpha_above_tau = true;
  bool lambda_increasing = true;
  bool lambda_inequality = true;
  bool alpha_realized = true;
  bool tau_increasing = true;
  bool differences = true;  // nu(z_j - z_i) = alpha_{i+1}
  bool lambda_outside_enumerated = true;
  bool ok() const;
  json to_json() const;
};

// Step i of the construction for a state holding steps 1..i-1.
TranscendStep next_step(const TranscendState& state);
// lambda_i; domain_error unless the state holds exactly i - 1 steps
Rat choose_lambda(const TranscendState& state, std::size_t i);

TranscendState transcend_build(std::size_t depth, const Rat& precision = Rat(32));
TranscendCheck transcend_check(const TranscendState& state);

// tau_n at z_{n-1} of the state (tau_1 at z_0 = 0)
Rat tau(unsigned n, const TranscendState& state);

struct LeadingTermReport {
  unsigned n = 0;
  std::size_t trials = 0;
  std::size_t nonzero = 0;
  std::size_t distinct_terms = 0;  // trials whose nonzero h^i d_i(w) have distinct values
  json to_json() const;
};

// Random nonzero f in D_n evaluated at z_n = z_{n-1} + h.
LeadingTermReport leading_term_spotcheck(const TranscendState& state, unsigned n, std::size_t trials, std::uint64_t seed);

}  // namespace valsg
