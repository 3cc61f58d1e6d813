#pragma once

// Rank-two valuations.
//
// The lex-monomial example on K[u1, u2, u3] with value group Z^2, and the
// composite valuation on K[x, y, u, v] given by u -> t, v -> (y/x) t + t^alpha
// followed by the dyadic key-polynomial valuation on the residue field
// K(x, y). alpha is sqrt(2) throughout.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "valsg/hahn.hpp"
#include "valsg/semigroup.hpp"

namespace valsg {

// ---- cones in Q^2 ----

struct ConeQ {
  // extreme rays of a pointed two-dimensional cone; empty for a single ray,
  // a line, a half-plane or the whole plane
  std::vector<GroupElem> rays;
  std::string shape;  // "pointed", "ray", "line", "half-plane", "plane"
};

ConeQ cone_of(const std::vector<GroupElem>& prior);

struct ConeCheck {
  bool inside = true;
  ConeQ cone;
  // a functional (c0, c1) with c.g >= 0 for every prior g and c.gamma < 0
  std::optional<std::pair<Rat, Rat>> separator;
  json to_json() const;
};

// Boundary points count as inside.
ConeCheck cone_check(const GroupElem& gamma, const std::vector<GroupElem>& prior);

// ---- the Z^2 example ----

using LexSeries = HahnSeries<GroupElem, Rat>;

// lambda rules: "one", "alternating" ((-1)^i), "index" (i), "const:<rational>"
Rat lambda_value(const std::string& rule, long long i);

struct Z2Example {
  std::string a_rule, b_rule, lambda_rule;
  std::size_t depth = 0;
  std::vector<GroupElem> gammas;      // gamma_1 .. gamma_depth
  std::vector<LexSeries> u_series;    // u_3 .. u_depth, truncated
  std::vector<bool> closed_form_ok;   // per gamma
  // the ratio condition started at a_2 = 0: a_3/b_3 < (a_4 - a_3)/b_4;
  // without it gamma_4 lies in the cone of gamma_1..gamma_3
  bool start_condition = false;
  std::vector<std::string> warnings;
  json to_json() const;
};

Z2Example z2_build(const std::string& a_rule, const std::string& b_rule, const std::string& lambda_rule,
                   std::size_t depth);

struct Z2IndexReport {
  std::size_t index = 0;
  GroupElem gamma;
  bool closed_form_ok = false;
  ConeCheck cone;
  std::vector<long> multiples_in_prior;  // k with k*gamma in S_{i-1}, below the bound
  bool prior_complete = true;
  bool verdict = false;
};

struct Z2Report {
  std::vector<Z2IndexReport> entries;
  GroupElem bound;
  bool verdict = false;
  json to_json() const;
};

// For 3 <= i <= depth: closed form, cone separation and the multiples scan.
Z2Report z2_verify(const Z2Example& ex, const GroupElem& bound);

// ---- composite valuation ----

using ResidualValuation = std::function<Rat(const MPoly&)>;

struct CompositeValue {
  GroupElem value;    // (first, second), first in Z + alpha Z
  long k = 0, j = 0;  // first = (k - j) + j alpha
  MPoly numerator;    // x^(k-j) phi_jk, a polynomial in x, y
  json to_json() const;
};

const std::vector<std::string>& xyuv_vars();

// a_{i,j} with f = sum a_{ij} u^i v^j
std::map<std::pair<unsigned, unsigned>, MPoly> uv_coefficients(const MPoly& f);

// x^(k-j) phi_jk in K[x, y]
MPoly phi_numerator(const std::map<std::pair<unsigned, unsigned>, MPoly>& a, unsigned j, unsigned k);

// domain_error for f = 0. The residual valuation defaults to nu_bar.
CompositeValue composite_value(const MPoly& f, const ResidualValuation& residual = {});

// The same value read off the series f(t, v(t)) with coefficients in K(x, y).
GroupElem composite_value_series(const MPoly& f);

GroupElem alpha_multiple(long a, long b, const Rat& second);  // (a + b alpha, second)

// Phi_jk(W) = sum_{i=j}^k a_{k-i,i} C(i,j) W^(i-j), over the variables x, y, W;
// coeffs[i] = a_{k-i,i}
MPoly phi_poly(unsigned j, unsigned k, const std::vector<MPoly>& coeffs);

// d^j/dW^j Phi_0k = j! Phi_jk for 0 <= j <= k
bool phi_derivative_check(unsigned k, const std::vector<MPoly>& coeffs);

struct SliceLevel {
  long n = 0;
  bool alpha = false;  // n*alpha rather than n
  static SliceLevel parse(const std::string& text);  // "2", "alpha", "3*alpha"
  std::string to_string() const;
};

struct SliceSample {
  MPoly f;
  Rat second;
  std::string kind;  // "random" or "generator"
};

struct SliceReport {
  SliceLevel level;
  std::vector<SliceSample> samples;
  std::vector<Rat> observed;  // distinct second components below the bound
  std::vector<Rat> expected;  // M_n (or n + M_0) below the bound
  bool contained = false;
  std::size_t rejected = 0;   // random samples whose first component was not the level
  json to_json() const;
};

SliceReport F_slice(const SliceLevel& level, unsigned degree_bound, const Rat& bound, std::uint64_t seed,
                    std::size_t samples = 40);

}  // namespace valsg
