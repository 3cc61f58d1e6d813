#pragma once

// Brute-force values of (x,y)^n: span every monomial x^a y^b with
// n <= a + b <= degree, write each in standard monomials, and reduce to
// echelon form keyed by the least-valued standard monomial. The pivot
// values are exactly the values attained by the span.

#include <map>
#include <set>

#include "valsg/skp.hpp"

inline std::set<valsg::Rat> ideal_power_values(unsigned n, unsigned degree) {
  using namespace valsg;
  using Row = std::map<Rat, Rat>;  // standard value -> coefficient (values identify monomials)
  std::map<Rat, Row> pivots;
  const std::vector<std::string> xy{"x", "y"};
  for (unsigned total = n; total <= degree; ++total)
    for (unsigned b = 0; b <= total; ++b) {
      MPoly m = MPoly::monomial(xy, {total - b, b});
      Row row;
      for (const auto& t : standard_expansion(m).terms) row[standard_value(t.exps)] += t.coeff;
      for (;;) {
        for (auto it = row.begin(); it != row.end();) it = sgn(it->second) == 0 ? row.erase(it) : std::next(it);
        if (row.empty()) break;
        auto lead = row.begin();
        auto p = pivots.find(lead->first);
        if (p == pivots.end()) {
          Rat key = lead->first;
          pivots.emplace(key, row);
          break;
        }
        Rat f = lead->second / p->second.begin()->second;
        for (const auto& [v, c] : p->second) row[v] -= f * c;
      }
    }
  std::set<Rat> out;
  for (const auto& [v, r] : pivots) out.insert(v - n);
  return out;
}
