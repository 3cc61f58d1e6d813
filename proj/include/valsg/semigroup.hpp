#pragma once

// Semigroups and semigroup modules inside an ordered group, enumerated
// exactly below a bound.
//
// Bounds are rectangular: an element x lies below the bound B when every
// coordinate satisfies x[i] < B[i]. In rank one that is the usual x < B.
// Generators must be lex-positive; in rank two a sum stays inside the
// rectangle along some ordering of its summands (negative second
// coordinates first), so frontier expansion inside the rectangle is complete.

#include <optional>
#include <string>
#include <vector>

#include "valsg/gen_stream.hpp"
#include "valsg/group.hpp"
#include "valsg/json_io.hpp"

namespace valsg {

constexpr std::size_t default_generator_horizon = 4096;

struct SemiTable {
  std::vector<GroupElem> elements;           // sorted
  std::vector<std::vector<long>> witnesses;  // multiplicities over `generators`
  std::vector<GroupElem> generators;         // stream generators that can occur below the bound
  // module tables: which coset generator each element uses (empty otherwise)
  std::vector<GroupElem> coset_generators;
  std::vector<std::size_t> coset_of;
  GroupElem bound;
  std::size_t generator_horizon = 0;
  bool complete = true;
  std::string status = "complete";

  bool contains(const GroupElem& g) const;
  std::size_t size() const { return elements.size(); }
  // sum of the witness for element k
  GroupElem evaluate_witness(std::size_t k) const;
  json to_json() const;
};

bool below_bound(const GroupElem& x, const GroupElem& bound);

SemiTable enumerate_below(const GenStream& gens, const GroupElem& bound,
                          std::size_t horizon = default_generator_horizon);
SemiTable enumerate_below(const std::vector<Rat>& gens, const Rat& bound);

// Exhaustive closure check: s + t below the bound is again in the table.
bool closed_under_addition(const SemiTable& table);

// Elements that are not a sum of two nonzero table elements.
std::vector<GroupElem> minimal_generators(const SemiTable& table);

struct SValue {
  long s = 0;
  std::vector<long> witness;  // s*gamma = sum witness[k] * prefix[k]
  Rat group_generator;        // prefix scaled by this is a numerical semigroup
  Int frobenius_bound;        // every scaled integer above it is in the semigroup
};

// Least s >= 1 with s*gamma in the semigroup generated by `prefix`.
SValue s_value(const std::vector<Rat>& prefix, const Rat& gamma);
SValue s_value(const SemiTable& prefix, const GroupElem& gamma);

struct PlaneIndexReport {
  std::size_t index = 0;  // 1-based generator index
  Rat gamma;
  Int n;  // group index
  long s = 0;
  bool s_equals_n = false;
  std::optional<bool> growth;  // gamma_i > s_{i-1} gamma_{i-1}; empty when not applicable
};

struct PlaneReport {
  std::vector<PlaneIndexReport> entries;
  bool verdict = false;
  json to_json() const;
};

// Rejects (domain_error) lists that are not increasing minimal systems.
PlaneReport plane_branch_check(const std::vector<Rat>& gens);

struct SemiModule {
  GenStream base;
  GenStream cosets;  // module generators, 0 allowed
};

SemiTable module_table(const SemiModule& module, const GroupElem& bound,
                       std::size_t horizon = default_generator_horizon);

struct ProbeReport {
  std::vector<GroupElem> generators;  // module generators below the bound
  std::vector<GroupElem> top_half;    // those in [bound/2, bound)
  bool saturated = false;
  std::size_t module_size = 0;
  std::string semantics;
  json to_json() const;
};

ProbeReport module_fin_gen_probe(const SemiModule& module, const GroupElem& bound);

SemiTable spq_build(long p, long q, std::size_t depth, const Rat& bound);

struct ScanReport {
  std::optional<Rat> min_gap;
  std::vector<Rat> cluster_points;  // run midpoints
  std::vector<std::pair<Rat, Rat>> cluster_spans;
  Rat threshold;
  std::size_t run_length = 5;
  json to_json() const;
};

ScanReport accumulation_scan(const SemiTable& table, const Rat& threshold, std::size_t run_length = 5);

struct OmegaEntry {
  std::vector<long> point;        // (a_1..a_m)
  Rat value;
  std::vector<long> term_indices;  // value = sum of lambda at these indices
};

struct OmegaTable {
  long m = 0;
  long grid = 0;
  std::vector<OmegaEntry> entries;  // lex order of points
  bool order_preserving = false;
  bool sums_certified = false;
  json to_json() const;
};

OmegaTable omega_embedding(const GenStream& lambda, long m, long grid, long cap = 100000);

}  // namespace valsg
