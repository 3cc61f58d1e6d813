#include "valsg/semigroup.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace valsg {

namespace {

constexpr std::size_t max_table_size = 4'000'000;
constexpr std::size_t max_certificate_range = 64'000'000;

struct Collected {
  std::vector<GroupElem> gens;
  std::size_t consulted = 0;
  bool complete = true;
  std::string status = "complete";
};

// Generators of `stream` whose first coordinate is below the bound's.
Collected collect_generators(const GenStream& stream, const GroupElem& bound, std::size_t horizon) {
  Collected c;
  for (std::size_t i = 0;; ++i) {
    if (!stream.is_finite() && i >= horizon) {
      c.complete = false;
      c.status = "incomplete: generator horizon " + std::to_string(horizon) +
                 " exhausted before generators exceeded the bound";
      break;
    }
    auto g = stream.at(i);
    if (!g) break;
    if (g->rank() != bound.rank()) throw structural_error("generator rank differs from bound rank");
    c.consulted = i + 1;
    if (scalar_cmp((*g)[0], bound[0]) >= 0) {
      if (stream.monotone() && !stream.is_finite()) break;
      continue;
    }
    c.gens.push_back(std::move(*g));
  }
  return c;
}

json elems_array(const std::vector<GroupElem>& v) {
  json a = json::array();
  for (const auto& g : v) a.push_back(g.rank() == 1 ? scalar_json(g[0]) : elem_json(g));
  return a;
}

json elem_out(const GroupElem& g) { return g.rank() == 1 ? scalar_json(g[0]) : elem_json(g); }

}  // namespace

bool below_bound(const GroupElem& x, const GroupElem& bound) {
  if (x.rank() != bound.rank()) throw structural_error("element rank differs from bound rank");
  for (std::size_t i = 0; i < x.rank(); ++i)
    if (scalar_cmp(x[i], bound[i]) >= 0) return false;
  return true;
}

bool SemiTable::contains(const GroupElem& g) const { return std::binary_search(elements.begin(), elements.end(), g); }

GroupElem SemiTable::evaluate_witness(std::size_t k) const {
  GroupElem sum = GroupElem::zero(bound.signature());
  if (!coset_of.empty()) sum = coset_generators[coset_of[k]];
  for (std::size_t j = 0; j < generators.size(); ++j)
    if (witnesses[k][j]) sum = sum + witnesses[k][j] * generators[j];
  return sum;
}

json SemiTable::to_json() const {
  json j{{"bound", elem_out(bound)},
         {"complete", complete},
         {"status", status},
         {"generator_horizon", generator_horizon},
         {"generators", elems_array(generators)},
         {"size", elements.size()},
         {"elements", elems_array(elements)}};
  json w = json::array();
  for (std::size_t k = 0; k < elements.size(); ++k) {
    json row{{"mult", witnesses[k]}};
    if (!coset_of.empty()) row["coset"] = coset_of[k];
    w.push_back(row);
  }
  j["witnesses"] = w;
  if (!coset_generators.empty()) j["coset_generators"] = elems_array(coset_generators);
  return j;
}

SemiTable enumerate_below(const GenStream& gens, const GroupElem& bound, std::size_t horizon) {
  if (!bound.is_positive()) throw domain_error("enumeration bound must be positive");
  Collected col = collect_generators(gens, bound, horizon);
  SemiTable t;
  t.bound = bound;
  t.generators = col.gens;
  t.generator_horizon = col.consulted;
  t.complete = col.complete;
  t.status = col.status;

  const std::size_t ng = t.generators.size();
  GroupElem zero = GroupElem::zero(bound.signature());
  std::map<GroupElem, std::vector<long>> seen;
  std::set<GroupElem> frontier;
  seen.emplace(zero, std::vector<long>(ng, 0));
  frontier.insert(zero);
  while (!frontier.empty()) {
    GroupElem e = *frontier.begin();
    frontier.erase(frontier.begin());
    const std::vector<long>& we = seen.at(e);
    for (std::size_t k = 0; k < ng; ++k) {
      GroupElem s = e + t.generators[k];
      if (!below_bound(s, bound) || seen.count(s)) continue;
      std::vector<long> w = we;
      ++w[k];
      seen.emplace(s, std::move(w));
      frontier.insert(std::move(s));
    }
    if (seen.size() > max_table_size) {
      t.complete = false;
      t.status = "incomplete: table size cap reached";
      break;
    }
  }
  for (auto& [e, w] : seen) {
    t.elements.push_back(e);
    t.witnesses.push_back(w);
  }
  return t;
}

SemiTable enumerate_below(const std::vector<Rat>& gens, const Rat& bound) {
  return enumerate_below(GenStream::finite(gens), GroupElem::rat(bound));
}

bool closed_under_addition(const SemiTable& table) {
  const auto& el = table.elements;
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i; j < el.size(); ++j) {
      GroupElem s = el[i] + el[j];
      if (below_bound(s, table.bound) && !table.contains(s)) return false;
    }
  return true;
}

std::vector<GroupElem> minimal_generators(const SemiTable& table) {
  if (!table.complete) throw incomplete_error("refusing minimal generators of an incomplete table: " + table.status);
  if (!table.coset_of.empty()) throw structural_error("minimal_generators expects a semigroup table, not a module");
  std::vector<GroupElem> out;
  const auto& el = table.elements;
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (el[i].is_zero()) continue;
    bool decomposable = false;
    for (std::size_t j = 0; j < i && !decomposable; ++j) {
      if (el[j].is_zero()) continue;
      GroupElem rest = el[i] - el[j];
      if (!rest.is_positive()) continue;
      decomposable = table.contains(rest);
    }
    if (!decomposable) out.push_back(el[i]);
  }
  return out;
}

SValue s_value(const std::vector<Rat>& prefix, const Rat& gamma) {
  if (prefix.empty()) throw domain_error("s_value needs a nonempty prefix");
  if (sign(gamma) <= 0) throw domain_error("s_value needs a positive element");
  for (const auto& g : prefix)
    if (sign(g) <= 0) throw domain_error("semigroup generators must be positive");
  SValue out;
  out.group_generator = q_subgroup(prefix).generator;
  std::vector<Int> a;
  for (const auto& g : prefix) a.push_back(Rat(g / out.group_generator).get_num());
  Int amin = *std::min_element(a.begin(), a.end());
  Int amax = *std::max_element(a.begin(), a.end());
  // Schur: the Frobenius number is at most (a_min - 1)(a_max - 1) - 1
  out.frobenius_bound = amin == 1 ? Int(-1) : Int((amin - 1) * (amax - 1) - 1);
  Rat q = gamma / out.group_generator;
  Int step = q.get_num(), mult = q.get_den();
  Int t_max = out.frobenius_bound < 0 ? Int(1) : Int(out.frobenius_bound / step + 1);
  Int range = t_max * step;
  if (range > max_certificate_range)
    throw domain_error("s_value certificate range " + range.get_str() + " exceeds the configured cap");
  const std::size_t top = range.get_ui();
  std::vector<int> via(top + 1, -1);  // generator used to reach v, -2 for v = 0
  via[0] = -2;
  std::vector<std::size_t> ai;
  for (const auto& x : a) ai.push_back(x.get_ui());
  for (std::size_t v = 1; v <= top; ++v)
    for (std::size_t k = 0; k < ai.size(); ++k)
      if (ai[k] <= v && via[v - ai[k]] != -1) {
        via[v] = static_cast<int>(k);
        break;
      }
  const std::size_t st = step.get_ui();
  for (std::size_t t = 1; t <= t_max.get_ui(); ++t) {
    std::size_t v = t * st;
    if (via[v] == -1) continue;
    Int s = mult * static_cast<unsigned long>(t);
    if (!s.fits_slong_p()) throw domain_error("s_value overflow");
    out.s = s.get_si();
    out.witness.assign(prefix.size(), 0);
    while (v > 0) {
      int k = via[v];
      ++out.witness[k];
      v -= ai[k];
    }
    return out;
  }
  throw std::logic_error("s_value: no multiple found below the Frobenius certificate");
}

SValue s_value(const SemiTable& prefix, const GroupElem& gamma) {
  std::vector<Rat> gens;
  for (const auto& g : prefix.generators) gens.push_back(g.as_rat());
  return s_value(gens, gamma.as_rat());
}

json PlaneReport::to_json() const {
  json rows = json::array();
  for (const auto& e : entries) {
    json r{{"index", e.index}, {"gamma", rat_json(e.gamma)}, {"n", e.n.get_str()}, {"s", e.s},
           {"s_equals_n", e.s_equals_n}};
    if (e.growth)
      r["growth"] = *e.growth;
    else
      r["growth"] = "not applicable";
    rows.push_back(r);
  }
  return json{{"verdict", verdict}, {"indices", rows}};
}

PlaneReport plane_branch_check(const std::vector<Rat>& gens) {
  if (gens.size() < 2) throw domain_error("plane_branch_check needs at least two generators");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (sign(gens[i]) <= 0) throw domain_error("generator " + to_string(gens[i]) + " is not positive");
    if (i && !(gens[i - 1] < gens[i])) throw domain_error("generators must be listed in increasing order");
  }
  PlaneReport rep;
  rep.verdict = true;
  std::vector<Rat> prefix{gens[0]};
  for (std::size_t i = 1; i < gens.size(); ++i) {
    PlaneIndexReport e;
    e.index = i + 1;
    e.gamma = gens[i];
    SValue sv = s_value(prefix, gens[i]);
    if (sv.s == 1)
      throw domain_error("generator " + std::to_string(i + 1) + " (" + to_string(gens[i]) +
                         ") is redundant: it lies in the semigroup of the earlier generators");
    std::vector<Rat> with = prefix;
    with.push_back(gens[i]);
    e.n = subgroup_index(q_subgroup(prefix), q_subgroup(with));
    e.s = sv.s;
    e.s_equals_n = e.n == e.s;
    if (i >= 2) e.growth = gens[i] > rep.entries.back().s * gens[i - 1];
    rep.verdict = rep.verdict && e.s_equals_n && e.growth.value_or(true);
    rep.entries.push_back(e);
    prefix = std::move(with);
  }
  return rep;
}

SemiTable module_table(const SemiModule& module, const GroupElem& bound, std::size_t horizon) {
  SemiTable base = enumerate_below(module.base, bound, horizon);
  Collected cos;
  for (std::size_t i = 0;; ++i) {
    if (!module.cosets.is_finite() && i >= horizon) {
      cos.complete = false;
      cos.status = "incomplete: module generator horizon exhausted";
      break;
    }
    auto g = module.cosets.at(i);
    if (!g) break;
    cos.consulted = i + 1;
    if (scalar_cmp((*g)[0], bound[0]) >= 0) {
      if (module.cosets.monotone() && !module.cosets.is_finite()) break;
      continue;
    }
    cos.gens.push_back(std::move(*g));
  }
  SemiTable t;
  t.bound = bound;
  t.generators = base.generators;
  t.coset_generators = cos.gens;
  t.generator_horizon = std::max(base.generator_horizon, cos.consulted);
  t.complete = base.complete && cos.complete;
  t.status = !base.complete ? base.status : cos.status;
  std::map<GroupElem, std::pair<std::size_t, std::size_t>> seen;  // element -> (coset, base index)
  for (std::size_t c = 0; c < cos.gens.size(); ++c)
    for (std::size_t b = 0; b < base.elements.size(); ++b) {
      GroupElem x = cos.gens[c] + base.elements[b];
      if (below_bound(x, bound)) seen.emplace(std::move(x), std::make_pair(c, b));
    }
  for (auto& [e, cb] : seen) {
    t.elements.push_back(e);
    t.coset_of.push_back(cb.first);
    t.witnesses.push_back(base.witnesses[cb.second]);
  }
  return t;
}

json ProbeReport::to_json() const {
  return json{{"module_min_generators_below_bound", elems_array(generators)},
              {"new_in_top_half", elems_array(top_half)},
              {"saturated", saturated},
              {"module_size", module_size},
              {"semantics", semantics}};
}

ProbeReport module_fin_gen_probe(const SemiModule& module, const GroupElem& bound) {
  SemiTable mt = module_table(module, bound);
  SemiTable base = enumerate_below(module.base, bound);
  if (!mt.complete || !base.complete)
    throw incomplete_error("refusing to probe an incomplete enumeration: " + (mt.complete ? base.status : mt.status));
  ProbeReport rep;
  rep.module_size = mt.size();
  GroupElem half = Rat(1, 2) * bound;
  for (const auto& m : mt.elements) {
    bool reducible = false;
    for (const auto& b : base.elements) {
      if (b.is_zero()) continue;
      if (m < b) break;
      if (mt.contains(m - b)) {
        reducible = true;
        break;
      }
    }
    if (reducible) continue;
    rep.generators.push_back(m);
    if (!(m < half)) rep.top_half.push_back(m);
  }
  rep.saturated = rep.top_half.empty();
  rep.semantics =
      "semidecision: lists every module generator below the bound; saturated means no new generator in "
      "[bound/2, bound) and is evidence only, never a proof of finite generation";
  return rep;
}

SemiTable spq_build(long p, long q, std::size_t depth, const Rat& bound) {
  if (p == q) throw domain_error("spq needs distinct primes");
  for (long v : {p, q}) {
    if (v < 2) throw domain_error("spq parameters must be primes");
    for (long d = 2; d * d <= v; ++d)
      if (v % d == 0) throw domain_error(std::to_string(v) + " is not prime");
  }
  return enumerate_below(spq_stream(p, q, depth), GroupElem::rat(bound));
}

json ScanReport::to_json() const {
  json spans = json::array();
  for (const auto& [a, b] : cluster_spans) spans.push_back(json::array({rat_json(a), rat_json(b)}));
  json pts = json::array();
  for (const auto& c : cluster_points) pts.push_back(rat_json(c));
  return json{{"min_gap", min_gap ? json(rat_json(*min_gap)) : json(nullptr)},
              {"cluster_points", pts},
              {"cluster_spans", spans},
              {"threshold", rat_json(threshold)},
              {"run_length", run_length}};
}

ScanReport accumulation_scan(const SemiTable& table, const Rat& threshold, std::size_t run_length) {
  ScanReport rep;
  rep.threshold = threshold;
  rep.run_length = run_length;
  const auto& el = table.elements;
  if (el.size() < 2) return rep;
  const std::size_t last = el.front().rank() - 1;
  auto same_fiber = [&](const GroupElem& a, const GroupElem& b) {
    for (std::size_t i = 0; i < last; ++i)
      if (scalar_cmp(a[i], b[i]) != 0) return false;
    return true;
  };
  std::size_t run = 0;
  Rat run_start;
  auto close_run = [&](const Rat& end) {
    if (run >= run_length) {
      rep.cluster_spans.emplace_back(run_start, end);
      rep.cluster_points.push_back(Rat((run_start + end) / 2));
    }
    run = 0;
  };
  for (std::size_t k = 1; k < el.size(); ++k) {
    if (!same_fiber(el[k - 1], el[k])) {
      close_run(el[k - 1].as_rat(last));
      continue;
    }
    Rat lo = el[k - 1].as_rat(last), hi = el[k].as_rat(last);
    Rat gap = hi - lo;
    if (!rep.min_gap || gap < *rep.min_gap) rep.min_gap = gap;
    if (gap < threshold) {
      if (run == 0) run_start = lo;
      ++run;
    } else {
      close_run(lo);
    }
  }
  close_run(el.back().as_rat(last));
  return rep;
}

json OmegaTable::to_json() const {
  json rows = json::array();
  for (const auto& e : entries)
    rows.push_back(json{{"point", e.point}, {"value", rat_json(e.value)}, {"terms", e.term_indices}});
  return json{{"m", m},
              {"grid", grid},
              {"order_preserving", order_preserving},
              {"sums_certified", sums_certified},
              {"entries", rows}};
}

OmegaTable omega_embedding(const GenStream& lambda, long m, long grid, long cap) {
  if (m < 1 || grid < 0) throw domain_error("omega_embedding needs m >= 1 and grid >= 0");
  if (!lambda.limit()) throw domain_error("omega_embedding needs a sequence with a known limit");
  const Rat limit = *lambda.limit();
  std::vector<Rat> seq;
  auto lam = [&](long i) -> const Rat& {
    if (i < 0 || i > cap + grid + 2) throw domain_error("sequence index beyond the configured cap");
    while (static_cast<long>(seq.size()) <= i) {
      auto g = lambda.at(seq.size());
      if (!g) throw domain_error("sequence ended before index " + std::to_string(i));
      Rat v = g->as_rat();
      if (!seq.empty() && !(seq.back() < v)) throw domain_error("sequence is not strictly increasing");
      if (!(v < limit)) throw domain_error("sequence term reaches its limit");
      seq.push_back(v);
    }
    return seq[i];
  };
  // minimal s with lambda_b + limit < lambda_{b+1} + lambda_s
  std::map<long, long> sigma_of_base;
  auto sigma_at = [&](long b) {
    auto it = sigma_of_base.find(b);
    if (it != sigma_of_base.end()) return it->second;
    Rat need = lam(b) + limit - lam(b + 1);
    for (long s = 0; s <= cap; ++s)
      if (need < lam(s)) return sigma_of_base[b] = s;
    throw domain_error("no sigma index found below cap " + std::to_string(cap));
  };

  OmegaTable out;
  out.m = m;
  out.grid = grid;
  std::vector<long> point(m, 0);
  for (;;) {
    OmegaEntry e;
    e.point = point;
    e.term_indices.push_back(point[0] + 1);
    long sigma = sigma_at(point[0]);  // sigma_1(a_1)
    for (long i = 1; i < m; ++i) {
      e.term_indices.push_back(sigma + point[i] + 1);
      if (i + 1 < m) sigma = sigma_at(sigma + point[i]);
    }
    e.value = 0;
    for (long idx : e.term_indices) e.value += lam(idx);
    out.entries.push_back(std::move(e));
    long k = m - 1;
    while (k >= 0 && point[k] == grid) point[k--] = 0;
    if (k < 0) break;
    ++point[k];
  }
  out.order_preserving = true;
  for (std::size_t k = 1; k < out.entries.size(); ++k)
    if (!(out.entries[k - 1].value < out.entries[k].value)) out.order_preserving = false;
  out.sums_certified = true;
  for (const auto& e : out.entries) {
    Rat s = 0;
    for (long idx : e.term_indices) s += lambda.at(idx)->as_rat();
    if (static_cast<long>(e.term_indices.size()) != m || s != e.value) out.sums_certified = false;
  }
  return out;
}

}  // namespace valsg
