#include "valsg/skp.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "valsg/parser.hpp"

namespace valsg {

namespace {

const std::vector<std::string> xy_vars{"x", "y"};

constexpr std::size_t max_beta_index = 128;

const std::vector<Rat>& beta_table() {
  static const std::vector<Rat> table = [] {
    std::vector<Rat> t{Rat(1)};
    for (std::size_t i = 0; i + 1 < max_beta_index; ++i) t.push_back(Rat(2 * t.back() + pow2(-static_cast<long>(i + 1))));
    return t;
  }();
  return table;
}

std::uint64_t key_order(std::size_t j) { return j == 0 ? 1 : std::uint64_t(1) << (j - 1); }

}  // namespace

Rat dyadic_beta(std::size_t i) {
  if (i >= max_beta_index) throw domain_error("beta index beyond " + std::to_string(max_beta_index));
  return beta_table()[i];
}

Rat dyadic_beta_closed(std::size_t i) {
  const long e = static_cast<long>(i);
  return Rat((pow2(e + 2) - pow2(-e)) / 3);
}

KeyPolySeq KeyPolySeq::build(std::size_t count, std::uint32_t degree_cap) {
  KeyPolySeq s;
  const MPoly x = MPoly::variable(xy_vars, "x");
  for (std::size_t i = 0; i < count; ++i) {
    MPoly p;
    if (i == 0) {
      p = x;
    } else if (i == 1) {
      p = MPoly::variable(xy_vars, "y");
    } else {
      const std::uint32_t e = std::uint32_t(1) << i;
      if (e > degree_cap) throw domain_error("key polynomial P_" + std::to_string(i) + " exceeds the degree cap");
      MPoly sq = s.entries_[i - 1].poly.pow(2, degree_cap);
      MPoly shift = MPoly::monomial(xy_vars, {e, 0});
      p = sq - MPoly::mul(shift, s.entries_[i - 2].poly, degree_cap);
    }
    s.entries_.push_back(KeyPoly{std::move(p), dyadic_beta(i), i == 0 ? 1u : 2u});
  }
  return s;
}

json KeyPolySeq::to_json() const {
  json a = json::array();
  for (std::size_t i = 0; i < entries_.size(); ++i)
    a.push_back(json{{"index", i},
                     {"poly", entries_[i].poly.to_string()},
                     {"beta", rat_json(entries_[i].beta)},
                     {"m", entries_[i].m}});
  return a;
}

const KeyPolySeq& shared_key_polys(std::size_t count) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<KeyPolySeq>> built;
  std::lock_guard<std::mutex> lock(mu);
  if (built.empty() || built.back()->size() < count)
    built.push_back(std::make_unique<KeyPolySeq>(KeyPolySeq::build(std::max<std::size_t>(count, 4))));
  return *built.back();
}

Rat standard_value(const StdExponents& l) {
  Rat v = 0;
  for (std::size_t j = 0; j < l.size(); ++j)
    if (l[j]) v += l[j] * dyadic_beta(j);
  return v;
}

std::uint64_t standard_order(const StdExponents& l) {
  std::uint64_t o = 0;
  for (std::size_t j = 0; j < l.size(); ++j) o += l[j] * key_order(j);
  return o;
}

MPoly StdExpansion::reconstruct(const KeyPolySeq& kps) const {
  MPoly sum(xy_vars);
  for (const auto& t : terms) {
    MPoly m = MPoly::constant(xy_vars, t.coeff);
    for (std::size_t j = 0; j < t.exps.size(); ++j)
      if (t.exps[j]) m = m * kps.poly(j).pow(t.exps[j]);
    sum += m;
  }
  return sum;
}

json StdExpansion::to_json() const {
  json a = json::array();
  for (const auto& t : terms)
    a.push_back(json{{"coeff", rat_json(t.coeff)}, {"l", t.exps}, {"value", rat_json(standard_value(t.exps))}});
  return a;
}

namespace {

void expand_rec(const MPoly& f, std::size_t k, std::uint64_t bits, const KeyPolySeq& kps,
                std::map<StdExponents, Rat>& out) {
  if (f.is_zero()) return;
  if (k == 0) {
    for (const auto& [e, c] : f.terms()) {
      StdExponents l{e[0]};
      for (std::size_t j = 1; j < 64; ++j)
        if (bits >> j) l.push_back((bits >> j) & 1);
      while (l.size() > 1 && l.back() == 0) l.pop_back();
      Rat& slot = out[l];
      slot += c;
    }
    return;
  }
  auto [q, r] = divide_monic(f, kps.poly(k), 1);
  expand_rec(r, k - 1, bits, kps, out);
  expand_rec(q, k - 1, bits | (std::uint64_t(1) << k), kps, out);
}

std::size_t levels_needed(const MPoly& f) {
  std::uint32_t dy = f.degree(1);
  std::size_t k = 0;
  while ((std::uint64_t(1) << k) <= dy) ++k;
  return k;
}

MPoly as_xy(const MPoly& f) { return f.vars() == xy_vars ? f : f.with_vars(xy_vars); }

}  // namespace

StdExpansion standard_expansion(const MPoly& f_in, const KeyPolySeq& kps) {
  MPoly f = as_xy(f_in);
  std::size_t k = levels_needed(f);
  if (k + 1 > kps.size())
    throw domain_error("key polynomial sequence too short: y-degree " + std::to_string(f.degree(1)) + " needs P_" +
                       std::to_string(k));
  std::map<StdExponents, Rat> acc;
  expand_rec(f, k, 0, kps, acc);
  StdExpansion ex;
  for (auto& [l, c] : acc)
    if (::sgn(c) != 0) ex.terms.push_back(StdTerm{c, l});
  std::sort(ex.terms.begin(), ex.terms.end(),
            [](const StdTerm& a, const StdTerm& b) { return standard_value(a.exps) < standard_value(b.exps); });
  return ex;
}

StdExpansion standard_expansion(const MPoly& f) {
  MPoly g = as_xy(f);
  return standard_expansion(g, shared_key_polys(levels_needed(g) + 1));
}

Rat nu_bar(const MPoly& f) {
  if (f.is_zero()) throw domain_error("the valuation of the zero polynomial is undefined");
  StdExpansion ex = standard_expansion(f);
  return standard_value(ex.terms.front().exps);
}

Rat nu_bar(const RatFunc& f) { return nu_bar(f.num()) - nu_bar(f.den()); }

MPoly parse_xy(const std::string& text) { return parse_poly(text, xy_vars); }

bool check_standard_injectivity(std::size_t max_j, std::uint32_t max_l0) {
  std::set<Rat> seen;
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << max_j); ++mask)
    for (std::uint32_t l0 = 0; l0 <= max_l0; ++l0) {
      StdExponents l{l0};
      for (std::size_t j = 0; j < max_j; ++j) l.push_back((mask >> j) & 1);
      seen.insert(standard_value(l));
      ++count;
    }
  return seen.size() == count;
}

KeyDivisibilityReport key_divisibility_check(std::size_t i) {
  const KeyPolySeq& kps = shared_key_polys(i + 1);
  const std::vector<std::string> xz{"x", "z"};
  MPoly xz_sub = MPoly::variable(xz, "x") * MPoly::variable(xz, "z");
  MPoly f = kps.poly(i).subst({{"x", MPoly::variable(xz, "x")}, {"y", xz_sub}}, xz);
  XPowerQuotient q = x_power_divide(f, static_cast<std::uint32_t>(i), "x", "z");
  KeyDivisibilityReport rep;
  rep.index = i;
  rep.quotient = q.quotient;
  rep.z_degree = q.z_degree;
  rep.raw_z_degree = q.raw_z_degree;
  rep.verdict = q.z_degree <= i;
  return rep;
}

std::vector<MnGenerator> mn_small_generators(unsigned n) {
  std::vector<std::size_t> small;
  for (std::size_t j = 0; key_order(j) < n; ++j) small.push_back(j);
  std::vector<MnGenerator> out;
  StdExponents l(small.empty() ? 1 : small.back() + 1, 0);
  // every minimal vector has each l_j <= n
  auto rec = [&](auto&& self, std::size_t pos, std::uint64_t order) -> void {
    if (pos == small.size()) {
      if (order < n) return;
      for (std::size_t p = 0; p < small.size(); ++p)
        if (l[small[p]] && order - key_order(small[p]) >= n) return;
      StdExponents t = l;
      while (t.size() > 1 && t.back() == 0) t.pop_back();
      out.push_back(MnGenerator{Rat(standard_value(t) - n), t});
      return;
    }
    for (std::uint32_t c = 0; c <= n; ++c) {
      l[small[pos]] = c;
      self(self, pos + 1, order + c * key_order(small[pos]));
    }
    l[small[pos]] = 0;
  };
  if (!small.empty()) rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [](const MnGenerator& a, const MnGenerator& b) { return a.value < b.value; });
  return out;
}

GenStream mn_coset_stream(unsigned n) {
  json params{{"n", n}};
  if (n == 0)
    return GenStream::rule("mn-cosets", params, [](std::size_t) { return GroupElem::rat(0); }, true, 1).allow_zero();
  std::vector<Rat> small;
  for (const auto& g : mn_small_generators(n)) small.push_back(g.value);
  std::size_t first_large = 0;
  while (key_order(first_large) < n) ++first_large;
  auto large = [n, first_large](std::size_t k) { return Rat(dyadic_beta(first_large + k) - n); };
  return GenStream::rule(
             "mn-cosets", params,
             [small, large](std::size_t i) {
               std::size_t a = 0, b = 0;
               for (std::size_t step = 0;; ++step) {
                 bool take_small = a < small.size() && small[a] <= large(b);
                 Rat v = take_small ? small[a] : large(b);
                 if (step == i) return GroupElem::rat(v);
                 (take_small ? a : b)++;
               }
             },
             true)
      .allow_zero();
}

SemiModule mn_module(unsigned n) { return SemiModule{dyadic_beta_stream(), mn_coset_stream(n)}; }

SemiTable module_Mn(unsigned n, const Rat& bound) { return module_table(mn_module(n), GroupElem::rat(bound)); }

std::vector<GeneratorWitness> new_generator_witness(unsigned n, std::size_t max_j) {
  if (n < 1) throw domain_error("new_generator_witness needs n >= 1");
  std::vector<GeneratorWitness> out;
  GenStream cosets = mn_coset_stream(n);
  for (std::size_t j = n; j <= max_j; ++j) {
    GeneratorWitness w;
    w.j = j;
    w.value = dyadic_beta(j) - n;
    w.denominator = w.value.get_den();
    w.psi_denominator = pow2(static_cast<long>(j) - 1).get_num();
    w.in_module = key_order(j) >= n;
    // the other module generators up to the value, and M_0 below beta_j,
    // must all lie in (1/2^(j-1)) Z
    bool psi_fine = true;
    for (std::size_t i = 0;; ++i) {
      Rat c = cosets.at(i)->as_rat();
      if (c > w.value) break;
      if (c == w.value) continue;
      if (!(Rat(c * w.psi_denominator).get_den() == 1)) psi_fine = false;
    }
    for (std::size_t k = 0; k < j; ++k)
      if (!(Rat(dyadic_beta(k) * w.psi_denominator).get_den() == 1)) psi_fine = false;
    w.certified = w.in_module && psi_fine && sign(w.value) >= 0 && w.denominator > w.psi_denominator;
    out.push_back(w);
  }
  return out;
}

}  // namespace valsg
