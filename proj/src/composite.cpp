#include "valsg/composite.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>

#include "valsg/skp.hpp"

namespace valsg {

namespace {

Rat dot(const std::pair<Rat, Rat>& c, const GroupElem& g) { return Rat(c.first * g.as_rat(0) + c.second * g.as_rat(1)); }

Rat cross(const GroupElem& p, const GroupElem& q) {
  return Rat(p.as_rat(0) * q.as_rat(1) - p.as_rat(1) * q.as_rat(0));
}

json functional_json(const std::pair<Rat, Rat>& c) { return json::array({rat_json(c.first), rat_json(c.second)}); }

}  // namespace

ConeQ cone_of(const std::vector<GroupElem>& prior_in) {
  std::vector<GroupElem> prior;
  for (const auto& g : prior_in) {
    if (g.rank() != 2) throw structural_error("cone_check works in rank 2");
    if (!g.is_zero()) prior.push_back(g);
  }
  ConeQ c;
  if (prior.empty()) {
    c.shape = "ray";  // the origin alone; treated as a degenerate ray
    return c;
  }
  bool collinear = std::all_of(prior.begin(), prior.end(), [&](const GroupElem& g) { return sgn(cross(prior[0], g)) == 0; });
  if (collinear) {
    bool same = std::all_of(prior.begin(), prior.end(), [&](const GroupElem& g) {
      return sgn(Rat(g.as_rat(0) * prior[0].as_rat(0) + g.as_rat(1) * prior[0].as_rat(1))) > 0;
    });
    c.shape = same ? "ray" : "line";
    if (same) c.rays = {prior[0]};
    return c;
  }
  for (const auto& p : prior)
    for (const auto& q : prior) {
      if (sgn(cross(p, q)) <= 0) continue;
      bool between = std::all_of(prior.begin(), prior.end(), [&](const GroupElem& w) {
        return sgn(cross(p, w)) >= 0 && sgn(cross(w, q)) >= 0;
      });
      if (between) {
        c.shape = "pointed";
        c.rays = {p, q};
        return c;
      }
    }
  // not pointed: a half-plane when some perpendicular functional is nonnegative on everything
  for (const auto& p : prior)
    for (int s : {1, -1}) {
      std::pair<Rat, Rat> n{Rat(-s * p.as_rat(1)), Rat(s * p.as_rat(0))};
      if (std::all_of(prior.begin(), prior.end(), [&](const GroupElem& w) { return sgn(dot(n, w)) >= 0; })) {
        c.shape = "half-plane";
        return c;
      }
    }
  c.shape = "plane";
  return c;
}

ConeCheck cone_check(const GroupElem& gamma, const std::vector<GroupElem>& prior) {
  if (gamma.rank() != 2) throw structural_error("cone_check works in rank 2");
  ConeCheck r;
  r.cone = cone_of(prior);
  // candidate functionals: both perpendiculars of every generator, and the
  // generator itself (needed for a ray); the cone is cut out by the valid ones
  std::vector<std::pair<Rat, Rat>> candidates;
  for (const auto& p : prior) {
    if (p.is_zero()) continue;
    candidates.push_back({Rat(-p.as_rat(1)), p.as_rat(0)});
    candidates.push_back({p.as_rat(1), Rat(-p.as_rat(0))});
    candidates.push_back({p.as_rat(0), p.as_rat(1)});
  }
  bool all_zero = std::all_of(prior.begin(), prior.end(), [](const GroupElem& g) { return g.is_zero(); });
  if (all_zero) {
    r.inside = gamma.is_zero();
    if (!r.inside) r.separator = std::pair<Rat, Rat>{Rat(-gamma.as_rat(0)), Rat(-gamma.as_rat(1))};
    return r;
  }
  for (const auto& n : candidates) {
    bool valid = std::all_of(prior.begin(), prior.end(), [&](const GroupElem& w) { return sgn(dot(n, w)) >= 0; });
    if (valid && sgn(dot(n, gamma)) < 0) {
      r.inside = false;
      r.separator = n;
      return r;
    }
  }
  r.inside = true;
  return r;
}

json ConeCheck::to_json() const {
  json j{{"inside", inside}, {"cone_shape", cone.shape}, {"rays", elems_json(cone.rays)}};
  j["separator"] = separator ? functional_json(*separator) : json(nullptr);
  return j;
}

Rat lambda_value(const std::string& rule, long long i) {
  if (rule == "one") return Rat(1);
  if (rule == "alternating") return Rat(i % 2 == 0 ? 1 : -1);
  if (rule == "index") return Rat(static_cast<long>(i));
  if (rule.rfind("const:", 0) == 0) {
    Rat c = parse_rat(rule.substr(6));
    if (sgn(c) == 0) throw domain_error("lambda rule constant must be nonzero");
    return c;
  }
  throw structural_error("unknown lambda rule '" + rule + "' (expected one, alternating, index, const:<r>)");
}

namespace {

constexpr std::size_t max_z2_depth = 40;

GroupElem lex2(long long a, long long b) { return GroupElem{Rat(static_cast<long>(a)), Rat(static_cast<long>(b))}; }

}  // namespace

Z2Example z2_build(const std::string& a_rule, const std::string& b_rule, const std::string& lambda_rule,
                   std::size_t depth) {
  if (depth < 3 || depth > max_z2_depth)
    throw domain_error("z2 depth must lie in [3, " + std::to_string(max_z2_depth) + "]");
  const long long top = static_cast<long long>(depth) + 3;  // series use terms up to depth + 2
  auto a = [&](long long i) { return i == 2 ? 0LL : int_sequence(a_rule, i); };
  auto b = [&](long long i) { return int_sequence(b_rule, i); };
  if (b(3) <= 0) throw domain_error("b_3 must be positive (index 3)");
  for (long long i = 3; i < top; ++i) {
    if (b(i + 1) <= b(i)) throw domain_error("b is not increasing at index " + std::to_string(i + 1));
    if (sgn(lambda_value(lambda_rule, i)) == 0) throw domain_error("lambda vanishes at index " + std::to_string(i));
  }
  auto ratio = [&](long long i) { return Rat(Rat(static_cast<long>(a(i + 1) - a(i))) / static_cast<long>(b(i + 1))); };
  for (long long i = 3; i < top - 1; ++i) {
    if (sgn(ratio(i)) <= 0) throw domain_error("ratio (a_{i+1} - a_i)/b_{i+1} is not positive at index " + std::to_string(i));
    if (i > 3 && ratio(i) <= ratio(i - 1))
      throw domain_error("ratios (a_{i+1} - a_i)/b_{i+1} do not increase strictly at index " + std::to_string(i));
  }

  Z2Example ex;
  ex.a_rule = a_rule;
  ex.b_rule = b_rule;
  ex.lambda_rule = lambda_rule;
  ex.depth = depth;
  ex.start_condition = a(3) > 0 && Rat(Rat(static_cast<long>(a(3))) / static_cast<long>(b(3))) < ratio(3);
  if (!ex.start_condition)
    ex.warnings.push_back("a_3/b_3 < (a_4 - a_3)/b_4 fails, so gamma_4 lies in the cone of gamma_1, gamma_2, gamma_3");

  std::vector<LexSeries::Term> terms;
  for (long long i = 3; i < top; ++i) terms.push_back({lex2(b(i), -a(i)), lambda_value(lambda_rule, i)});
  LexSeries u(terms, lex2(b(top), -a(top)));

  ex.gammas = {lex2(0, 1), lex2(1, 0)};
  ex.closed_form_ok = {true, true};
  for (long long i = 3; i <= static_cast<long long>(depth); ++i) {
    if (i > 3) {
      LexSeries shift = LexSeries::monomial(lex2(0, a(i - 1) - a(i - 2)), Rat(1));
      u = shift * u - LexSeries::monomial(lex2(b(i - 1), 0), lambda_value(lambda_rule, i - 1));
    }
    auto v = u.valuation();
    if (!v.finite()) throw precision_error("u_" + std::to_string(i) + " has no known leading term");
    ex.u_series.push_back(u);
    ex.gammas.push_back(v.value);
    ex.closed_form_ok.push_back(v.value == lex2(b(i), a(i - 1) - a(i)) && u.leading_coeff() == lambda_value(lambda_rule, i));
  }
  return ex;
}

json Z2Example::to_json() const {
  json u = json::array();
  for (const auto& s : u_series) u.push_back(s.to_string());
  return json{{"a_rule", a_rule},         {"b_rule", b_rule},   {"lambda_rule", lambda_rule},
              {"depth", depth},           {"gammas", elems_json(gammas)}, {"u_series", u},
              {"closed_form_ok", closed_form_ok}, {"start_condition", start_condition}, {"warnings", warnings}};
}

Z2Report z2_verify(const Z2Example& ex, const GroupElem& bound) {
  Z2Report rep;
  rep.bound = bound;
  rep.verdict = true;
  for (std::size_t i = 3; i <= ex.depth; ++i) {
    Z2IndexReport e;
    e.index = i;
    e.gamma = ex.gammas[i - 1];
    e.closed_form_ok = ex.closed_form_ok[i - 1];
    std::vector<GroupElem> prior(ex.gammas.begin(), ex.gammas.begin() + static_cast<long>(i - 1));
    e.cone = cone_check(e.gamma, prior);
    SemiTable table = enumerate_below(GenStream::finite(prior), bound);
    e.prior_complete = table.complete;
    for (long k = 1;; ++k) {
      GroupElem m = k * e.gamma;
      if (!below_bound(m, bound)) break;
      if (table.contains(m)) e.multiples_in_prior.push_back(k);
    }
    e.verdict = e.closed_form_ok && !e.cone.inside && e.multiples_in_prior.empty() && e.prior_complete;
    rep.verdict = rep.verdict && e.verdict;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

json Z2Report::to_json() const {
  json a = json::array();
  for (const auto& e : entries)
    a.push_back(json{{"index", e.index},
                     {"gamma", elem_json(e.gamma)},
                     {"closed_form_ok", e.closed_form_ok},
                     {"cone", e.cone.to_json()},
                     {"multiples_in_prior", e.multiples_in_prior},
                     {"prior_complete", e.prior_complete},
                     {"verdict", e.verdict}});
  return json{{"bound", elem_json(bound)}, {"entries", a}, {"verdict", verdict}};
}

// ---- composite valuation ----

const std::vector<std::string>& xyuv_vars() {
  static const std::vector<std::string> v{"x", "y", "u", "v"};
  return v;
}

namespace {

const std::vector<std::string>& xy() {
  static const std::vector<std::string> v{"x", "y"};
  return v;
}

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

MPoly xy_monomial(std::uint32_t px, std::uint32_t py) { return MPoly::monomial(xy(), {px, py}); }

}  // namespace

std::map<std::pair<unsigned, unsigned>, MPoly> uv_coefficients(const MPoly& f_in) {
  MPoly f = f_in.vars() == xyuv_vars() ? f_in : f_in.with_vars(xyuv_vars());
  std::map<std::pair<unsigned, unsigned>, MPoly> a;
  for (const auto& [e, c] : f.terms()) {
    auto [it, fresh] = a.try_emplace({e[2], e[3]}, MPoly(xy()));
    it->second.add_term({e[0], e[1]}, c);
  }
  return a;
}

MPoly phi_numerator(const std::map<std::pair<unsigned, unsigned>, MPoly>& a, unsigned j, unsigned k) {
  MPoly n(xy());
  for (unsigned i = j; i <= k; ++i) {
    auto it = a.find({k - i, i});
    if (it == a.end()) continue;
    n += Rat(binomial(i, j)) * (it->second * xy_monomial(k - i, i - j));
  }
  return n;
}

GroupElem alpha_multiple(long a, long b, const Rat& second) {
  return GroupElem(std::vector<Scalar>{QuadRat(Rat(a), Rat(b)), second});
}

CompositeValue composite_value(const MPoly& f, const ResidualValuation& residual) {
  if (f.is_zero()) throw domain_error("the valuation of the zero polynomial is undefined");
  auto a = uv_coefficients(f);
  unsigned max_k = 0;
  for (const auto& [ij, c] : a) max_k = std::max(max_k, ij.first + ij.second);
  std::optional<QuadRat> best;
  CompositeValue out;
  for (unsigned k = 0; k <= max_k; ++k)
    for (unsigned j = 0; j <= k; ++j) {
      QuadRat e(Rat(k - j), Rat(j));
      if (best && !(e < *best)) continue;
      MPoly n = phi_numerator(a, j, k);
      if (n.is_zero()) continue;
      best = e;
      out.k = k;
      out.j = j;
      out.numerator = std::move(n);
    }
  Rat second = (residual ? residual(out.numerator) : nu_bar(out.numerator)) - (out.k - out.j);
  out.value = GroupElem(std::vector<Scalar>{*best, second});
  return out;
}

json CompositeValue::to_json() const {
  return json{{"value", elem_json(value)}, {"k", k}, {"j", j}, {"numerator", numerator.to_string()}};
}

GroupElem composite_value_series(const MPoly& f_in) {
  if (f_in.is_zero()) throw domain_error("the valuation of the zero polynomial is undefined");
  using QSeries = HahnSeries<QuadRat, RatFunc>;
  MPoly f = f_in.vars() == xyuv_vars() ? f_in : f_in.with_vars(xyuv_vars());
  const QuadRat zero(Rat(0), Rat(0));
  const RatFunc one = RatFunc::constant(xy(), Rat(1));
  const RatFunc xr(MPoly::variable(xy(), "x")), yr(MPoly::variable(xy(), "y"));
  QSeries t = QSeries::monomial(QuadRat(Rat(1), Rat(0)), one);
  QSeries vt({{QuadRat(Rat(1), Rat(0)), yr / xr}, {QuadRat(Rat(0), Rat(1)), one}});
  std::map<std::string, QSeries> assign{{"x", QSeries::monomial(zero, xr)},
                                        {"y", QSeries::monomial(zero, yr)},
                                        {"u", t},
                                        {"v", vt}};
  QSeries s = subst_series(f, assign, one, zero);
  if (s.known_zero()) throw structural_error("f(t, v(t)) vanished for a nonzero f");
  const auto& [e, c] = s.terms().front();
  return GroupElem(std::vector<Scalar>{e, nu_bar(c)});
}

MPoly phi_poly(unsigned j, unsigned k, const std::vector<MPoly>& coeffs) {
  if (coeffs.size() != k + 1) throw domain_error("phi_poly needs k + 1 coefficients");
  static const std::vector<std::string> xyw{"x", "y", "W"};
  MPoly p(xyw);
  for (unsigned i = j; i <= k; ++i) {
    MPoly c = coeffs[i].with_vars(xyw);
    p += Rat(binomial(i, j)) * (c * MPoly::monomial(xyw, {0, 0, i - j}));
  }
  return p;
}

bool phi_derivative_check(unsigned k, const std::vector<MPoly>& coeffs) {
  MPoly d = phi_poly(0, k, coeffs);
  Int fact = 1;
  for (unsigned j = 0; j <= k; ++j) {
    if (j > 0) {
      d = d.derivative(2);
      fact *= j;
    }
    if (!(d == Rat(fact) * phi_poly(j, k, coeffs))) return false;
  }
  return true;
}

SliceLevel SliceLevel::parse(const std::string& text) {
  SliceLevel l;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto pos = s.find("alpha");
  try {
    if (pos == std::string::npos) {
      l.n = std::stol(s);
    } else {
      l.alpha = true;
      std::string head = s.substr(0, pos);
      if (!head.empty() && head.back() == '*') head.pop_back();
      if (pos + 5 != s.size()) throw parse_error("trailing text after alpha", pos + 5);
      l.n = head.empty() ? 1 : std::stol(head);
    }
  } catch (const std::logic_error&) {
    throw parse_error("level must be n or n*alpha, got '" + text + "'", 0);
  }
  if (l.n < 0) throw domain_error("slice level must be nonnegative");
  return l;
}

std::string SliceLevel::to_string() const {
  if (!alpha) return std::to_string(n);
  return std::to_string(n) + "*alpha";
}

namespace {

MPoly random_xy(std::mt19937_64& rng, unsigned degree_bound, unsigned min_order) {
  std::uniform_int_distribution<int> coeff(-3, 3), terms(1, 4), deg(0, static_cast<int>(degree_bound));
  MPoly p(xy());
  while (p.is_zero()) {
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
      unsigned d = std::max<unsigned>(deg(rng), min_order);
      std::uniform_int_distribution<unsigned> split(0, d);
      unsigned py = split(rng);
      int c = coeff(rng);
      if (c) p.add_term({d - py, py}, Rat(c));
    }
  }
  return p;
}

// f = sum a_{n-i,i} u^(n-i) v^i with sum a_{n-i,i} x^(n-i) y^i = h, for h in (x,y)^n
MPoly lift_to_level(const MPoly& h, unsigned n) {
  MPoly f(xyuv_vars());
  for (const auto& [e, c] : h.terms()) {
    unsigned i = std::min<unsigned>(e[1], n);
    if (e[0] + e[1] < n) throw domain_error("polynomial not in (x,y)^n");
    f.add_term({e[0] - (n - i), e[1] - i, n - i, i}, c);
  }
  return f;
}

MPoly key_product(const StdExponents& l) {
  const KeyPolySeq& kps = shared_key_polys(l.size() + 1);
  MPoly h = MPoly::constant(xy(), Rat(1));
  for (std::size_t j = 0; j < l.size(); ++j)
    if (l[j]) h = h * kps.poly(j).pow(l[j]);
  return h;
}

}  // namespace

SliceReport F_slice(const SliceLevel& level, unsigned degree_bound, const Rat& bound, std::uint64_t seed,
                    std::size_t samples) {
  SliceReport rep;
  rep.level = level;
  const unsigned n = static_cast<unsigned>(level.n);
  std::mt19937_64 rng(seed);
  const MPoly x = MPoly::variable(xyuv_vars(), "x"), y = MPoly::variable(xyuv_vars(), "y");
  const MPoly u = MPoly::variable(xyuv_vars(), "u"), v = MPoly::variable(xyuv_vars(), "v");
  const MPoly line = x * v - y * u;
  const GroupElem first_target =
      level.alpha ? alpha_multiple(0, level.n, Rat(0)) : alpha_multiple(level.n, 0, Rat(0));

  auto record = [&](const MPoly& f, const std::string& kind) {
    CompositeValue cv = composite_value(f);
    if (!(std::get<QuadRat>(cv.value[0]) == std::get<QuadRat>(first_target[0]))) {
      ++rep.rejected;
      return;
    }
    rep.samples.push_back(SliceSample{f, cv.value.as_rat(1), kind});
  };

  for (std::size_t s = 0; s < samples; ++s) {
    if (level.alpha) {
      MPoly h = random_xy(rng, degree_bound, 0).with_vars(xyuv_vars());
      record(h * line.pow(n), "random");
    } else {
      MPoly f(xyuv_vars());
      for (unsigned i = 0; i <= n; ++i) {
        MPoly a = random_xy(rng, degree_bound, 0).with_vars(xyuv_vars());
        f += a * u.pow(n - i) * v.pow(i);
      }
      record(f, "random");
    }
  }

  // the module generators themselves
  if (level.alpha) {
    record(line.pow(n), "generator");
  } else if (n == 0) {
    for (std::size_t j = 0; dyadic_beta(j) < bound; ++j)
      record(shared_key_polys(j + 1).poly(j).with_vars(xyuv_vars()), "generator");
  } else {
    for (const auto& g : mn_small_generators(n))
      if (g.value < bound) record(lift_to_level(key_product(g.l), n), "generator");
    for (std::size_t j = 0; dyadic_beta(j) - n < bound; ++j) {
      std::uint64_t ord = j == 0 ? 1 : std::uint64_t(1) << (j - 1);
      if (ord >= n) record(lift_to_level(shared_key_polys(j + 1).poly(j), n), "generator");
    }
  }

  std::set<Rat> seen;
  for (const auto& s : rep.samples)
    if (s.second < bound) seen.insert(s.second);
  rep.observed.assign(seen.begin(), seen.end());

  SemiTable expected = level.alpha || n == 0 ? enumerate_below(dyadic_beta_stream(), GroupElem::rat(bound - (level.alpha ? level.n : 0)))
                                             : module_Mn(n, bound);
  for (const auto& e : expected.elements) rep.expected.push_back(e.as_rat() + (level.alpha ? level.n : 0));
  std::set<Rat> exp(rep.expected.begin(), rep.expected.end());
  rep.contained = std::all_of(rep.observed.begin(), rep.observed.end(), [&](const Rat& r) { return exp.count(r) > 0; });
  return rep;
}

json SliceReport::to_json() const {
  json s = json::array();
  for (const auto& x : samples)
    s.push_back(json{{"f", x.f.to_string()}, {"second", rat_json(x.second)}, {"kind", x.kind}});
  return json{{"level", level.to_string()}, {"samples", s},          {"observed", rats_json(observed)},
              {"expected", rats_json(expected)}, {"contained", contained}, {"rejected", rejected}};
}

}  // namespace valsg
