#include "valsg/transcend.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "valsg/skp.hpp"

namespace valsg {

namespace {

long two_adic_exponent(const Rat& r) {
  const Int& d = r.get_den();
  long e = static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2)) - 1;
  if (Int(Int(1) << e) != d) throw domain_error("value " + to_string(r) + " is not dyadic");
  return e;
}

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

constexpr int max_escalations = 24;

}  // namespace

StdElem RealizedValue::quotient() const {
  return StdElem::monomial(StdMono{numerator.l0 - x_denominator, numerator.mask});
}

std::string RealizedValue::f_string() const { return std_mono_string(numerator); }

std::string RealizedValue::g_string() const {
  return std_mono_string(StdMono{x_denominator, 0});
}

json RealizedValue::to_json() const {
  return json{{"target", rat_json(target)}, {"f", f_string()}, {"g", g_string()}};
}

RealizedValue realize_value(const Rat& target, std::size_t horizon) {
  RealizedValue rv;
  rv.target = target;
  Rat r = target;
  while (r.get_den() != 1) {
    long h = two_adic_exponent(r);
    if (static_cast<std::size_t>(h) > horizon)
      throw domain_error("value " + to_string(target) + " needs P_" + std::to_string(h) +
                         "; raise the key-polynomial horizon above " + std::to_string(horizon));
    rv.numerator.mask |= std::uint64_t(1) << h;
    r -= dyadic_beta(static_cast<std::size_t>(h));
  }
  long k = r.get_num().get_si();
  if (k >= 0)
    rv.numerator.l0 = k;
  else
    rv.x_denominator = -k;
  return rv;
}

std::vector<DMonomial> d_basis(unsigned n) {
  std::vector<DMonomial> out;
  for (unsigned c = 0; c <= n; ++c)
    for (unsigned b = 0; b + c <= n; ++b)
      for (unsigned a = 0; a + b + c <= n; ++a) out.push_back({a, b, c});
  return out;
}

StdElem d_image(const DMonomial& m, const StdElem& z) {
  return StdElem::x_power(m.a) * StdElem::key(1).pow(m.b) * z.pow(m.c);
}

DSpectrum d_spectrum(unsigned n, const StdElem& z, const Rat& precision, const Rat& max_precision) {
  Rat p = precision;
  for (int attempt = 0;; ++attempt) {
    std::vector<HahnSeries<Rat, Rat>> images;
    StdElem zt = z.known_zero() ? z : z.truncated(p);
    for (const auto& m : d_basis(n)) {
      StdElem img = d_image(m, zt);
      if (img.exact() && img.known_zero()) continue;
      images.push_back(img.truncated(p).to_series());
    }
    try {
      return DSpectrum{value_spectrum(images), p};
    } catch (const precision_error& e) {
      if (attempt >= max_escalations || !(2 * p <= max_precision))
        throw precision_error(std::string(e.what()) + " (D_" + std::to_string(n) + " at precision " + to_string(p) +
                              "; raise --precision)");
      p *= 2;
    }
  }
}

Rat tau(unsigned n, const TranscendState& state) {
  if (n < 1 || n > state.z.size()) throw domain_error("tau index out of range");
  DSpectrum s = d_spectrum(n, state.z[n - 1], state.precision, state.precision * (Int(1) << max_escalations));
  return s.report.values.back();
}

TranscendStep next_step(const TranscendState& st) {
  const std::size_t i = st.steps.size() + 1;
  if (st.z.size() != i) throw domain_error("state has " + std::to_string(st.z.size()) + " z values for step " + std::to_string(i));
  Rat g_product = 0;
  std::set<Rat> seen;  // values whose denominators the next lambda must beat
  for (const auto& s : st.steps) {
    g_product += s.realized.x_denominator;
    seen.insert(s.spectrum_values.begin(), s.spectrum_values.end());
    seen.insert(s.lambda);
    seen.insert(s.alpha);
  }
  TranscendStep step;
  step.i = i;
  DSpectrum sp = d_spectrum(static_cast<unsigned>(i), st.z.back(), st.precision,
                            st.precision * (Int(1) << max_escalations));
  step.precision_used = sp.precision_used;
  step.spectrum_dimension = sp.report.dimension;
  step.spectrum_values = sp.report.values;
  step.tau = sp.report.values.back();
  step.g_product_value = g_product;
  step.lower_bound = i == 1 ? step.tau
                            : std::max(Rat(st.steps.back().lambda + g_product), Rat(step.tau + g_product));
  // denominators: the value semigroup of K[x,y] up to the bound + 2, this
  // step's spectrum, and everything chosen so far
  long h = two_adic_exponent(step.lower_bound);
  for (std::size_t j = 0; dyadic_beta(j) < step.lower_bound + 2; ++j) h = std::max(h, static_cast<long>(j));
  for (const auto& v : sp.report.values) h = std::max(h, two_adic_exponent(v));
  for (const auto& v : seen) h = std::max(h, two_adic_exponent(v));
  step.denominator_exponent = h;
  step.lambda = step.lower_bound + 1 + pow2(-(h + 1));
  step.alpha = step.lambda - g_product;
  step.certificate_kind = i == 1 ? "certified" : "denominator-heuristic";
  step.realized = realize_value(step.alpha);
  return step;
}

Rat choose_lambda(const TranscendState& state, std::size_t i) {
  if (i != state.steps.size() + 1)
    throw domain_error("choose_lambda(" + std::to_string(i) + ") needs a state with " + std::to_string(i - 1) + " steps");
  return next_step(state).lambda;
}

TranscendState transcend_build(std::size_t depth, const Rat& precision) {
  if (depth < 1) throw domain_error("transcend depth must be at least 1");
  if (sgn(precision) <= 0) throw domain_error("precision must be positive");
  TranscendState st;
  st.depth = depth;
  st.precision = precision;
  st.z.push_back(StdElem());
  for (std::size_t i = 1; i <= depth; ++i) {
    TranscendStep step = next_step(st);
    st.denominator_horizon = std::max(st.denominator_horizon, step.denominator_exponent + 1);
    st.z.push_back(st.z.back() + step.realized.quotient());
    st.steps.push_back(std::move(step));
  }
  return st;
}

json TranscendState::to_json() const {
  json steps_json = json::array();
  for (const auto& s : steps)
    steps_json.push_back(json{{"i", s.i},
                              {"tau", rat_json(s.tau)},
                              {"lambda", rat_json(s.lambda)},
                              {"alpha", rat_json(s.alpha)},
                              {"f", s.realized.f_string()},
                              {"g", s.realized.g_string()},
                              {"g_product_value", rat_json(s.g_product_value)},
                              {"lower_bound", rat_json(s.lower_bound)},
                              {"spectrum_dimension", s.spectrum_dimension},
                              {"spectrum_values", rats_json(s.spectrum_values)},
                              {"denominator_exponent", s.denominator_exponent},
                              {"certificate_kind", s.certificate_kind},
                              {"precision_used", rat_json(s.precision_used)}});
  json zs = json::array();
  for (const auto& e : z) zs.push_back(e.to_string());
  return json{{"depth", depth},
              {"precision", rat_json(precision)},
              {"steps", steps_json},
              {"z", zs},
              {"denominator_horizon", denominator_horizon}};
}

bool TranscendCheck::ok() const {
  return alpha_above_tau && lambda_increasing && lambda_inequality && alpha_realized && tau_increasing && differences &&
         lambda_outside_enumerated;
}

json TranscendCheck::to_json() const {
  return json{{"alpha_above_tau", alpha_above_tau},
              {"lambda_increasing", lambda_increasing},
              {"lambda_inequality", lambda_inequality},
              {"alpha_realized", alpha_realized},
              {"tau_increasing", tau_increasing},
              {"differences", differences},
              {"lambda_outside_enumerated", lambda_outside_enumerated},
              {"ok", ok()}};
}

TranscendCheck transcend_check(const TranscendState& st) {
  TranscendCheck c;
  Rat g_product = 0;
  for (std::size_t k = 0; k < st.steps.size(); ++k) {
    const auto& s = st.steps[k];
    c.alpha_above_tau = c.alpha_above_tau && s.alpha > s.tau;
    if (k > 0) {
      const auto& p = st.steps[k - 1];
      c.lambda_increasing = c.lambda_increasing && s.lambda > p.lambda;
      c.lambda_inequality = c.lambda_inequality && s.lambda > p.lambda + g_product && s.lambda > s.tau + g_product;
      c.tau_increasing = c.tau_increasing && s.tau > p.tau;
    }
    c.alpha_realized = c.alpha_realized && s.realized.quotient().value() == s.alpha && s.lambda == s.alpha + g_product &&
                       s.g_product_value == g_product;
    // lambda misses the semigroup generated by the enumerated values: every
    // generator has denominator at most 2^h, lambda has 2^(h+1)
    c.lambda_outside_enumerated = c.lambda_outside_enumerated && two_adic_exponent(s.lambda) == s.denominator_exponent + 1;
    g_product += s.realized.x_denominator;
  }
  for (std::size_t i = 0; i < st.z.size(); ++i)
    for (std::size_t j = i + 1; j < st.z.size(); ++j) {
      StdElem d = st.z[j] - st.z[i];
      c.differences = c.differences && !d.known_zero() && d.value() == st.steps[i].alpha;
    }
  return c;
}

json LeadingTermReport::to_json() const {
  return json{{"n", n}, {"trials", trials}, {"nonzero", nonzero}, {"distinct_terms", distinct_terms}};
}

LeadingTermReport leading_term_spotcheck(const TranscendState& st, unsigned n, std::size_t trials, std::uint64_t seed) {
  if (n < 1 || n > st.steps.size()) throw domain_error("leading_term_spotcheck needs 1 <= n <= depth");
  LeadingTermReport rep;
  rep.n = n;
  rep.trials = trials;
  const StdElem& w = st.z[n - 1];
  const StdElem h = st.z[n] - st.z[n - 1];
  const auto basis = d_basis(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<std::size_t> count(1, basis.size());
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  // powers of w and h, shared across trials
  std::vector<StdElem> wp{StdElem::constant(1)}, hp{StdElem::constant(1)};
  for (unsigned k = 1; k <= n; ++k) {
    wp.push_back(wp.back() * w);
    hp.push_back(hp.back() * h);
  }
  const StdElem zn = st.z[n];
  std::vector<StdElem> zp{StdElem::constant(1)};
  for (unsigned k = 1; k <= n; ++k) zp.push_back(zp.back() * zn);
  for (std::size_t t = 0; t < trials; ++t) {
    std::map<std::size_t, int> f;
    while (f.empty()) {
      std::size_t m = count(rng);
      for (std::size_t k = 0; k < m; ++k) {
        int c = coeff(rng);
        if (c) f[pick(rng)] = c;
      }
    }
    StdElem value;
    for (const auto& [idx, c] : f) {
      const auto& m = basis[idx];
      value = value + Rat(c) * (StdElem::x_power(m.a) * StdElem::key(1).pow(m.b) * zp[m.c]);
    }
    if (!value.known_zero()) ++rep.nonzero;
    // f(w + h) = sum h^i d_i(w), d_i = (1/i!) d^i f / dz^i
    std::set<Rat> vals;
    std::size_t nonzero_terms = 0;
    for (unsigned i = 0; i <= n; ++i) {
      StdElem d;
      for (const auto& [idx, c] : f) {
        const auto& m = basis[idx];
        if (m.c < i) continue;
        d = d + Rat(c * binomial(m.c, i)) * (StdElem::x_power(m.a) * StdElem::key(1).pow(m.b) * wp[m.c - i]);
      }
      if (d.known_zero()) continue;
      ++nonzero_terms;
      vals.insert((hp[i] * d).value());
    }
    if (vals.size() == nonzero_terms) ++rep.distinct_terms;
  }
  return rep;
}

}  // namespace valsg
