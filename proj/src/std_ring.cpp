#include "valsg/std_ring.hpp"

#include <vector>

#include "valsg/skp.hpp"

namespace valsg {

namespace {

constexpr std::size_t max_key_index = 62;

Rat mask_value(std::uint64_t mask) {
  Rat v = 0;
  for (std::size_t j = 1; j < 64; ++j)
    if ((mask >> j) & 1) v += dyadic_beta(j);
  return v;
}

// out += c * m * P_j, dropping terms of value >= prec
void mul_key(const StdMono& m, const Rat& mv, std::size_t j, const Rat& c, std::map<Rat, StdElem::Term>& out,
             const std::optional<Rat>& prec) {
  if (prec && !(mv + dyadic_beta(j) < *prec)) return;
  if (j == 0) {
    StdMono r{m.l0 + 1, m.mask};
    Rat v = mv + 1;
    auto [it, fresh] = out.try_emplace(v, StdElem::Term{r, c});
    if (!fresh) {
      it->second.coeff += c;
      if (sgn(it->second.coeff) == 0) out.erase(it);
    }
    return;
  }
  if (j > max_key_index) throw domain_error("standard monomial needs P_" + std::to_string(j) + ", beyond the supported range");
  const std::uint64_t bit = std::uint64_t(1) << j;
  if (!(m.mask & bit)) {
    StdMono r{m.l0, m.mask | bit};
    Rat v = mv + dyadic_beta(j);
    auto [it, fresh] = out.try_emplace(v, StdElem::Term{r, c});
    if (!fresh) {
      it->second.coeff += c;
      if (sgn(it->second.coeff) == 0) out.erase(it);
    }
    return;
  }
  // m already holds P_j: m P_j = m' P_j^2 = m' P_{j+1} + m' x^(2^(j+1)) P_{j-1}
  StdMono rest{m.l0, m.mask & ~bit};
  Rat rv = mv - dyadic_beta(j);
  mul_key(rest, rv, j + 1, c, out, prec);
  const long shift = 1L << (j + 1);
  StdMono shifted{rest.l0 + shift, rest.mask};
  mul_key(shifted, Rat(rv + shift), j - 1, c, out, prec);
}

}  // namespace

Rat std_mono_value(const StdMono& m) { return Rat(m.l0 + mask_value(m.mask)); }

std::string std_mono_string(const StdMono& m) {
  std::string s;
  if (m.l0 != 0) s = m.l0 == 1 ? "x" : "x^" + std::to_string(m.l0);
  for (std::size_t j = 1; j < 64; ++j)
    if ((m.mask >> j) & 1) s += (s.empty() ? "" : "*") + std::string("P_") + std::to_string(j);
  return s.empty() ? "1" : s;
}

void StdElem::add(const StdMono& m, const Rat& c) {
  if (sgn(c) == 0) return;
  Rat v = std_mono_value(m);
  if (precision_ && !(v < *precision_)) return;
  auto [it, fresh] = terms_.try_emplace(v, Term{m, c});
  if (!fresh) {
    it->second.coeff += c;
    if (sgn(it->second.coeff) == 0) terms_.erase(it);
  }
}

StdElem StdElem::monomial(const StdMono& m, const Rat& c) {
  StdElem e;
  e.add(m, c);
  return e;
}

StdElem StdElem::key(std::size_t j) {
  if (j == 0) return x_power(1);
  if (j > max_key_index) throw domain_error("key index beyond the supported range");
  return monomial(StdMono{0, std::uint64_t(1) << j});
}

StdElem StdElem::from_poly(const MPoly& f) {
  StdElem e;
  for (const auto& t : standard_expansion(f).terms) {
    StdMono m{static_cast<long>(t.exps[0]), 0};
    for (std::size_t j = 1; j < t.exps.size(); ++j)
      if (t.exps[j]) m.mask |= std::uint64_t(1) << j;
    e.add(m, t.coeff);
  }
  return e;
}

Rat StdElem::value() const {
  if (!terms_.empty()) return terms_.begin()->first;
  if (precision_) throw precision_error("no term known below precision " + valsg::to_string(*precision_));
  throw domain_error("the valuation of zero is undefined");
}

StdElem StdElem::truncated(const Rat& p) const {
  StdElem r;
  r.precision_ = precision_ && *precision_ < p ? *precision_ : p;
  for (const auto& [v, t] : terms_)
    if (v < *r.precision_) r.terms_.emplace(v, t);
  return r;
}

StdElem operator+(const StdElem& a, const StdElem& b) {
  StdElem r;
  if (a.precision_ && b.precision_)
    r.precision_ = std::min(*a.precision_, *b.precision_);
  else
    r.precision_ = a.precision_ ? a.precision_ : b.precision_;
  for (const auto& [v, t] : a.terms_) r.add(t.mono, t.coeff);
  for (const auto& [v, t] : b.terms_) r.add(t.mono, t.coeff);
  return r;
}

StdElem operator*(const Rat& s, const StdElem& a) {
  StdElem r;
  if (sgn(s) == 0) return r;
  r = a;
  for (auto& [v, t] : r.terms_) t.coeff *= s;
  return r;
}

StdElem operator-(const StdElem& a, const StdElem& b) { return a + Rat(-1) * b; }

StdElem operator*(const StdElem& a, const StdElem& b) {
  StdElem r;
  if ((a.exact() && a.known_zero()) || (b.exact() && b.known_zero())) return r;
  auto lower = [](const StdElem& e) { return e.terms_.empty() ? *e.precision_ : e.terms_.begin()->first; };
  if (b.precision_) r.precision_ = lower(a) + *b.precision_;
  if (a.precision_) {
    Rat q = lower(b) + *a.precision_;
    r.precision_ = r.precision_ ? std::min(*r.precision_, q) : q;
  }
  for (const auto& [va, ta] : a.terms_)
    for (const auto& [vb, tb] : b.terms_) {
      // a-term times the x power of the b-term, then one key at a time
      std::map<Rat, StdElem::Term> cur;
      StdMono start{ta.mono.l0 + tb.mono.l0, ta.mono.mask};
      cur.emplace(Rat(va + tb.mono.l0), StdElem::Term{start, Rat(ta.coeff * tb.coeff)});
      for (std::size_t j = 1; j < 64; ++j) {
        if (!((tb.mono.mask >> j) & 1)) continue;
        std::map<Rat, StdElem::Term> next;
        for (const auto& [v, t] : cur) mul_key(t.mono, v, j, t.coeff, next, r.precision_);
        cur = std::move(next);
      }
      for (const auto& [v, t] : cur) r.add(t.mono, t.coeff);
    }
  return r;
}

StdElem StdElem::pow(unsigned k) const {
  StdElem r = constant(Rat(1));
  StdElem base = *this;
  while (k) {
    if (k & 1) r = r * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool operator==(const StdElem& a, const StdElem& b) {
  if (a.precision_ != b.precision_ || a.terms_.size() != b.terms_.size()) return false;
  for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second.coeff != ib->second.coeff) return false;
  return true;
}

MPoly StdElem::to_poly() const {
  if (!exact()) throw precision_error("truncated element has no polynomial form");
  std::size_t top = 1;
  for (const auto& [v, t] : terms_) {
    if (t.mono.l0 < 0) throw domain_error("negative power of x has no polynomial form");
    for (std::size_t j = 1; j < 64; ++j)
      if ((t.mono.mask >> j) & 1) top = std::max(top, j + 1);
  }
  const KeyPolySeq& kps = shared_key_polys(top);
  const std::vector<std::string> xy{"x", "y"};
  MPoly sum(xy);
  for (const auto& [v, t] : terms_) {
    MPoly m = MPoly::monomial(xy, {static_cast<std::uint32_t>(t.mono.l0), 0}, t.coeff);
    for (std::size_t j = 1; j < 64; ++j)
      if ((t.mono.mask >> j) & 1) m = m * kps.poly(j);
    sum += m;
  }
  return sum;
}

HahnSeries<Rat, Rat> StdElem::to_series() const {
  std::vector<HahnSeries<Rat, Rat>::Term> t;
  for (const auto& [v, term] : terms_) t.push_back({v, term.coeff});
  return HahnSeries<Rat, Rat>(std::move(t), precision_);
}

std::string StdElem::to_string() const {
  if (terms_.empty()) return precision_ ? "O(" + valsg::to_string(*precision_) + ")" : "0";
  std::string s;
  for (const auto& [v, t] : terms_) {
    std::string c = valsg::to_string(t.coeff);
    if (!s.empty()) s += sgn(t.coeff) < 0 ? " - " : " + ";
    else if (sgn(t.coeff) < 0) s += "-";
    if (sgn(t.coeff) < 0) c = c.substr(1);
    std::string m = std_mono_string(t.mono);
    s += (c == "1") ? m : (m == "1" ? c : c + "*" + m);
  }
  if (precision_) s += " + O(" + valsg::to_string(*precision_) + ")";
  return s;
}

}  // namespace valsg
