#include "valsg/poly.hpp"

#include <algorithm>
#include <numeric>

namespace valsg {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MPoly MPoly::constant(const std::vector<std::string>& vars, const Rat& c) {
  MPoly p(vars);
  p.add_term(Exponents(vars.size(), 0), c);
  return p;
}

MPoly MPoly::variable(const std::vector<std::string>& vars, const std::string& name) {
  MPoly p(vars);
  Exponents e(vars.size(), 0);
  e[p.var_index(name)] = 1;
  p.add_term(e, Rat(1));
  return p;
}

MPoly MPoly::monomial(const std::vector<std::string>& vars, const Exponents& e, const Rat& c) {
  if (e.size() != vars.size()) throw structural_error("exponent vector length does not match variables");
  MPoly p(vars);
  p.add_term(e, c);
  return p;
}

std::size_t MPoly::var_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw structural_error("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

void MPoly::add_term(const Exponents& e, const Rat& c) {
  if (e.size() != vars_.size()) throw structural_error("exponent vector length does not match variables");
  if (::sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (::sgn(it->second) == 0) terms_.erase(it);
  }
}

Rat MPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

std::uint32_t MPoly::total_degree() const {
  if (terms_.empty()) return 0;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

std::uint32_t MPoly::degree(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::uint32_t MPoly::min_degree(std::size_t var) const {
  if (terms_.empty()) return 0;
  std::uint32_t d = UINT32_MAX;
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

namespace {

void check_vars(const MPoly& a, const MPoly& b) {
  if (a.vars() != b.vars()) throw structural_error("polynomials over different variable lists");
}

}  // namespace

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  check_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (vars_.empty() && terms_.empty()) vars_ = o.vars_;
  check_vars(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
  return *this;
}

MPoly operator*(const Rat& c, const MPoly& a) {
  MPoly r(a.vars());
  if (::sgn(c) == 0) return r;
  for (const auto& [e, k] : a.terms()) r.terms_.emplace_hint(r.terms_.end(), e, Rat(c * k));
  return r;
}

MPoly MPoly::mul(const MPoly& a, const MPoly& b, std::uint32_t degree_cap) {
  check_vars(a, b);
  MPoly r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  if (static_cast<std::uint64_t>(a.total_degree()) + b.total_degree() > degree_cap)
    throw domain_error("product exceeds degree cap " + std::to_string(degree_cap));
  Exponents e(a.nvars());
  Rat prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = r.terms_.try_emplace(e, prod);
      if (!inserted) {
        it->second += prod;
        if (::sgn(it->second) == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

MPoly MPoly::pow(unsigned k, std::uint32_t degree_cap) const {
  if (static_cast<std::uint64_t>(total_degree()) * k > degree_cap)
    throw domain_error("power exceeds degree cap " + std::to_string(degree_cap));
  MPoly result = constant(vars_, Rat(1));
  MPoly base = *this;
  while (k) {
    if (k & 1u) result = mul(result, base, degree_cap);
    k >>= 1u;
    if (k) base = mul(base, base, degree_cap);
  }
  return result;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    r.add_term(f, Rat(c * e[var]));
  }
  return r;
}

MPoly MPoly::subst(const std::map<std::string, MPoly>& assignment, const std::vector<std::string>& target_vars,
                   std::uint32_t degree_cap) const {
  std::vector<MPoly> images;
  images.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = assignment.find(v);
    if (it != assignment.end()) {
      if (it->second.vars() != target_vars) throw structural_error("substituted polynomial for '" + v + "' has wrong variables");
      images.push_back(it->second);
    } else {
      images.push_back(variable(target_vars, v));
    }
  }
  // cache powers per variable
  std::vector<std::vector<MPoly>> powers(vars_.size());
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target_vars, Rat(1)));
    while (cache.size() <= k) cache.push_back(mul(cache.back(), images[i], degree_cap));
    return cache[k];
  };
  MPoly result(target_vars);
  for (const auto& [e, c] : terms_) {
    MPoly t = constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = mul(t, power_of(i, e[i]), degree_cap);
    result += t;
  }
  return result;
}

MPoly MPoly::with_vars(const std::vector<std::string>& target_vars) const {
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(target_vars.begin(), target_vars.end(), vars_[i]);
    map[i] = it == target_vars.end() ? SIZE_MAX : static_cast<std::size_t>(it - target_vars.begin());
  }
  MPoly r(target_vars);
  for (const auto& [e, c] : terms_) {
    Exponents f(target_vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (map[i] == SIZE_MAX) throw structural_error("variable '" + vars_[i] + "' missing from target variable list");
      f[map[i]] = e[i];
    }
    r.add_term(f, c);
  }
  return r;
}

Rat MPoly::eval(const std::vector<Rat>& point) const {
  if (point.size() != vars_.size()) throw structural_error("evaluation point has wrong dimension");
  Rat s = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      Rat p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
      t *= p;
    }
    s += t;
  }
  return s;
}

std::vector<MPoly> MPoly::coefficients_in(std::size_t var) const {
  std::vector<MPoly> out(degree(var) + 1, MPoly(vars_));
  if (terms_.empty()) return {MPoly(vars_)};
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    out[e[var]].add_term(f, c);
  }
  return out;
}

Rat MPoly::leading_coeff() const {
  if (terms_.empty()) throw domain_error("zero polynomial has no leading coefficient");
  return terms_.begin()->second;
}

const Exponents& MPoly::leading_exponents() const {
  if (terms_.empty()) throw domain_error("zero polynomial has no leading term");
  return terms_.begin()->first;
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  Rat inv = 1 / leading_coeff();
  return inv * *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.is_zero() && b.is_zero()) return true;
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = abs(c);
    bool neg = ::sgn(c) < 0;
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    bool has_var = std::any_of(e.begin(), e.end(), [](auto k) { return k != 0; });
    bool wrote = false;
    if (a != 1 || !has_var) {
      s += valsg::to_string(a);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (wrote) s += "*";
      s += vars_[i];
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
      wrote = true;
    }
  }
  return s;
}

json MPoly::to_json() const {
  json t = json::array();
  for (const auto& [e, c] : terms_) t.push_back(json::array({json(e), rat_json(c)}));
  return json{{"vars", vars_}, {"terms", t}};
}

std::string to_string(const MPoly& p) { return p.to_string(); }

XPowerQuotient x_power_divide(const MPoly& f, std::uint32_t i, const std::string& x, const std::string& z) {
  std::size_t xi = f.var_index(x);
  std::size_t zi = f.var_index(z);
  MPoly q(f.vars());
  for (const auto& [e, c] : f.terms()) {
    if (e[xi] < i) {
      MPoly offending = MPoly::monomial(f.vars(), e, c);
      throw domain_error("term " + offending.to_string() + " is not divisible by " + x + "^" + std::to_string(i));
    }
    Exponents g = e;
    g[xi] -= i;
    q.add_term(g, c);
  }
  std::uint32_t w = 0;
  for (const auto& [e, c] : q.terms())
    if (e[zi] > e[xi]) w = std::max(w, e[zi] - e[xi]);
  std::uint32_t zd = q.degree(zi);
  return {std::move(q), w, zd};
}

std::pair<MPoly, MPoly> divide_monic(const MPoly& p, const MPoly& divisor, std::size_t var) {
  auto dcoef = divisor.coefficients_in(var);
  std::uint32_t dd = static_cast<std::uint32_t>(dcoef.size() - 1);
  const MPoly& lead = dcoef.back();
  if (!(lead.size() == 1 && lead.total_degree() == 0 && lead.leading_coeff() == 1))
    throw domain_error("divisor is not monic in the division variable");
  MPoly q(p.vars()), r = p;
  while (!r.is_zero()) {
    std::uint32_t rd = r.degree(var);
    if (rd < dd) break;
    // top coefficient of r in var
    MPoly top(p.vars());
    for (const auto& [e, c] : r.terms())
      if (e[var] == rd) {
        Exponents f = e;
        f[var] = rd - dd;
        top.add_term(f, c);
      }
    q += top;
    r -= MPoly::mul(top, divisor, UINT32_MAX);
  }
  return {std::move(q), std::move(r)};
}

RatFunc::RatFunc(MPoly num) : num_(std::move(num)), den_(MPoly::constant(num_.vars(), Rat(1))) {}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw domain_error("rational function with zero denominator");
  if (num_.vars() != den_.vars()) {
    if (num_.is_zero())
      num_ = MPoly(den_.vars());
    else
      throw structural_error("numerator and denominator over different variables");
  }
  normalize();
}

RatFunc RatFunc::constant(const std::vector<std::string>& vars, const Rat& c) {
  return RatFunc(MPoly::constant(vars, c));
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MPoly::constant(den_.vars(), Rat(1));
    return;
  }
  // cancel the common monomial factor, then make den monic
  Exponents g(num_.nvars(), UINT32_MAX);
  for (const auto* p : {&num_, &den_})
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = std::min(g[i], p->min_degree(i));
  if (std::any_of(g.begin(), g.end(), [](auto k) { return k != 0; })) {
    for (auto* p : {&num_, &den_}) {
      MPoly q(p->vars());
      for (const auto& [e, c] : p->terms()) {
        Exponents f = e;
        for (std::size_t i = 0; i < f.size(); ++i) f[i] -= g[i];
        q.add_term(f, c);
      }
      *p = std::move(q);
    }
  }
  Rat lc = den_.leading_coeff();
  if (lc != 1) {
    Rat inv = 1 / lc;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) { return RatFunc(a.num_ * b.num_, a.den_ * b.den_); }

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw domain_error("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

std::string RatFunc::to_string() const {
  if (den_.size() == 1 && den_.total_degree() == 0) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string to_string(const RatFunc& r) { return r.to_string(); }

}  // namespace valsg
