#pragma once

// Truncated generalized power series  sum c_e t^e  with well-ordered support.
//
// A series stores finitely many known terms with strictly increasing
// exponents and a precision p: every term with exponent >= p is unknown.
// An empty precision means the series is exact (a finite sum).
// Exponents live in any totally ordered group type E (GroupElem, Rat) and
// coefficients in any field type C satisfying the coeff_ops contract.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valsg/group.hpp"
#include "valsg/poly.hpp"

namespace valsg {

template <class C>
struct coeff_ops;

template <>
struct coeff_ops<Rat> {
  static bool is_zero(const Rat& c) { return ::sgn(c) == 0; }
  static Rat from_rat(const Rat& r, const Rat&) { return r; }
  static std::string str(const Rat& c) { return to_string(c); }
};

template <>
struct coeff_ops<RatFunc> {
  static bool is_zero(const RatFunc& c) { return c.is_zero(); }
  // `like` supplies the variable list
  static RatFunc from_rat(const Rat& r, const RatFunc& like) { return RatFunc::constant(like.num().vars(), r); }
  static std::string str(const RatFunc& c) { return c.to_string(); }
};

enum class ValuationKind { finite, at_least, infinite };

template <class E>
struct SeriesValuation {
  ValuationKind kind = ValuationKind::infinite;
  E value{};  // the valuation (finite) or the precision bound (at_least)
  bool finite() const { return kind == ValuationKind::finite; }
};

template <class E, class C>
class HahnSeries {
public:
  using Term = std::pair<E, C>;

  HahnSeries() = default;

  // Terms may come in any order; zero coefficients and terms at or beyond
  // the precision are dropped, equal exponents are summed.
  explicit HahnSeries(std::vector<Term> terms, std::optional<E> precision = std::nullopt)
      : precision_(std::move(precision)) {
    std::map<E, C> m;
    for (auto& [e, c] : terms) accumulate(m, e, c);
    assign(m);
  }

  static HahnSeries monomial(const E& e, const C& c) { return HahnSeries({{e, c}}); }
  static HahnSeries zero_to(const E& precision) { return HahnSeries({}, precision); }

  const std::vector<Term>& terms() const { return terms_; }
  const std::optional<E>& precision() const { return precision_; }
  bool exact() const { return !precision_.has_value(); }
  bool known_zero() const { return terms_.empty(); }

  SeriesValuation<E> valuation() const {
    if (!terms_.empty()) return {ValuationKind::finite, terms_.front().first};
    if (precision_) return {ValuationKind::at_least, *precision_};
    return {};
  }

  const C& leading_coeff() const {
    if (terms_.empty()) throw precision_error("series has no known term");
    return terms_.front().second;
  }

  // Lower bound for the valuation: leading exponent, or the precision when
  // nothing is known. Only meaningful for non-exact-zero series.
  E valuation_lower_bound() const {
    if (!terms_.empty()) return terms_.front().first;
    if (precision_) return *precision_;
    throw domain_error("exact zero series has infinite valuation");
  }

  HahnSeries truncated(const E& p) const {
    HahnSeries r = *this;
    r.precision_ = precision_ ? std::min(*precision_, p) : p;
    r.drop_beyond_precision();
    return r;
  }

  friend HahnSeries operator+(const HahnSeries& a, const HahnSeries& b) {
    std::map<E, C> m;
    for (const auto& [e, c] : a.terms_) accumulate(m, e, c);
    for (const auto& [e, c] : b.terms_) accumulate(m, e, c);
    HahnSeries r;
    r.precision_ = min_precision(a.precision_, b.precision_);
    r.assign(m);
    return r;
  }

  HahnSeries operator-() const {
    HahnSeries r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  friend HahnSeries operator-(const HahnSeries& a, const HahnSeries& b) { return a + (-b); }

  friend HahnSeries operator*(const C& s, const HahnSeries& a) {
    if (coeff_ops<C>::is_zero(s)) {
      HahnSeries r;
      r.precision_ = std::nullopt;
      return r;
    }
    HahnSeries r = a;
    for (auto& [e, c] : r.terms_) c = s * c;
    return r;
  }

  friend HahnSeries operator*(const HahnSeries& a, const HahnSeries& b) {
    HahnSeries r;
    bool a_zero = a.exact() && a.known_zero();
    bool b_zero = b.exact() && b.known_zero();
    if (a_zero || b_zero) return r;
    // prec(ab) = min(v(a) + prec b, v(b) + prec a)
    std::optional<E> p;
    if (b.precision_) p = a.valuation_lower_bound() + *b.precision_;
    if (a.precision_) {
      E q = b.valuation_lower_bound() + *a.precision_;
      p = p ? std::min(*p, q) : q;
    }
    r.precision_ = p;
    std::map<E, C> m;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        E e = ea + eb;
        if (p && !(e < *p)) continue;
        accumulate(m, e, ca * cb);
      }
    r.assign(m);
    return r;
  }

  HahnSeries pow(unsigned k, const C& one) const {
    HahnSeries result = monomial(zero_exponent(), one);
    for (unsigned i = 0; i < k; ++i) result = result * *this;
    return result;
  }

  // The exponent group's zero, taken from any known exponent or the precision.
  E zero_exponent() const {
    if (!terms_.empty()) return terms_.front().first - terms_.front().first;
    if (precision_) return *precision_ - *precision_;
    throw domain_error("cannot infer the exponent group of an exact zero series");
  }

  friend bool operator==(const HahnSeries& a, const HahnSeries& b) {
    if (a.precision_.has_value() != b.precision_.has_value()) return false;
    if (a.precision_ && !(*a.precision_ == *b.precision_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].first == b.terms_[i].first)) return false;
      if (!(a.terms_[i].second == b.terms_[i].second)) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + coeff_ops<C>::str(c) + ")*t^" + exponent_str(e);
    }
    if (s.empty()) s = "0";
    if (precision_) s += " + O(t^" + exponent_str(*precision_) + ")";
    return s;
  }

private:
  static std::string exponent_str(const E& e) {
    using valsg::to_string;
    return to_string(e);
  }

  static void accumulate(std::map<E, C>& m, const E& e, const C& c) {
    if (coeff_ops<C>::is_zero(c)) return;
    auto it = m.find(e);
    if (it == m.end()) {
      m.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (coeff_ops<C>::is_zero(it->second)) m.erase(it);
    }
  }

  static std::optional<E> min_precision(const std::optional<E>& a, const std::optional<E>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
  }

  void assign(std::map<E, C>& m) {
    terms_.clear();
    for (auto& [e, c] : m) {
      if (precision_ && !(e < *precision_)) break;
      terms_.emplace_back(e, std::move(c));
    }
  }

  void drop_beyond_precision() {
    if (!precision_) return;
    auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return !(t.first < *precision_); });
    terms_.erase(it, terms_.end());
  }

  std::vector<Term> terms_;
  std::optional<E> precision_;
};

// t-adic valuation; reports "at least precision" when nothing is known.
template <class E, class C>
SeriesValuation<E> t_valuation(const HahnSeries<E, C>& f) {
  return f.valuation();
}

// f(assignment) with every variable of f mapped to a series. `one` is the
// coefficient 1 (it fixes the coefficient field instance, e.g. the variable
// list of a RatFunc field). Throws precision_error when the result has no
// known term, naming the term of f that limited the precision.
template <class E, class C>
HahnSeries<E, C> subst_series(const MPoly& f, const std::map<std::string, HahnSeries<E, C>>& assignment,
                              const C& one, const E& exponent_zero) {
  using S = HahnSeries<E, C>;
  std::vector<const S*> images;
  for (const auto& v : f.vars()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw structural_error("no series assigned to variable '" + v + "'");
    images.push_back(&it->second);
  }
  std::vector<std::vector<S>> powers(images.size());
  auto power_of = [&](std::size_t i, std::uint32_t k) -> const S& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(S::monomial(exponent_zero, one));
    while (cache.size() <= k) cache.push_back(cache.back() * *images[i]);
    return cache[k];
  };
  S result;
  std::optional<E> limiting_precision;
  std::string limiting_term;
  for (const auto& [e, c] : f.terms()) {
    S t = S::monomial(exponent_zero, coeff_ops<C>::from_rat(c, one));
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t = t * power_of(i, e[i]);
    if (t.precision() && (!limiting_precision || *t.precision() < *limiting_precision)) {
      limiting_precision = t.precision();
      limiting_term = MPoly::monomial(f.vars(), e, c).to_string();
    }
    result = result + t;
  }
  if (result.known_zero() && !result.exact())
    throw precision_error("substitution has no known term below precision " + to_string(*result.precision()) +
                          "; limiting term " + limiting_term);
  return result;
}

template <class E, class C>
struct SpectrumReport {
  std::size_t dimension = 0;
  std::vector<E> values;                     // strictly increasing
  std::vector<HahnSeries<E, C>> echelon_basis;  // leading exponents = values
};

// Attained valuations of the span of `generators`, by elimination on leading
// exponents. Exact zeros are dropped; a row whose known part cancels
// completely while still truncated raises precision_error.
template <class E, class C>
SpectrumReport<E, C> value_spectrum(const std::vector<HahnSeries<E, C>>& generators) {
  std::map<E, HahnSeries<E, C>> pivots;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    HahnSeries<E, C> row = generators[i];
    std::optional<E> last_pivot;
    for (;;) {
      if (row.known_zero()) {
        if (row.exact()) break;
        throw precision_error("precision exhausted reducing generator " + std::to_string(i) +
                              (last_pivot ? " against the pivot at exponent " + to_string(*last_pivot) : std::string()));
      }
      const E& lead = row.terms().front().first;
      auto it = pivots.find(lead);
      if (it == pivots.end()) {
        E key = lead;
        pivots.emplace(std::move(key), std::move(row));
        break;
      }
      C factor = row.leading_coeff() / it->second.leading_coeff();
      last_pivot = lead;
      row = row - factor * it->second;
    }
  }
  SpectrumReport<E, C> rep;
  rep.dimension = pivots.size();
  for (auto& [e, s] : pivots) {
    rep.values.push_back(e);
    rep.echelon_basis.push_back(std::move(s));
  }
  return rep;
}

}  // namespace valsg
