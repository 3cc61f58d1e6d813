#include "valsg/group.hpp"

#include <sstream>

namespace valsg {

Rat make_rat(long num, long den) {
  if (den == 0) throw domain_error("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational literal", 0);
  std::size_t i = 0;
  if (text[0] == '-' || text[0] == '+') ++i;
  bool slash = false;
  std::size_t digits_before = 0, digits_after = 0;
  for (std::size_t k = i; k < text.size(); ++k) {
    char c = text[k];
    if (c == '/') {
      if (slash) throw parse_error("second '/' in rational literal", k);
      slash = true;
    } else if (c >= '0' && c <= '9') {
      (slash ? digits_after : digits_before)++;
    } else {
      throw parse_error(std::string("unexpected character '") + c + "' in rational literal", k);
    }
  }
  if (digits_before == 0 || (slash && digits_after == 0))
    throw parse_error("malformed rational literal '" + text + "'", 0);
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rat r;
  if (r.set_str(body, 10) != 0) throw parse_error("malformed rational literal '" + text + "'", 0);
  if (::sgn(r.get_den()) == 0) throw parse_error("zero denominator in '" + text + "'", 0);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

Rat pow2(long e) {
  Int p = 1;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), k);
  return e >= 0 ? Rat(p) : Rat(Int(1), p);
}

int sign(const Rat& r) { return ::sgn(r); }

int QuadRat::sign() const {
  int sa = ::sgn(a), sb = ::sgn(b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // opposite signs: compare a^2 with 2 b^2
  int c = ::cmp(Rat(a * a), Rat(2 * b * b));
  if (c == 0) return 0;  // unreachable for rationals, sqrt(2) is irrational
  return c > 0 ? sa : sb;
}

std::string to_string(const QuadRat& q) {
  std::ostringstream os;
  os << to_string(q.a) << (::sgn(q.b) < 0 ? "-" : "+") << to_string(Rat(abs(q.b))) << "*sqrt2";
  return os.str();
}

ScalarKind kind_of(const Scalar& s) {
  return std::holds_alternative<Rat>(s) ? ScalarKind::rational : ScalarKind::quadratic;
}

std::string to_string(const Scalar& s) {
  return std::visit([](const auto& v) { return to_string(v); }, s);
}

GroupElem::GroupElem(std::initializer_list<Rat> coords) {
  coords_.reserve(coords.size());
  for (const auto& c : coords) coords_.emplace_back(c);
}

GroupElem GroupElem::zero(const std::vector<ScalarKind>& signature) {
  std::vector<Scalar> c;
  for (auto k : signature) {
    if (k == ScalarKind::rational)
      c.emplace_back(Rat(0));
    else
      c.emplace_back(QuadRat());
  }
  return GroupElem(std::move(c));
}

std::vector<ScalarKind> GroupElem::signature() const {
  std::vector<ScalarKind> s;
  s.reserve(coords_.size());
  for (const auto& c : coords_) s.push_back(kind_of(c));
  return s;
}

const Rat& GroupElem::as_rat(std::size_t i) const {
  if (i >= coords_.size()) throw structural_error("coordinate index out of range");
  if (const Rat* r = std::get_if<Rat>(&coords_[i])) return *r;
  throw structural_error("coordinate is not rational");
}

namespace {

int scalar_sign(const Scalar& s) {
  if (const Rat* r = std::get_if<Rat>(&s)) return ::sgn(*r);
  return std::get<QuadRat>(s).sign();
}

void check_signature(const GroupElem& x, const GroupElem& y) {
  if (x.rank() != y.rank()) throw structural_error("group elements of different rank");
  for (std::size_t i = 0; i < x.rank(); ++i)
    if (kind_of(x[i]) != kind_of(y[i])) throw structural_error("group signature mismatch");
}

}  // namespace

bool GroupElem::is_zero() const {
  for (const auto& c : coords_)
    if (scalar_sign(c) != 0) return false;
  return true;
}

bool GroupElem::is_positive() const {
  for (const auto& c : coords_) {
    int s = scalar_sign(c);
    if (s != 0) return s > 0;
  }
  return false;
}

GroupElem GroupElem::operator-() const {
  std::vector<Scalar> c;
  c.reserve(coords_.size());
  for (const auto& s : coords_) {
    if (const Rat* r = std::get_if<Rat>(&s))
      c.emplace_back(Rat(-*r));
    else
      c.emplace_back(-std::get<QuadRat>(s));
  }
  return GroupElem(std::move(c));
}

GroupElem operator+(const GroupElem& x, const GroupElem& y) {
  check_signature(x, y);
  std::vector<Scalar> c;
  c.reserve(x.rank());
  for (std::size_t i = 0; i < x.rank(); ++i) {
    if (const Rat* r = std::get_if<Rat>(&x[i]))
      c.emplace_back(Rat(*r + std::get<Rat>(y[i])));
    else
      c.emplace_back(std::get<QuadRat>(x[i]) + std::get<QuadRat>(y[i]));
  }
  return GroupElem(std::move(c));
}

GroupElem operator*(const Rat& k, const GroupElem& x) {
  std::vector<Scalar> c;
  c.reserve(x.rank());
  for (const auto& s : x.coords()) {
    if (const Rat* r = std::get_if<Rat>(&s))
      c.emplace_back(Rat(k * *r));
    else
      c.emplace_back(k * std::get<QuadRat>(s));
  }
  return GroupElem(std::move(c));
}

GroupElem operator*(long k, const GroupElem& x) { return Rat(k) * x; }

bool operator==(const GroupElem& x, const GroupElem& y) { return lex_cmp(x, y) == 0; }

std::strong_ordering operator<=>(const GroupElem& x, const GroupElem& y) { return lex_cmp(x, y); }

int scalar_cmp(const Scalar& x, const Scalar& y) {
  if (kind_of(x) != kind_of(y)) throw structural_error("scalar kind mismatch");
  if (const Rat* r = std::get_if<Rat>(&x)) {
    int c = ::cmp(*r, std::get<Rat>(y));
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  return (std::get<QuadRat>(x) - std::get<QuadRat>(y)).sign();
}

std::strong_ordering lex_cmp(const GroupElem& x, const GroupElem& y) {
  check_signature(x, y);
  for (std::size_t i = 0; i < x.rank(); ++i) {
    int c = scalar_cmp(x[i], y[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const GroupElem& g) { return os << to_string(g); }

std::string to_string(const GroupElem& g) {
  if (g.rank() == 1) return to_string(g[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (i) s += ", ";
    s += to_string(g[i]);
  }
  return s + ")";
}

bool QSubgroup::contains(const Rat& r) const {
  if (trivial()) return ::sgn(r) == 0;
  Rat q = r / generator;
  return q.get_den() == 1;
}

QSubgroup q_subgroup(const std::vector<Rat>& gens) {
  // gcd(n_i/d_i) = gcd(n_i) / lcm(d_i) for canonical fractions
  Int num = 0, den = 1;
  for (const auto& g : gens) {
    if (::sgn(g) == 0) continue;
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), g.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), g.get_den_mpz_t());
  }
  Rat c(num, den);
  c.canonicalize();
  return QSubgroup{c};
}

Int subgroup_index(const QSubgroup& small, const QSubgroup& big) {
  if (big.trivial()) {
    if (small.trivial()) return 1;
    throw domain_error("nontrivial group is not contained in the trivial group");
  }
  if (small.trivial()) throw domain_error("trivial subgroup has infinite index");
  Rat q = small.generator / big.generator;
  if (q.get_den() != 1)
    throw domain_error(to_string(small.generator) + "Z is not contained in " + to_string(big.generator) + "Z");
  return q.get_num();
}

}  // namespace valsg
