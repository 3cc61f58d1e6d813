#include <doctest.h>

#include <random>

#include "rank_oracle.hpp"
#include "valsg/hahn.hpp"
#include "valsg/parser.hpp"

using namespace valsg;

namespace {

using RSeries = HahnSeries<Rat, Rat>;
using QSeries = HahnSeries<QuadRat, RatFunc>;
const std::vector<std::string> xy{"x", "y"};

RSeries t_pow(const Rat& e, const Rat& c = Rat(1)) { return RSeries::monomial(e, c); }

}  // namespace

TEST_CASE("addition and precision") {
  RSeries f({{Rat(1), Rat(1)}, {Rat(2), Rat(1)}}, Rat(10));
  RSeries g = f + (-t_pow(Rat(1)));
  REQUIRE(g.terms().size() == 1);
  CHECK(g.terms()[0].first == 2);
  CHECK(*g.precision() == 10);
  RSeries h = f + RSeries({{Rat(3), Rat(5)}}, Rat(4));
  CHECK(*h.precision() == 4);
  CHECK(h.terms().size() == 3);
}

TEST_CASE("products track precision") {
  RSeries a({{Rat(1), Rat(1)}}, Rat(5));
  RSeries b({{Rat(2), Rat(1)}, {Rat(3), Rat(-1)}}, Rat(4));
  RSeries p = a * b;
  // min(v(a) + prec b, v(b) + prec a) = min(5, 7)
  CHECK(*p.precision() == 5);
  CHECK(p.terms().size() == 2);
  CHECK(t_valuation(p).value == 3);
}

TEST_CASE("rank-two exponents") {
  using GSeries = HahnSeries<GroupElem, Rat>;
  GSeries u = GSeries::monomial(GroupElem{Rat(1), Rat(0)}, Rat(1));
  GSeries v = GSeries::monomial(GroupElem{Rat(0), Rat(1)}, Rat(1));
  GSeries w = u * v;
  CHECK(w.terms()[0].first == GroupElem{Rat(1), Rat(1)});
}

TEST_CASE("t-adic valuation") {
  RSeries f = t_pow(make_rat(5, 2)) + t_pow(Rat(3));
  CHECK(t_valuation(f).finite());
  CHECK(t_valuation(f).value == make_rat(5, 2));
  RSeries z = RSeries::zero_to(Rat(10));
  CHECK(t_valuation(z).kind == ValuationKind::at_least);
  CHECK(t_valuation(z).value == 10);
  CHECK(t_valuation(RSeries()).kind == ValuationKind::infinite);
}

TEST_CASE("substitution with rational function coefficients") {
  const QuadRat zero, one(Rat(1)), alpha(Rat(0), Rat(1));
  const RatFunc c1 = RatFunc::constant(xy, Rat(1));
  const RatFunc y_over_x(parse_poly("y", xy), parse_poly("x", xy));
  QSeries t = QSeries::monomial(one, c1);
  QSeries vt = QSeries({{one, y_over_x}, {alpha, c1}});
  const std::vector<std::string> uv{"u", "v"};

  QSeries su = subst_series(parse_poly("u", uv), std::map<std::string, QSeries>{{"u", t}, {"v", vt}}, c1, zero);
  CHECK(su == t);

  // x v - y u with x, y as constants of the coefficient field
  QSeries x_c = QSeries::monomial(zero, RatFunc(parse_poly("x", xy)));
  QSeries y_c = QSeries::monomial(zero, RatFunc(parse_poly("y", xy)));
  QSeries diff = x_c * vt - y_c * t;
  REQUIRE(diff.terms().size() == 1);
  CHECK(diff.terms()[0].first == alpha);
  CHECK(diff.terms()[0].second == RatFunc(parse_poly("x", xy)));

  QSeries sq = subst_series(parse_poly("v^2", uv), std::map<std::string, QSeries>{{"u", t}, {"v", vt}}, c1, zero);
  REQUIRE(sq.terms().size() == 3);
  CHECK(sq.terms()[0].first == QuadRat(Rat(2), Rat(0)));
  CHECK(sq.terms()[0].second == y_over_x * y_over_x);
  CHECK(sq.terms()[1].first == QuadRat(Rat(1), Rat(1)));
  CHECK(sq.terms()[1].second == RatFunc::constant(xy, Rat(2)) * y_over_x);
  CHECK(sq.terms()[2].first == QuadRat(Rat(0), Rat(2)));
}

TEST_CASE("substitution precision collapse names the limiting term") {
  const std::vector<std::string> uv{"u", "v"};
  std::map<std::string, RSeries> a{{"u", RSeries({}, Rat(2))}, {"v", t_pow(Rat(1))}};
  try {
    subst_series(parse_poly("u*v", uv), a, Rat(1), Rat(0));
    FAIL("expected precision error");
  } catch (const precision_error& e) {
    CHECK(std::string(e.what()).find("u*v") != std::string::npos);
  }
}

TEST_CASE("valuation axioms on random series") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> e(0, 12), c(-3, 3), n(1, 4);
  auto draw = [&] {
    std::vector<RSeries::Term> t;
    int k = n(rng);
    for (int i = 0; i < k; ++i) t.emplace_back(make_rat(e(rng), 4), Rat(c(rng)));
    return RSeries(t);
  };
  for (int trial = 0; trial < 300; ++trial) {
    RSeries f = draw(), g = draw();
    if (f.known_zero() || g.known_zero()) continue;
    CHECK(t_valuation(f * g).value == t_valuation(f).value + t_valuation(g).value);
    RSeries s = f + g;
    if (s.known_zero()) continue;
    Rat lo = std::min(t_valuation(f).value, t_valuation(g).value);
    CHECK(t_valuation(s).value >= lo);
    if (t_valuation(f).value != t_valuation(g).value) CHECK(t_valuation(s).value == lo);
  }
}

TEST_CASE("distinct exponents (k - j) + j alpha never merge") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> d(0, 30);
  for (int t = 0; t < 2000; ++t) {
    int j1 = d(rng), j2 = d(rng), k1 = j1 + d(rng), k2 = j2 + d(rng);
    QuadRat a(Rat(k1 - j1), Rat(j1)), b(Rat(k2 - j2), Rat(j2));
    CHECK((a == b) == (j1 == j2 && k1 == k2));
  }
}

TEST_CASE("raising input precision never changes known terms") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> e(1, 20), c(-4, 4);
  for (int t = 0; t < 50; ++t) {
    std::vector<RSeries::Term> ta, tb;
    for (int i = 0; i < 6; ++i) {
      ta.emplace_back(make_rat(e(rng), 3), Rat(c(rng)));
      tb.emplace_back(make_rat(e(rng), 3), Rat(c(rng)));
    }
    RSeries a_lo(ta, Rat(4)), b_lo(tb, Rat(4)), a_hi(ta, Rat(8)), b_hi(tb, Rat(8));
    RSeries lo = a_lo * b_lo + a_lo, hi = a_hi * b_hi + a_hi;
    CHECK(hi.truncated(*lo.precision()) == lo);
  }
}

TEST_CASE("value spectrum small cases") {
  auto rep = value_spectrum<Rat, Rat>({t_pow(Rat(0)), t_pow(Rat(1)), t_pow(Rat(0)) + t_pow(Rat(1))});
  CHECK(rep.dimension == 2);
  CHECK(rep.values == std::vector<Rat>{Rat(0), Rat(1)});
  auto one = value_spectrum<Rat, Rat>({t_pow(make_rat(5, 2))});
  CHECK(one.values == std::vector<Rat>{make_rat(5, 2)});
  auto zeros = value_spectrum<Rat, Rat>({RSeries(), t_pow(Rat(1))});
  CHECK(zeros.dimension == 1);
  // 1 + t and 1 + t known only below 1/2 cannot be told apart
  CHECK_THROWS_AS((value_spectrum<Rat, Rat>({RSeries({{Rat(0), Rat(1)}}, make_rat(1, 2)), t_pow(Rat(0))})),
                  precision_error);
}

TEST_CASE("spectrum size equals span dimension") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> e(0, 7), c(-2, 2), k(1, 7);
  for (int fam = 0; fam < 100; ++fam) {
    int count = k(rng);
    std::vector<RSeries> gens;
    std::vector<std::vector<Rat>> matrix;
    for (int g = 0; g < count; ++g) {
      std::vector<Rat> row(8, Rat(0));
      std::vector<RSeries::Term> terms;
      for (int i = 0; i < 3; ++i) {
        int ex = e(rng);
        Rat cf(c(rng));
        row[ex] += cf;
        terms.emplace_back(make_rat(ex, 2), cf);
      }
      gens.emplace_back(terms);
      matrix.push_back(row);
    }
    auto rep = value_spectrum(gens);
    CHECK(rep.dimension == rational_rank(matrix));
    CHECK(rep.values.size() == rep.dimension);
    for (std::size_t i = 1; i < rep.values.size(); ++i) CHECK(rep.values[i - 1] < rep.values[i]);
  }
}
