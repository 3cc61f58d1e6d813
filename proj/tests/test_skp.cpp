#include <doctest.h>

#include <random>

#include "mn_oracle.hpp"
#include "valsg/parser.hpp"
#include "valsg/skp.hpp"

using namespace valsg;

namespace {

const std::vector<std::string> xy{"x", "y"};

MPoly random_xy(std::mt19937_64& rng, int terms, int max_deg) {
  std::uniform_int_distribution<int> e(0, max_deg), c(-4, 4);
  MPoly p(xy);
  while (p.is_zero())
    for (int t = 0; t < terms; ++t) {
      std::uint32_t a = e(rng), b = e(rng);
      if (a + b > static_cast<std::uint32_t>(max_deg)) b = max_deg - a;
      p.add_term({a, b}, Rat(c(rng)));
    }
  return p;
}

std::vector<Rat> table_rats(const SemiTable& t) {
  std::vector<Rat> r;
  for (const auto& g : t.elements) r.push_back(g.as_rat());
  return r;
}

}  // namespace

TEST_CASE("beta values") {
  CHECK(dyadic_beta(0) == 1);
  CHECK(dyadic_beta(1) == make_rat(5, 2));
  CHECK(dyadic_beta(2) == make_rat(21, 4));
  for (std::size_t i = 0; i <= 31; ++i) CHECK(dyadic_beta(i) == dyadic_beta_closed(i));
  for (std::size_t i = 1; i <= 30; ++i)
    CHECK(2 * dyadic_beta(i) == dyadic_beta(i - 1) + pow2(static_cast<long>(i) + 1) * dyadic_beta(0));
}

TEST_CASE("key polynomials") {
  KeyPolySeq k = KeyPolySeq::build(5);
  CHECK(k.poly(2) == parse_xy("y^2 - x^5"));
  CHECK(k.poly(3) == parse_xy("(y^2-x^5)^2 - x^8*y"));
  CHECK(k.poly(4) == k.poly(3) * k.poly(3) - parse_xy("x^16") * k.poly(2));
  CHECK(k[0].m == 1);
  CHECK(k[3].m == 2);
  CHECK_THROWS_AS(KeyPolySeq::build(9, 100), domain_error);
}

TEST_CASE("standard expansion examples") {
  StdExpansion e = standard_expansion(parse_xy("y^2"));
  REQUIRE(e.terms.size() == 2);
  CHECK(e.terms[0].exps == StdExponents{5});
  CHECK(e.terms[1].exps == StdExponents{0, 0, 1});
  CHECK(e.terms[1].coeff == 1);
  StdExpansion c = standard_expansion(parse_xy("x^3"));
  REQUIRE(c.terms.size() == 1);
  CHECK(c.terms[0].exps == StdExponents{3});
  StdExpansion s = standard_expansion(parse_xy("x^5*y + y"));
  REQUIRE(s.terms.size() == 2);
  CHECK(s.terms[0].exps == StdExponents{0, 1});
  CHECK(s.terms[1].exps == StdExponents{5, 1});
  CHECK_THROWS_AS(standard_expansion(parse_xy("y^4"), KeyPolySeq::build(3)), domain_error);
}

TEST_CASE("values") {
  CHECK(nu_bar(parse_xy("x")) == 1);
  CHECK(nu_bar(parse_xy("y^2 - x^5")) == make_rat(21, 4));
  CHECK(nu_bar(parse_xy("y^2")) == 5);
  CHECK_THROWS_AS(nu_bar(MPoly(xy)), domain_error);
  const KeyPolySeq& k = shared_key_polys(9);
  for (std::size_t i = 0; i <= 8; ++i) CHECK(nu_bar(k.poly(i)) == dyadic_beta(i));
}

TEST_CASE("standard values are injective") { CHECK(check_standard_injectivity(10, 32)); }

TEST_CASE("expansion reconstructs and values multiply") {
  std::mt19937_64 rng(59);
  const KeyPolySeq& k = shared_key_polys(8);
  for (int t = 0; t < 60; ++t) {
    MPoly f = random_xy(rng, 6, 20);
    CHECK(standard_expansion(f, k).reconstruct(k) == f);
    MPoly g = random_xy(rng, 4, 12);
    CHECK(nu_bar(f * g) == nu_bar(f) + nu_bar(g));
    CHECK(nu_bar(f + g) >= std::min(nu_bar(f), nu_bar(g)));
  }
}

TEST_CASE("x-power divisibility of key polynomials") {
  for (std::size_t i = 0; i <= 8; ++i) {
    KeyDivisibilityReport r = key_divisibility_check(i);
    CHECK(r.verdict);
    CHECK(r.z_degree <= i);
  }
  CHECK(key_divisibility_check(2).quotient == parse_poly("z^2 - x^3", {"x", "z"}));
  CHECK(key_divisibility_check(0).quotient == parse_poly("x", {"x", "z"}));
  // h_3 = x z^4 - ... = y z^3 - ...: degree 3 over K[x,y], 4 in K[x,z]
  CHECK(key_divisibility_check(3).z_degree == 3);
  CHECK(key_divisibility_check(3).raw_z_degree == 4);
}

TEST_CASE("M_n closed form against brute force") {
  // degree 12 reaches every standard monomial of value below 9 = 6 + 3
  for (unsigned n = 1; n <= 3; ++n) {
    std::set<Rat> brute = ideal_power_values(n, 12);
    std::vector<Rat> expect;
    for (const auto& v : brute)
      if (v < 6) expect.push_back(v);
    CHECK(table_rats(module_Mn(n, Rat(6))) == expect);
  }
  CHECK(table_rats(module_Mn(1, Rat(2))) == std::vector<Rat>{0, 1, make_rat(3, 2)});
  CHECK(table_rats(module_Mn(2, Rat(1))) == std::vector<Rat>{0});
  std::vector<Rat> m1 = table_rats(module_Mn(1, make_rat(9, 2)));
  for (Rat v : {Rat(2), make_rat(5, 2), Rat(3), make_rat(7, 2), Rat(4)})
    CHECK(std::find(m1.begin(), m1.end(), v) != m1.end());
}

TEST_CASE("M_0 is the value semigroup of K[x,y]") {
  std::set<Rat> brute = ideal_power_values(0, 12);
  SemiTable m0 = enumerate_below(dyadic_beta_stream(), GroupElem::rat(Rat(6)));
  std::vector<Rat> expect;
  for (const auto& v : brute)
    if (v < 6) expect.push_back(v);
  CHECK(table_rats(m0) == expect);
  std::mt19937_64 rng(61);
  for (int t = 0; t < 100; ++t) {
    Rat v = nu_bar(random_xy(rng, 3, 8));
    if (v < 6) CHECK(m0.contains(GroupElem::rat(v)));
  }
}

TEST_CASE("new generator witnesses") {
  auto w = new_generator_witness(1, 3);
  REQUIRE(w.size() == 3);
  CHECK(w[0].value == make_rat(3, 2));
  CHECK(w[1].value == make_rat(17, 4));
  CHECK(w[2].value == make_rat(77, 8));
  for (const auto& e : w) CHECK(e.certified);
  auto w2 = new_generator_witness(2, 2);
  CHECK(w2[0].value == make_rat(13, 4));
  CHECK(w2[0].denominator == 4);
  CHECK(w2[0].certified);
  for (unsigned n : {1u, 2u})
    for (const auto& e : new_generator_witness(n, 10)) {
      CHECK(e.certified);
      CHECK(e.denominator == pow2(static_cast<long>(e.j)));
    }
}

TEST_CASE("module generator lists") {
  std::vector<Rat> g;
  for (std::size_t i = 0; i < 4; ++i) g.push_back(mn_coset_stream(1).at(i)->as_rat());
  CHECK(g == std::vector<Rat>{0, make_rat(3, 2), make_rat(17, 4), make_rat(77, 8)});
  auto small = mn_small_generators(2);
  std::vector<Rat> sv;
  for (const auto& s : small) sv.push_back(s.value);
  CHECK(sv == std::vector<Rat>{0, make_rat(3, 2), Rat(3)});
}
