#include <doctest.h>

#include <cmath>
#include <random>

#include "valsg/group.hpp"
#include "valsg/json_io.hpp"

using namespace valsg;

TEST_CASE("rational canonical form") {
  Rat r = make_rat(10, -4);
  CHECK(to_string(r) == "-5/2");
  CHECK(r.get_den() > 0);
  CHECK(to_string(make_rat(0, 7)) == "0");
  CHECK(parse_rat("21/4") == make_rat(21, 4));
  CHECK(parse_rat("-6/4") == make_rat(-3, 2));
  CHECK_THROWS_AS(parse_rat("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rat("1//2"), parse_error);
  CHECK_THROWS_AS(parse_rat("x"), parse_error);
  CHECK(pow2(-3) == make_rat(1, 8));
  CHECK(pow2(4) == 16);
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  for (int t = 0; t < 300; ++t) {
    Rat a = make_rat(num(rng), den(rng)), b = make_rat(num(rng), den(rng)), c = make_rat(num(rng), den(rng));
    CHECK(Rat(a + b) == Rat(b + a));
    CHECK(Rat((a * b) * c) == Rat(a * (b * c)));
    CHECK(Rat(a * (b + c)) == Rat(a * b + a * c));
    if (sgn(a) != 0) CHECK(Rat(a * (1 / a)) == 1);
    Rat again = parse_rat(to_string(a));
    CHECK(again == a);
  }
}

TEST_CASE("quadratic sign agrees with floating evaluation away from zero") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
  int checked = 0;
  for (int t = 0; t < 1000; ++t) {
    QuadRat q(make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)));
    long double v = q.a.get_d() + q.b.get_d() * std::sqrt(2.0L);
    if (std::fabs(v) < 1e-9L) continue;
    CHECK(q.sign() == (v > 0 ? 1 : -1));
    ++checked;
  }
  CHECK(checked > 900);
  // near-miss convergent of sqrt(2): 577/408
  CHECK(QuadRat(make_rat(577, 408), Rat(-1)).sign() == 1);
  CHECK(QuadRat(make_rat(-577, 408), Rat(1)).sign() == -1);
  CHECK(QuadRat(Rat(0), Rat(0)).sign() == 0);
}

TEST_CASE("lex comparison") {
  CHECK(lex_cmp(GroupElem{Rat(1), Rat(0)}, GroupElem{Rat(0), Rat(5)}) > 0);
  CHECK(lex_cmp(GroupElem{Rat(1), Rat(-3)}, GroupElem{Rat(1), Rat(-3)}) == 0);
  CHECK(lex_cmp(GroupElem{Rat(3), Rat(-1)}, GroupElem{Rat(1), Rat(0)}) > 0);
  CHECK_THROWS_AS(lex_cmp(GroupElem{Rat(1)}, GroupElem{Rat(1), Rat(0)}), structural_error);
  GroupElem q({Scalar(QuadRat(Rat(0), Rat(1))), Scalar(Rat(0))});
  CHECK_THROWS_AS(lex_cmp(q, GroupElem{Rat(1), Rat(0)}), structural_error);
  GroupElem one({Scalar(QuadRat(Rat(1), Rat(0))), Scalar(Rat(7))});
  CHECK(one < q);  // 1 < sqrt(2)
}

TEST_CASE("lex order properties on random triples") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-4, 4);
  auto draw = [&] { return GroupElem{make_rat(d(rng), 2), make_rat(d(rng), 3)}; };
  for (int t = 0; t < 500; ++t) {
    GroupElem a = draw(), b = draw(), c = draw();
    CHECK((lex_cmp(a, b) < 0) == (lex_cmp(b, a) > 0));
    if (a < b && b < c) CHECK(a < c);
    if (a < b) CHECK(a + c < b + c);
  }
}

TEST_CASE("subgroups of Q") {
  CHECK(q_subgroup({make_rat(5, 2), Rat(1)}).generator == make_rat(1, 2));
  CHECK(q_subgroup({Rat(4)}).generator == 4);
  CHECK(q_subgroup({Rat(1), make_rat(5, 2), make_rat(21, 4)}).generator == make_rat(1, 4));
  CHECK(q_subgroup({Rat(0), Rat(0)}).trivial());
  CHECK(subgroup_index({Rat(4)}, {Rat(2)}) == 2);
  CHECK(subgroup_index({make_rat(1, 3)}, {make_rat(1, 3)}) == 1);
  for (long i = 0; i < 10; ++i) CHECK(subgroup_index({pow2(-i)}, {pow2(-i - 1)}) == 2);
  CHECK_THROWS_AS(subgroup_index({Rat(2)}, {Rat(4)}), domain_error);
}

TEST_CASE("q_subgroup output is the largest common divisor") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(1, 60), den(1, 24);
  for (int t = 0; t < 200; ++t) {
    std::vector<Rat> g{make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng))};
    Rat c = q_subgroup(g).generator;
    for (const auto& x : g) CHECK(Rat(x / c).get_den() == 1);
    // no strictly larger divisor of the form c*k/l with small l works
    for (long k = 2; k <= 6; ++k) {
      bool all = true;
      for (const auto& x : g) all = all && Rat(x / (c * k)).get_den() == 1;
      CHECK_FALSE(all);
    }
  }
}

TEST_CASE("json round trips") {
  GroupElem g({Scalar(QuadRat(Rat(2), make_rat(-1, 3))), Scalar(make_rat(21, 4))});
  json j = elem_json(g);
  CHECK(j.dump() == R"([{"a":"2","b":"-1/3"},"21/4"])");
  CHECK(elem_from_json(j) == g);
  CHECK(rat_json(make_rat(-1, 8)) == "-1/8");
  CHECK(rat_from_json(json("-1/8")) == make_rat(-1, 8));
}
