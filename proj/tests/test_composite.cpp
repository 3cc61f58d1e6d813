#include <doctest.h>

#include <cmath>
#include <random>

#include "valsg/composite.hpp"
#include "valsg/parser.hpp"
#include "valsg/skp.hpp"

using namespace valsg;

namespace {

GroupElem v2(long a, long b) { return GroupElem{Rat(a), Rat(b)}; }

MPoly xyuv(const std::string& s) { return parse_poly(s, xyuv_vars()); }

MPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int terms, int max_deg) {
  std::uniform_int_distribution<int> e(0, max_deg), c(-3, 3);
  MPoly p(vars);
  while (p.is_zero())
    for (int t = 0; t < terms; ++t) {
      Exponents ex(vars.size());
      for (auto& k : ex) k = e(rng);
      p.add_term(ex, Rat(c(rng)));
    }
  return p;
}

// angular oracle: inside when the angle of gamma sits between the extreme
// angles of a cone narrower than pi
bool angle_inside(const GroupElem& g, const std::vector<GroupElem>& prior) {
  auto ang = [](const GroupElem& p) { return std::atan2(p.as_rat(1).get_d(), p.as_rat(0).get_d()); };
  double lo = 10, hi = -10;
  for (const auto& p : prior) {
    lo = std::min(lo, ang(p));
    hi = std::max(hi, ang(p));
  }
  double a = ang(g);
  return a >= lo - 1e-12 && a <= hi + 1e-12;
}

GroupElem value_of(const std::string& f) { return composite_value(xyuv(f)).value; }

}  // namespace

TEST_CASE("cone check examples") {
  auto in = cone_check(v2(1, 1), {v2(0, 1), v2(1, 0)});
  CHECK(in.inside);
  CHECK(in.cone.shape == "pointed");
  CHECK(cone_check(v2(3, -8), {v2(0, 1), v2(1, 0), v2(3, -8)}).inside);
  // (4,-8) = (3,-8) + (1,0)
  CHECK(cone_check(v2(4, -8), {v2(0, 1), v2(1, 0), v2(3, -8)}).inside);
  auto out = cone_check(v2(5, -16), {v2(0, 1), v2(1, 0), v2(3, -8), v2(4, -8)});
  REQUIRE_FALSE(out.inside);
  REQUIRE(out.separator);
  auto [c0, c1] = *out.separator;
  for (const auto& p : {v2(0, 1), v2(1, 0), v2(3, -8), v2(4, -8)}) CHECK(c0 * p.as_rat(0) + c1 * p.as_rat(1) >= 0);
  CHECK(c0 * 5 + c1 * -16 < 0);
}

TEST_CASE("cone check degenerate shapes") {
  CHECK(cone_check(v2(2, 4), {v2(1, 2)}).inside);
  CHECK_FALSE(cone_check(v2(-1, -2), {v2(1, 2)}).inside);
  CHECK_FALSE(cone_check(v2(1, 0), {v2(1, 2)}).inside);
  CHECK(cone_of({v2(1, 2), v2(-1, -2)}).shape == "line");
  CHECK(cone_check(v2(-3, -6), {v2(1, 2), v2(-1, -2)}).inside);
  CHECK(cone_of({v2(1, 0), v2(-1, 0), v2(0, 1)}).shape == "half-plane");
  CHECK_FALSE(cone_check(v2(0, -1), {v2(1, 0), v2(-1, 0), v2(0, 1)}).inside);
  CHECK(cone_of({v2(1, 0), v2(-1, 1), v2(-1, -1)}).shape == "plane");
  CHECK(cone_check(v2(7, -3), {v2(1, 0), v2(-1, 1), v2(-1, -1)}).inside);
}

TEST_CASE("cone check against the angular oracle") {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<long> d(-9, 9), pos(1, 9);
  for (int trial = 0; trial < 300; ++trial) {
    // prior vectors in the right half plane with positive first coordinate
    std::vector<GroupElem> prior;
    for (int k = 0; k < 3; ++k) prior.push_back(v2(pos(rng), d(rng)));
    GroupElem g = v2(pos(rng), d(rng));
    auto r = cone_check(g, prior);
    CHECK(r.inside == angle_inside(g, prior));
    if (!r.inside) {
      auto [c0, c1] = *r.separator;
      for (const auto& p : prior) CHECK(c0 * p.as_rat(0) + c1 * p.as_rat(1) >= 0);
      CHECK(c0 * g.as_rat(0) + c1 * g.as_rat(1) < 0);
    }
  }
}

TEST_CASE("z2 build defaults") {
  Z2Example ex = z2_build("pow2", "linear", "one", 6);
  REQUIRE(ex.gammas.size() == 6);
  CHECK(ex.gammas[0] == v2(0, 1));
  CHECK(ex.gammas[1] == v2(1, 0));
  CHECK(ex.gammas[2] == v2(3, -8));
  CHECK(ex.gammas[3] == v2(4, -8));
  CHECK(ex.gammas[4] == v2(5, -16));
  for (bool ok : ex.closed_form_ok) CHECK(ok);
  CHECK_FALSE(ex.start_condition);
  CHECK(ex.u_series.size() == 4);
  // u_4 leading term lambda_4 t^(b_4, a_3 - a_4)
  CHECK(ex.u_series[1].terms().front().first == v2(4, -8));
  CHECK(ex.u_series[1].terms().front().second == 1);
}

TEST_CASE("z2 verify: defaults fail at index 4 only") {
  Z2Example ex = z2_build("pow2", "linear", "one", 10);
  Z2Report rep = z2_verify(ex, v2(12, 64));
  CHECK_FALSE(rep.verdict);
  for (const auto& e : rep.entries) {
    INFO("index " << e.index);
    CHECK(e.prior_complete);
    CHECK(e.closed_form_ok);
    if (e.index == 4) {
      CHECK(e.cone.inside);
      CHECK(e.multiples_in_prior == std::vector<long>{1, 2});
    } else {
      CHECK_FALSE(e.cone.inside);
      CHECK(e.multiples_in_prior.empty());
    }
  }
}

TEST_CASE("z2 verify: triangular a passes") {
  Z2Example ex = z2_build("triangular", "linear", "alternating", 10);
  CHECK(ex.start_condition);
  Z2Report rep = z2_verify(ex, v2(12, 64));
  CHECK(rep.verdict);
}

TEST_CASE("z2 rule violations name the index") {
  CHECK_THROWS_WITH_AS(z2_build("linear", "pow2", "one", 6), doctest::Contains("index"), domain_error);
  CHECK_THROWS_AS(z2_build("pow2", "linear", "const:0", 6), domain_error);
  CHECK_THROWS_AS(z2_build("pow2", "linear", "one", 2), domain_error);
}

TEST_CASE("composite values of the basic elements") {
  CHECK(value_of("u") == alpha_multiple(1, 0, 0));
  CHECK(value_of("v") == alpha_multiple(1, 0, make_rat(3, 2)));
  CHECK(value_of("x*v - y*u") == alpha_multiple(0, 1, 1));
  CHECK(value_of("x^2*v - x*y*u") == alpha_multiple(0, 1, 2));
  CHECK(value_of("x") == alpha_multiple(0, 0, 1));
  CHECK(value_of("y^2 - x^5") == alpha_multiple(0, 0, make_rat(21, 4)));
  CHECK_THROWS_AS(composite_value(MPoly(xyuv_vars())), domain_error);
}

TEST_CASE("composite value agrees with the series route") {
  std::mt19937_64 rng(211);
  for (int trial = 0; trial < 40; ++trial) {
    MPoly f = random_poly(rng, xyuv_vars(), 4, 3);
    CHECK(composite_value(f).value == composite_value_series(f));
  }
}

TEST_CASE("composite value of (xv - yu)^n h") {
  std::mt19937_64 rng(307);
  const MPoly line = xyuv("x*v - y*u");
  for (long n = 0; n <= 3; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      MPoly h = random_poly(rng, {"x", "y"}, 3, 4);
      GroupElem v = composite_value(line.pow(n) * h.with_vars(xyuv_vars())).value;
      CHECK(v == alpha_multiple(0, n, Rat(n + nu_bar(h))));
    }
}

TEST_CASE("composite value is multiplicative") {
  std::mt19937_64 rng(401);
  for (int trial = 0; trial < 100; ++trial) {
    MPoly f = random_poly(rng, xyuv_vars(), 3, 2), g = random_poly(rng, xyuv_vars(), 3, 2);
    CHECK(composite_value(f * g).value == composite_value(f).value + composite_value(g).value);
  }
}

TEST_CASE("first component vanishes exactly when a_00 is nonzero") {
  std::mt19937_64 rng(503);
  for (int trial = 0; trial < 60; ++trial) {
    MPoly f = random_poly(rng, xyuv_vars(), 4, 2);
    auto a = uv_coefficients(f);
    bool a00 = a.count({0, 0}) > 0;
    const QuadRat first = std::get<QuadRat>(composite_value(f).value[0]);
    CHECK((first == QuadRat(Rat(0), Rat(0))) == a00);
    CHECK(first.sign() >= 0);
  }
}

TEST_CASE("phi derivative identity") {
  const std::vector<std::string> xy{"x", "y"};
  std::mt19937_64 rng(601);
  CHECK(phi_derivative_check(1, {parse_poly("x + y", xy), parse_poly("1", xy)}));
  for (unsigned k = 0; k <= 4; ++k) {
    std::vector<MPoly> a;
    for (unsigned i = 0; i <= k; ++i) a.push_back(random_poly(rng, xy, 3, 3));
    CHECK(phi_derivative_check(k, a));
  }
  // from a sampled f
  MPoly f = xyuv("x*u^3 + y^2*u^2*v - 3*x*y*u*v^2 + (x - y)*v^3");
  auto coeffs = uv_coefficients(f);
  std::vector<MPoly> a;
  for (unsigned i = 0; i <= 3; ++i) a.push_back(coeffs.count({3 - i, i}) ? coeffs.at({3 - i, i}) : MPoly(xy));
  CHECK(phi_derivative_check(3, a));
}

TEST_CASE("phi numerators are Phi at y/x") {
  std::mt19937_64 rng(701);
  for (int trial = 0; trial < 10; ++trial) {
    unsigned k = 3;
    std::vector<MPoly> a;
    MPoly f(xyuv_vars());
    for (unsigned i = 0; i <= k; ++i) {
      a.push_back(random_poly(rng, {"x", "y"}, 2, 2));
      f += a.back().with_vars(xyuv_vars()) * MPoly::monomial(xyuv_vars(), {0, 0, k - i, i});
    }
    auto coeffs = uv_coefficients(f);
    for (unsigned j = 0; j <= k; ++j) {
      // x^(k-j) Phi_jk(y/x): homogenize in W
      MPoly phi = phi_poly(j, k, a);
      MPoly hom(std::vector<std::string>{"x", "y"});
      for (const auto& [e, c] : phi.terms()) hom.add_term({e[0] + (k - j) - e[2], e[1] + e[2]}, c);
      CHECK(hom == phi_numerator(coeffs, j, k));
    }
  }
}

TEST_CASE("slice levels") {
  CHECK(SliceLevel::parse("2").n == 2);
  CHECK(SliceLevel::parse("alpha").alpha);
  CHECK(SliceLevel::parse("3*alpha").n == 3);
  CHECK_THROWS_AS(SliceLevel::parse("two"), parse_error);
}

TEST_CASE("F slices are contained in the expected modules") {
  for (const char* lvl : {"0", "1", "2", "alpha", "2*alpha"}) {
    INFO(lvl);
    SliceReport r = F_slice(SliceLevel::parse(lvl), 3, Rat(6), 9);
    CHECK(r.contained);
    CHECK_FALSE(r.observed.empty());
  }
  SliceReport one = F_slice(SliceLevel::parse("1"), 3, Rat(6), 9);
  CHECK(std::find(one.observed.begin(), one.observed.end(), make_rat(3, 2)) != one.observed.end());
  CHECK(std::find(one.observed.begin(), one.observed.end(), Rat(0)) != one.observed.end());
  SliceReport a1 = F_slice(SliceLevel::parse("alpha"), 3, Rat(6), 9);
  CHECK(std::find(a1.observed.begin(), a1.observed.end(), Rat(1)) != a1.observed.end());
}
