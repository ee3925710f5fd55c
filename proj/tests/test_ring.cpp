#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bil/ring.hpp"

using namespace bil;

namespace {

PolyRing make_ring_q(std::vector<std::string> vars) {
  return PolyRing(std::move(vars), Field(0));
}

Polynomial rnd_poly(const PolyRing* R, std::mt19937_64& rng, int max_deg, int nterms) {
  const Field& F = R->field();
  std::uniform_int_distribution<int> dd(0, max_deg), cc(-10, 10);
  std::vector<Term> ts;
  for (int t = 0; t < nterms; ++t) {
    Mono m;
    int deg = dd(rng);
    for (int k = 0; k < deg; ++k) {
      std::uniform_int_distribution<int> dv(0, R->nvars() - 1);
      int v = dv(rng);
      m.e[v]++;
      m.deg++;
    }
    ts.push_back(Term{m, F.from_long(cc(rng))});
  }
  return Polynomial(R, std::move(ts));
}

}  // namespace

TEST_CASE("difference of squares and annihilator") {
  PolyRing R = make_ring_q({"x", "y"});
  auto x = Polynomial::variable(&R, 0);
  auto y = Polynomial::variable(&R, 1);
  CHECK((x + y) * (x - y) == x * x - y * y);
  auto f = x * x + y;
  CHECK((f * Polynomial::zero(&R)).is_zero());
}

TEST_CASE("freshman dream over F_5") {
  PolyRing R({"x", "y"}, Field(5));
  auto x = Polynomial::variable(&R, 0);
  auto y = Polynomial::variable(&R, 1);
  auto lhs = (x + y).pow(5);

  // oracle: binomial expansion with integer binomials reduced mod 5
  long binom[6];
  binom[0] = 1;
  for (int k = 1; k <= 5; ++k) binom[k] = binom[k - 1] * (5 - k + 1) / k;
  Polynomial rhs = Polynomial::zero(&R);
  for (int k = 0; k <= 5; ++k) {
    auto c = R.field().from_long(binom[k]);
    rhs = rhs + x.pow(5 - k) * y.pow(k) * Polynomial::constant(&R, c);
  }
  CHECK(lhs == rhs);
  CHECK(lhs == x.pow(5) + y.pow(5));
}

TEST_CASE("homogeneous_component") {
  PolyRing R = make_ring_q({"x", "y"});
  auto f = parse_polynomial(&R, "x^2 + y");
  CHECK(f.homogeneous_component(2) == parse_polynomial(&R, "x^2"));
  CHECK(f.homogeneous_component(1) == parse_polynomial(&R, "y"));
  CHECK(Polynomial::zero(&R).homogeneous_component(3).is_zero());
}

TEST_CASE("monomials_of_degree counts") {
  PolyRing R3 = make_ring_q({"x", "y", "z"});
  auto d1 = monomials_of_degree(R3, 1);
  REQUIRE(d1.size() == 3);
  CHECK(Polynomial::monomial(&R3, d1[0], R3.field().one()) ==
        Polynomial::variable(&R3, 0));
  CHECK(monomials_of_degree(R3, 2).size() == 6);

  PolyRing R5 = make_ring_q({"a", "b", "c", "d", "e"});
  // oracle: direct enumeration count C(8,4) = 70
  long count = 0;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j)
      for (int k = 0; i + j + k <= 4; ++k)
        for (int l = 0; i + j + k + l <= 4; ++l) ++count;
  CHECK(count == 70);
  CHECK(monomials_of_degree(R5, 4).size() == 70);
}

TEST_CASE("ring axioms on random polynomials, both fields") {
  for (long p : {0L, 32003L}) {
    PolyRing R({"x", "y", "z"}, Field(p));
    std::mt19937_64 rng(42);
    for (int it = 0; it < 1100; ++it) {
      auto a = rnd_poly(&R, rng, 4, 4);
      auto b = rnd_poly(&R, rng, 4, 4);
      auto c = rnd_poly(&R, rng, 4, 4);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
    }
  }
}

TEST_CASE("homogeneous multiplication degree") {
  PolyRing R = make_ring_q({"x", "y", "z"});
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    std::uniform_int_distribution<int> dd(1, 4);
    int da = dd(rng), db = dd(rng);
    Polynomial a = Polynomial::zero(&R), b = Polynomial::zero(&R);
    std::uniform_int_distribution<int> cc(-5, 5);
    for (auto& m : monomials_of_degree(R, da))
      a = a + Polynomial::monomial(&R, m, R.field().from_long(cc(rng)));
    for (auto& m : monomials_of_degree(R, db))
      b = b + Polynomial::monomial(&R, m, R.field().from_long(cc(rng)));
    auto prod = a * b;
    CHECK(prod.is_homogeneous());
    if (!prod.is_zero()) CHECK(prod.degree() == da + db);
  }
}

TEST_CASE("grevlex order on degree 2 in three variables") {
  PolyRing R = make_ring_q({"x", "y", "z"});
  auto ms = monomials_of_degree(R, 2);
  auto str = [&](const Mono& m) {
    return to_string(Polynomial::monomial(&R, m, R.field().one()));
  };
  REQUIRE(ms.size() == 6);
  CHECK(str(ms[0]) == "x^2");
  CHECK(str(ms[1]) == "x*y");
  CHECK(str(ms[2]) == "y^2");
  CHECK(str(ms[3]) == "x*z");
  CHECK(str(ms[4]) == "y*z");
  CHECK(str(ms[5]) == "z^2");
}

TEST_CASE("parser and printer round-trip") {
  PolyRing R = make_ring_q({"x", "y", "z", "w"});
  auto f = parse_polynomial(&R, "x^2*y - 3*z*w^2");
  CHECK(to_string(f) == "x^2*y - 3*z*w^2");
  CHECK(parse_polynomial(&R, to_string(f)) == f);

  // rational coefficients
  auto g = parse_polynomial(&R, "1/2*x - 5/3");
  CHECK(parse_polynomial(&R, to_string(g)) == g);

  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    auto h = rnd_poly(&R, rng, 5, 6);
    auto s = to_string(h);
    CHECK(parse_polynomial(&R, s) == h);
    CHECK(to_string(parse_polynomial(&R, s)) == s);
  }

  // over F_p too
  PolyRing Rp({"x", "y", "z", "w"}, Field(32003));
  std::mt19937_64 rng2(13);
  for (int it = 0; it < 300; ++it) {
    auto h = rnd_poly(&Rp, rng2, 5, 6);
    auto s = to_string(h);
    CHECK(parse_polynomial(&Rp, s) == h);
    CHECK(to_string(parse_polynomial(&Rp, s)) == s);
  }
}

TEST_CASE("parse errors carry position") {
  PolyRing R = make_ring_q({"x", "y"});
  CHECK_THROWS_AS(parse_polynomial(&R, "x + q"), bil::error);
  CHECK_THROWS_AS(parse_polynomial(&R, "x +"), bil::error);
  CHECK_THROWS_AS(parse_polynomial(&R, "x^"), bil::error);
}

TEST_CASE("exact division") {
  PolyRing R = make_ring_q({"x", "y"});
  auto f = parse_polynomial(&R, "x^2 - y^2");
  auto g = parse_polynomial(&R, "x - y");
  auto q = f.divide_exact(g);
  REQUIRE(q.has_value());
  CHECK(*q == parse_polynomial(&R, "x + y"));
  CHECK(!f.divide_exact(parse_polynomial(&R, "x + 2*y")).has_value());
}

TEST_CASE("ring mismatch is rejected") {
  PolyRing R1 = make_ring_q({"x", "y"});
  PolyRing R2 = make_ring_q({"u", "v"});
  auto a = Polynomial::variable(&R1, 0);
  auto b = Polynomial::variable(&R2, 0);
  CHECK_THROWS_AS(a + b, bil::error);
  CHECK_THROWS_AS(a * b, bil::error);
}
