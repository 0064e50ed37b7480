#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "comdet/poly.hpp"

using namespace comdet;

namespace {

GroundSetPtr g2() { return makeGroundSet({"a", "b"}); }

Poly xp(int e) { return Poly::variable(Variable{e, VarKind::Plus}); }
Poly xm(int e) { return Poly::variable(Variable{e, VarKind::Minus}); }
Poly xu(int e, int exp = 1) { return Poly::variable(Variable{e, VarKind::Plain}, exp); }

Poly randomPoly(std::mt19937_64& rng, int vars = 3, int terms = 4) {
  Poly p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int v = 0; v < vars; ++v) {
      int e = static_cast<int>(rng() % 3);
      if (e) m.emplace_back(v * 3 + static_cast<int>(VarKind::Plain), e);
    }
    p += Poly::term(mpz_class(static_cast<long>(rng() % 21) - 10), m);
  }
  return p;
}

}  // namespace

TEST_CASE("variable ids round trip") {
  Variable v{5, VarKind::Minus};
  CHECK(Variable::fromId(v.id()) == v);
  CHECK(Variable::fromId(Variable{0, VarKind::Plus}.id()).kind == VarKind::Plus);
}

TEST_CASE("basic arithmetic identities") {
  Poly one(1);
  CHECK((one - xp(0) * xm(0)) + xp(0) * xm(0) == one);
  CHECK((one - xu(0, 2)).pow(0) == one);
  Poly expanded = (one - xu(0, 2)) * (one - xu(1, 2));
  CHECK(expanded == one - xu(0, 2) - xu(1, 2) + xu(0, 2) * xu(1, 2));
  CHECK((Poly(0) * expanded).isZero());
  CHECK(Poly(3) + Poly(-3) == Poly(0));
  CHECK(-(-expanded) == expanded);
  CHECK_THROWS(expanded.pow(-1));
  CHECK_THROWS(Poly::variable(Variable{0, VarKind::Plain}, -2));
}

TEST_CASE("degree and term count") {
  CHECK(Poly(0).degree() == -1);
  CHECK(Poly(7).degree() == 0);
  CHECK((xu(0) * xu(1) + Poly(1)).degree() == 2);
  CHECK((xu(0) + xu(1)).termCount() == 2);
  CHECK(Poly(1).isOne());
  CHECK_FALSE(xu(0).isOne());
}

TEST_CASE("exact division") {
  Poly one(1);
  CHECK((xu(0, 2) - one).exactDiv(xu(0) - one) == xu(0) + one);
  Poly a = one - xu(0, 2) * xu(1, 2);
  CHECK(a.exactDiv(one) == a);
  CHECK(a.exactDiv(one - xu(0) * xu(1)) == one + xu(0) * xu(1));
  CHECK(Poly(0).exactDiv(a).isZero());
  CHECK_THROWS(a.exactDiv(Poly(0)));
  CHECK_THROWS(a.exactDiv(xu(0)));           // monomial does not divide
  CHECK_THROWS(Poly(3).exactDiv(Poly(2)));  // coefficient not divisible
}

TEST_CASE("dropping every term of an element") {
  Poly p = Poly(1) + xp(0) * xm(1);
  CHECK(p.setZero(0) == Poly(1));
  CHECK(p.setZero(2) == p);
  CHECK(xp(0).setZero(0).isZero());
  // all three variable kinds of the element are dropped
  CHECK((xu(1) + xp(1) + xm(1)).setZero(1).isZero());
}

TEST_CASE("merging the signed variable pair into one") {
  CHECK((xp(0) * xm(0)).unsignedSpecialize() == xu(0, 2));
  CHECK(Poly(1).unsignedSpecialize() == Poly(1));
  CHECK((xp(0) + xm(0)).unsignedSpecialize() == Poly(2) * xu(0));
  // cancellation after the merge
  CHECK((xp(0) - xm(0)).unsignedSpecialize().isZero());
}

TEST_CASE("integer evaluation") {
  auto at = [](long plus, long minus) {
    return [=](Variable v) { return mpz_class(v.kind == VarKind::Plus ? plus : minus); };
  };
  CHECK((Poly(1) - xu(0, 2)).evalInt([](Variable) { return mpz_class(2); }) == -3);
  CHECK(Poly(5).evalInt([](Variable) { return mpz_class(99); }) == 5);
  CHECK((xp(0) * xm(0)).evalInt(at(3, 4)) == 12);
}

TEST_CASE("canonical strings and parsing") {
  auto g = g2();
  CHECK((Poly(1) - xp(0) * xm(0)).str(*g) == "1 - x[a]+*x[a]-");
  CHECK((Poly(1) - xu(0, 2)).str(*g) == "1 - x[a]^2");
  CHECK(Poly(0).str(*g) == "0");
  CHECK((-xu(1)).str(*g) == "-x[b]");
  CHECK((Poly(2) * xu(0) * xu(1)).str(*g) == "2*x[a]*x[b]");

  for (const Poly& p : {Poly(1) - xp(0) * xm(0), Poly(1) - xu(0, 2), Poly(0), -xu(1),
                        Poly(2) * xu(0) * xu(1) - Poly(7), xu(0, 3) + xm(1) * xp(0)}) {
    CHECK(parsePoly(p.str(*g), *g) == p);
  }
  CHECK_THROWS(parsePoly("x[zz]", *g));
  CHECK_THROWS(parsePoly("1 +", *g));
  CHECK_THROWS(parsePoly("x[a", *g));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = randomPoly(rng), b = randomPoly(rng), c = randomPoly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly(0));
    CHECK(a * Poly(1) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = randomPoly(rng), b = randomPoly(rng);
    long v0 = static_cast<long>(rng() % 7) - 3;
    long v1 = static_cast<long>(rng() % 7) - 3;
    auto assign = [&](Variable v) { return mpz_class(v.element == 0 ? v0 : v1); };
    CHECK((a * b).evalInt(assign) == a.evalInt(assign) * b.evalInt(assign));
    CHECK((a + b).evalInt(assign) == a.evalInt(assign) + b.evalInt(assign));
  }
}

TEST_CASE("merging signed pairs is a ring homomorphism") {
  std::mt19937_64 rng(77);
  auto randomSigned = [&rng] {
    Poly p;
    for (int t = 0; t < 4; ++t) {
      Monomial m;
      for (int v = 0; v < 2; ++v)
        for (VarKind k : {VarKind::Plus, VarKind::Minus}) {
          int e = static_cast<int>(rng() % 2);
          if (e) m.emplace_back(Variable{v, k}.id(), e);
        }
      p += Poly::term(mpz_class(static_cast<long>(rng() % 9) - 4), m);
    }
    return p;
  };
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = randomSigned(), b = randomSigned();
    CHECK((a * b).unsignedSpecialize() == a.unsignedSpecialize() * b.unsignedSpecialize());
    CHECK((a + b).unsignedSpecialize() == a.unsignedSpecialize() + b.unsignedSpecialize());
  }
}

TEST_CASE("multiplying then dividing returns the original") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = randomPoly(rng), b = randomPoly(rng);
    if (b.isZero()) continue;
    CHECK((a * b).exactDiv(b) == a);
  }
}
