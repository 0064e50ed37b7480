#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "comdet/constructions.hpp"
#include "comdet/poset.hpp"
#include "comdet/tope_poset.hpp"

using namespace comdet;

namespace {

FinitePoset chain(std::size_t n) {
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> rels;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i + 1 < n; ++i) rels.emplace_back(ids[i], ids[i + 1]);
  return FinitePoset(ids, rels);
}

FinitePoset randomPoset(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> rels;
  // relations only from lower to higher index keeps the generator acyclic
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() % 3 == 0) rels.emplace_back(ids[i], ids[j]);
  return FinitePoset(ids, rels);
}

}  // namespace

TEST_CASE("construction closes transitively and rejects cycles") {
  FinitePoset p({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(p.less("a", "c"));
  CHECK_FALSE(p.less("c", "a"));
  CHECK(p.leq(p.index("a"), p.index("a")));
  CHECK_THROWS(FinitePoset({"a", "b"}, {{"a", "b"}, {"b", "a"}}));
  CHECK_THROWS(FinitePoset({"a"}, {{"a", "a"}}));
  CHECK_THROWS(FinitePoset({"a", "a"}, {}));
}

TEST_CASE("subposet keeps the induced order") {
  FinitePoset p = posetQ();
  FinitePoset sub = p.subposet({p.index("a"), p.index("c"), p.index("e")});
  CHECK(sub.size() == 3);
  CHECK(sub.less("a", "c"));
  CHECK_FALSE(sub.comparable(sub.index("a"), sub.index("e")));
}

TEST_CASE("mobius function values") {
  FinitePoset two = chain(2);
  CHECK(mobius(two, "c0", "c0") == 1);
  CHECK(mobius(two, "c0", "c1") == -1);

  FinitePoset diamond({"0", "a", "b", "1"},
                      {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  CHECK(mobius(diamond, "0", "1") == 1);
  CHECK(mobius(diamond, "0", "a") == -1);
  CHECK_THROWS(mobius(diamond, "a", "b"));
}

TEST_CASE("mobius number in the bounded extension") {
  CHECK(mobiusNumber(FinitePoset({"x"})) == 0);
  CHECK(mobiusNumber(FinitePoset(std::vector<std::string>{})) == -1);
  CHECK(mobiusNumber(FinitePoset({"x", "y"})) == 1);  // 2-antichain
  CHECK(mobiusNumber(chain(2)) == 0);
  CHECK(mobiusNumber(chain(3)) == 0);
}

TEST_CASE("chain Euler characteristic") {
  CHECK(chainEulerCharacteristic(FinitePoset({"x"})) == 1);
  CHECK(chainEulerCharacteristic(FinitePoset({"x", "y"})) == 2);
  CHECK(chainEulerCharacteristic(chain(2)) == 1);
  CHECK(chainEulerCharacteristic(FinitePoset(std::vector<std::string>{})) == 0);
  std::mt19937_64 rng(1);
  CHECK_THROWS(chainEulerCharacteristic(randomPoset(rng, 21)));
}

TEST_CASE("mobius number equals reduced chain Euler characteristic") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    FinitePoset p = randomPoset(rng, 1 + rng() % 7);
    CHECK(mobiusNumber(p) == chainEulerCharacteristic(p) - 1);
  }
  CHECK(mobiusNumber(posetQ()) == chainEulerCharacteristic(posetQ()) - 1);
}

TEST_CASE("defining recursion of the mobius function") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    FinitePoset p = randomPoset(rng, 2 + rng() % 6);
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < p.size(); ++y) {
        if (!p.leq(x, y) || x == y) continue;
        long long sum = 0;
        for (std::size_t z = 0; z < p.size(); ++z)
          if (p.leq(x, z) && p.leq(z, y)) sum += mobius(p, x, z);
        CHECK(sum == 0);
      }
  }
}

TEST_CASE("tope order under a base pattern") {
  SignSystem c3 = cycleOM(3);
  auto g = c3.ground();

  TopePoset onTope = topeOrder(c3, SignVector(g, "++-"));
  std::size_t minima = 0;
  for (std::size_t i = 0; i < onTope.base.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < onTope.base.size(); ++j)
      if (onTope.base.less(j, i)) minimal = false;
    if (minimal) {
      ++minima;
      CHECK(onTope.base.element(i) == "++-");
    }
  }
  CHECK(minima == 1);

  TopePoset offTope = topeOrder(c3, SignVector(g, "+++"));
  minima = 0;
  for (std::size_t i = 0; i < offTope.base.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < offTope.base.size(); ++j)
      if (offTope.base.less(j, i)) minimal = false;
    if (minimal) ++minima;
  }
  CHECK(minima == 3);

  SignSystem one = fullCube(1);
  TopePoset twoChain = topeOrder(one, SignVector(one.ground(), "+"));
  CHECK(twoChain.base.size() == 2);
  CHECK(twoChain.base.less("+", "-"));

  CHECK_THROWS(topeOrder(c3, SignVector(g, "+0-")));
}

TEST_CASE("pointed tope posets") {
  SignSystem c3 = cycleOM(3);
  auto g = c3.ground();
  PointedTopePoset p = pointedTopePoset(c3, SignVector(g, "+-+"), "e3");
  CHECK(p.members.size() == 3);
  for (const auto& m : p.members) CHECK(m[2] == Sign::Minus);
  for (std::size_t i = 1; i < p.underlying.size(); ++i)
    CHECK(p.underlying.less(0, i));  // bottom below everything

  SignSystem one = fullCube(1);
  PointedTopePoset q = pointedTopePoset(one, SignVector(one.ground(), "+"), "e1");
  CHECK(q.members.size() == 1);
  CHECK(q.members[0].str() == "-");
}

TEST_CASE("interval mobius values in pointed posets") {
  SignSystem one = fullCube(1);
  auto g = one.ground();
  PointedTopePoset p = pointedTopePoset(one, SignVector(g, "+"), "e1");
  CHECK(intervalMobiusBottom(p) == 1);
  CHECK(intervalMobius(p, SignVector(g, "-")) == -1);

  SignSystem c3 = cycleOM(3);
  auto g3 = c3.ground();
  PointedTopePoset pc = pointedTopePoset(c3, SignVector(g3, "+-+"), "e3");
  // the defining recursion: summing over each lower interval gives zero
  for (const auto& q : pc.members) {
    long long sum = intervalMobiusBottom(pc);
    for (const auto& t : pc.members) {
      std::size_t ti = pc.indexOf(t), qi = pc.indexOf(q);
      if (pc.underlying.leq(ti, qi)) sum += intervalMobius(pc, t);
    }
    CHECK(sum == 0);
  }
  CHECK_THROWS(intervalMobius(pc, SignVector(g3, "+-+")));
}
