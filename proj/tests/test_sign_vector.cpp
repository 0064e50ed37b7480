#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "comdet/sign_vector.hpp"

using namespace comdet;

namespace {

GroundSetPtr g3() { return defaultGroundSet(3); }

SignVector sv(const GroundSetPtr& g, const std::string& s) { return SignVector(g, s); }

SignVector randomVector(const GroundSetPtr& g, std::mt19937_64& rng) {
  std::string s;
  for (std::size_t i = 0; i < g->size(); ++i) s += "0+-"[rng() % 3];
  return SignVector(g, s);
}

}  // namespace

TEST_CASE("ground set rejects duplicates and resolves names") {
  CHECK_THROWS(GroundSet({"a", "a"}));
  auto g = makeGroundSet({"a", "b"});
  CHECK(g->index("b") == 1);
  CHECK(g->contains("a"));
  CHECK_FALSE(g->contains("c"));
  CHECK_THROWS(g->index("c"));
}

TEST_CASE("string round trip and parse errors") {
  auto g = g3();
  CHECK(sv(g, "+-0").str() == "+-0");
  CHECK_THROWS(sv(g, "+-"));
  CHECK_THROWS(sv(g, "+-x"));
}

TEST_CASE("composition cases") {
  auto g = g3();
  CHECK(compose(sv(g, "+-0"), sv(g, "0+-")) == sv(g, "+--"));
  CHECK(compose(sv(g, "000"), sv(g, "-+-")) == sv(g, "-+-"));
  SignVector x = sv(g, "0-+");
  CHECK(compose(x, x) == x);
  auto h = defaultGroundSet(2);
  CHECK_THROWS(compose(x, sv(h, "+-")));
}

TEST_CASE("separator cases") {
  auto g = g3();
  CHECK(separator(sv(g, "++-"), sv(g, "+-+")) == std::set<std::string>{"e2", "e3"});
  CHECK(separator(sv(g, "+-0"), sv(g, "-+0")) == std::set<std::string>{"e1", "e2"});
  SignVector x = sv(g, "+0-");
  CHECK(separator(x, x).empty());
  // zero against nonzero never separates
  CHECK(separator(sv(g, "000"), sv(g, "+-+")).empty());
}

TEST_CASE("support and zero set partition the ground set") {
  auto g = g3();
  SignVector x = sv(g, "+0-");
  CHECK(x.supportNames() == std::set<std::string>{"e1", "e3"});
  CHECK(x.zeroSetNames() == std::set<std::string>{"e2"});
  CHECK(sv(g, "000").support().empty());
  CHECK(sv(g, "000").zeroSet().size() == 3);
  CHECK(sv(g, "+-0").zeroSetNames() == std::set<std::string>{"e3"});
}

TEST_CASE("reorientation flips the named coordinates") {
  auto g = g3();
  CHECK(reorient(sv(g, "+-0"), {"e1"}) == sv(g, "--0"));
  SignVector x = sv(g, "0+-");
  CHECK(reorient(x, {}) == x);
  CHECK(reorient(reorient(x, {"e1", "e3"}), {"e1", "e3"}) == x);
  CHECK_THROWS(reorient(x, {"zz"}));
}

TEST_CASE("restriction to a sub-ground-set") {
  auto g = g3();
  SignVector r = restrict(sv(g, "+-0"), {"e1", "e3"});
  CHECK(r.str() == "+0");
  CHECK(r.ground()->names() == std::vector<std::string>{"e1", "e3"});
  CHECK(restrict(sv(g, "+-+"), {"e2"}).str() == "-");
  SignVector x = sv(g, "-0+");
  CHECK(restrict(x, g->names()).str() == x.str());
}

TEST_CASE("negation and full support") {
  auto g = g3();
  CHECK(sv(g, "+0-").negated() == sv(g, "-0+"));
  CHECK(sv(g, "+-+").fullSupport());
  CHECK_FALSE(sv(g, "+0+").fullSupport());
  CHECK(allZero(g).isZero());
  CHECK(allPlus(g).str() == "+++");
  CHECK(allMinus(g).str() == "---");
}

TEST_CASE("componentwise order") {
  auto g = g3();
  CHECK(sv(g, "+00").below(sv(g, "+-+")));
  CHECK_FALSE(sv(g, "+00").below(sv(g, "--+")));
  CHECK(allZero(g).below(sv(g, "-+-")));
  SignVector x = sv(g, "0+-");
  CHECK(x.below(x));
}

TEST_CASE("composition is associative") {
  auto g = defaultGroundSet(4);
  std::mt19937_64 rng(101);
  for (int i = 0; i < 300; ++i) {
    SignVector x = randomVector(g, rng), y = randomVector(g, rng), z = randomVector(g, rng);
    CHECK(compose(compose(x, y), z) == compose(x, compose(y, z)));
  }
}

TEST_CASE("support of a composition is the union of supports") {
  auto g = defaultGroundSet(4);
  std::mt19937_64 rng(102);
  for (int i = 0; i < 300; ++i) {
    SignVector x = randomVector(g, rng), y = randomVector(g, rng);
    std::set<std::string> expect = x.supportNames();
    auto sy = y.supportNames();
    expect.insert(sy.begin(), sy.end());
    CHECK(compose(x, y).supportNames() == expect);
  }
}

TEST_CASE("separator is symmetric and sits inside both supports") {
  auto g = defaultGroundSet(4);
  std::mt19937_64 rng(103);
  for (int i = 0; i < 300; ++i) {
    SignVector x = randomVector(g, rng), y = randomVector(g, rng);
    auto s = separator(x, y);
    CHECK(s == separator(y, x));
    for (const auto& e : s) {
      CHECK(x.supportNames().count(e) == 1);
      CHECK(y.supportNames().count(e) == 1);
    }
  }
}

TEST_CASE("full-support vectors separate exactly where they differ") {
  auto g = defaultGroundSet(4);
  std::mt19937_64 rng(104);
  for (int i = 0; i < 200; ++i) {
    std::string a, b;
    for (int k = 0; k < 4; ++k) {
      a += "+-"[rng() % 2];
      b += "+-"[rng() % 2];
    }
    SignVector x(g, a), y(g, b);
    std::set<std::string> diff;
    for (std::size_t k = 0; k < 4; ++k)
      if (a[k] != b[k]) diff.insert(g->name(k));
    CHECK(separator(x, y) == diff);
  }
}

TEST_CASE("reorientation commutes with composition") {
  auto g = defaultGroundSet(4);
  std::mt19937_64 rng(105);
  for (int i = 0; i < 300; ++i) {
    SignVector x = randomVector(g, rng), y = randomVector(g, rng);
    std::set<std::string> flip;
    for (std::size_t k = 0; k < 4; ++k)
      if (rng() % 2) flip.insert(g->name(k));
    CHECK(reorient(compose(x, y), flip) == compose(reorient(x, flip), reorient(y, flip)));
  }
}
