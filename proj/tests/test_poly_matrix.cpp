#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "comdet/constructions.hpp"
#include "comdet/poly_matrix.hpp"
#include "comdet/varchenko.hpp"

using namespace comdet;

namespace {

Poly xu(int e, int exp = 1) { return Poly::variable(Variable{e, VarKind::Plain}, exp); }

PolyMatrix randomMatrix(std::mt19937_64& rng, std::size_t n, int vars = 2) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("r" + std::to_string(i));
  PolyMatrix m(labels, labels);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      // sparse: most entries are small constants, a few carry variables
      switch (rng() % 4) {
        case 0: m.at(r, c) = Poly(static_cast<long>(rng() % 5) - 2); break;
        case 1: m.at(r, c) = xu(static_cast<int>(rng() % vars)); break;
        case 2: m.at(r, c) = Poly(1) + xu(static_cast<int>(rng() % vars)); break;
        default: break;  // zero
      }
    }
  return m;
}

}  // namespace

TEST_CASE("shape and label bookkeeping") {
  PolyMatrix m({"a", "b"}, {"a", "b"});
  CHECK(m.rows() == 2);
  CHECK(m.at(0, 1).isZero());
  PolyMatrix id = PolyMatrix::identity({"a", "b"});
  CHECK(id.at(0, 0).isOne());
  CHECK(id.at(1, 0).isZero());
}

TEST_CASE("matrix product") {
  PolyMatrix a({"r"}, {"c1", "c2"});
  a.at(0, 0) = Poly(1);
  a.at(0, 1) = xu(0);
  PolyMatrix b({"c1", "c2"}, {"k"});
  b.at(0, 0) = Poly(1);
  b.at(1, 0) = xu(1);
  PolyMatrix p = matMul(a, b);
  CHECK(p.rows() == 1);
  CHECK(p.at(0, 0) == Poly(1) + xu(0) * xu(1));

  PolyMatrix i2 = PolyMatrix::identity({"c1", "c2"});
  CHECK(matMul(a, i2) == a);
  CHECK(matMul(PolyMatrix::identity({"r"}), a) == a);
  CHECK_THROWS(matMul(a, a));  // label mismatch
}

TEST_CASE("fraction-free determinant basics") {
  PolyMatrix m({"p", "q"}, {"p", "q"});
  m.at(0, 0) = Poly(1);
  m.at(0, 1) = Poly::variable(Variable{0, VarKind::Minus});
  m.at(1, 0) = Poly::variable(Variable{0, VarKind::Plus});
  m.at(1, 1) = Poly(1);
  CHECK(bareissDet(m) == Poly(1) - Poly::variable(Variable{0, VarKind::Plus}) *
                                       Poly::variable(Variable{0, VarKind::Minus}));

  CHECK(bareissDet(PolyMatrix::identity({"a", "b", "c", "d"})).isOne());

  PolyMatrix swap({"a", "b"}, {"a", "b"});
  swap.at(0, 1) = Poly(1);
  swap.at(1, 0) = Poly(1);
  CHECK(bareissDet(swap) == Poly(-1));

  PolyMatrix zeroCol({"a", "b"}, {"a", "b"});
  zeroCol.at(0, 1) = Poly(1);
  zeroCol.at(1, 1) = Poly(1);
  CHECK(bareissDet(zeroCol).isZero());

  PolyMatrix rect({"a"}, {"a", "b"});
  CHECK_THROWS(bareissDet(rect));
}

TEST_CASE("cofactor expansion oracle") {
  PolyMatrix one({"a"}, {"a"});
  one.at(0, 0) = xu(0) + Poly(2);
  CHECK(cofactorDet(one) == xu(0) + Poly(2));

  std::mt19937_64 rng(12);
  PolyMatrix m = randomMatrix(rng, 2);
  CHECK(cofactorDet(m) == m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0));

  PolyMatrix big = randomMatrix(rng, 11);
  CHECK_THROWS(cofactorDet(big));
}

TEST_CASE("both determinants agree on random sparse matrices") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 60; ++trial) {
    PolyMatrix m = randomMatrix(rng, 2 + rng() % 4);
    CHECK(bareissDet(m) == cofactorDet(m));
  }
}

TEST_CASE("both determinants agree on a tope distance matrix") {
  SignSystem c3 = cycleOM(3);
  VarchenkoMatrix v = buildUnsigned(c3);
  Poly det = bareissDet(v.matrix);
  CHECK(det == cofactorDet(v.matrix));
  Poly expect = (Poly(1) - xu(0, 2)).pow(2) * (Poly(1) - xu(1, 2)).pow(2) *
                (Poly(1) - xu(2, 2)).pow(2) *
                (Poly(1) - xu(0, 2) * xu(1, 2) * xu(2, 2));
  CHECK(det == expect);
}

TEST_CASE("determinant is multiplicative") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + rng() % 3;
    PolyMatrix a = randomMatrix(rng, n), b = randomMatrix(rng, n);
    CHECK(bareissDet(matMul(a, b)) == bareissDet(a) * bareissDet(b));
  }
}

TEST_CASE("simultaneous row and column reorder keeps the determinant") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    std::size_t n = 2 + rng() % 4;
    PolyMatrix m = randomMatrix(rng, n);
    std::vector<std::string> order = m.rowLabels();
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(bareissDet(m.reordered(order)) == bareissDet(m));
  }
}

TEST_CASE("integer evaluation commutes with the determinant") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng() % 3;
    PolyMatrix m = randomMatrix(rng, n);
    long v0 = static_cast<long>(rng() % 9) - 4, v1 = static_cast<long>(rng() % 9) - 4;
    auto assign = [&](Variable v) { return mpz_class(v.element == 0 ? v0 : v1); };
    // evaluate entries first, then take the integer determinant
    PolyMatrix num = m.map([&](const Poly& p) { return Poly(p.evalInt(assign)); });
    CHECK(bareissDet(num) == Poly(bareissDet(m).evalInt(assign)));
  }
}

TEST_CASE("block triangular test") {
  PolyMatrix diag = PolyMatrix::identity({"a", "b"});
  CHECK(blockTriangularCheck(diag, {{"a"}, {"b"}}));

  PolyMatrix upper({"r1", "r2"}, {"r1", "r2"});
  upper.at(0, 0) = Poly(1);
  upper.at(0, 1) = xu(0);
  upper.at(1, 1) = Poly(1);
  CHECK_FALSE(blockTriangularCheck(upper, {{"r1"}, {"r2"}}));
  CHECK(blockTriangularCheck(upper, {{"r1", "r2"}}));

  PolyMatrix lower({"r1", "r2"}, {"r1", "r2"});
  lower.at(0, 0) = Poly(1);
  lower.at(1, 0) = xu(0);
  lower.at(1, 1) = Poly(1);
  CHECK(blockTriangularCheck(lower, {{"r1"}, {"r2"}}));

  CHECK_THROWS(blockTriangularCheck(diag, {{"a"}}));  // partition misses a label
}
