#include "comdet/varchenko.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "comdet/tope_poset.hpp"

namespace comdet {

ElementOrder defaultOrder(const GroundSet& ground) {
  ElementOrder order(ground.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return order;
}

void requireSimple(const SignSystem& s) {
  AxiomReport r = checkAxioms(s);
  if (!r.isSimple)
    throw std::invalid_argument("system is not simple: " + r.simplicityWitness);
}

namespace {

std::vector<std::string> topeLabels(const std::vector<SignVector>& ts) {
  std::vector<std::string> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(t.str());
  return out;
}

Poly separatorMonomial(const SignVector& p, const SignVector& q, bool makeSigned) {
  Monomial m;
  for (std::size_t e : separatorIdx(p, q)) {
    Variable v{static_cast<std::int32_t>(e), VarKind::Plain};
    if (makeSigned) v.kind = p[e] == Sign::Plus ? VarKind::Plus : VarKind::Minus;
    m.emplace_back(v.id(), 1);
  }
  std::sort(m.begin(), m.end());
  return Poly::term(1, m);
}

VarchenkoMatrix buildFromTopes(const std::vector<SignVector>& ts, bool makeSigned) {
  VarchenkoMatrix v;
  v.isSigned = makeSigned;
  v.topeList = ts;
  v.matrix = PolyMatrix(topeLabels(ts), topeLabels(ts));
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (std::size_t j = 0; j < ts.size(); ++j)
      v.matrix.at(i, j) = separatorMonomial(ts[i], ts[j], makeSigned);
  return v;
}

// Position of e among the order, higher = larger.
std::vector<std::size_t> orderRank(const ElementOrder& order, std::size_t n) {
  if (order.size() != n) throw std::invalid_argument("element order size mismatch");
  std::vector<std::size_t> rank(n, n);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (order[pos] >= n || rank[order[pos]] != n)
      throw std::invalid_argument("element order is not a permutation");
    rank[order[pos]] = pos;
  }
  return rank;
}

// Order-maximal element of a nonempty index set.
std::size_t maxElement(const std::vector<std::size_t>& elems,
                       const std::vector<std::size_t>& rank) {
  std::size_t best = elems.front();
  for (std::size_t e : elems)
    if (rank[e] > rank[best]) best = e;
  return best;
}

}  // namespace

VarchenkoMatrix buildSigned(const SignSystem& s) {
  requireSimple(s);
  return buildFromTopes(topes(s), true);
}

VarchenkoMatrix buildUnsigned(const SignSystem& s) {
  requireSimple(s);
  return buildFromTopes(topes(s), false);
}

VarchenkoMatrix buildUnsignedFromTopes(const GroundSetPtr& ground,
                                       const std::vector<SignVector>& ts) {
  std::set<std::string> seen;
  for (const auto& t : ts) {
    if (*t.ground() != *ground)
      throw std::invalid_argument("tope over a different ground set: " + t.str());
    if (!t.fullSupport())
      throw std::invalid_argument("tope without full support: " + t.str());
    if (!seen.insert(t.str()).second)
      throw std::invalid_argument("duplicate tope: " + t.str());
  }
  return buildFromTopes(ts, false);
}

PolyMatrix buildMe(const SignSystem& s, const VarchenkoMatrix& v, const std::string& e,
                   const ElementOrder& order) {
  const std::size_t n = s.ground()->size();
  const std::size_t ei = s.ground()->index(e);
  const auto rank = orderRank(order, n);
  const auto& ts = v.topeList;
  PolyMatrix me(v.matrix.rowLabels(), v.matrix.colLabels());

  for (std::size_t c = 0; c < ts.size(); ++c) {
    const SignVector& r = ts[c];
    PointedTopePoset poset = pointedTopePoset(s, r, e);
    for (std::size_t q = 0; q < ts.size(); ++q) {
      if (q == c) {
        me.at(q, c) = Poly(1);
        continue;
      }
      auto sep = separatorIdx(ts[q], r);
      if (sep.empty() || maxElement(sep, rank) != ei) continue;
      long long mu = intervalMobius(poset, ts[q]);
      me.at(q, c) = Poly(-mu) * v.matrix.at(q, c);
    }
  }
  return me;
}

std::vector<SignVector> topesYe(const SignSystem& s, const SignVector& y,
                                const std::string& e) {
  if (!s.contains(y)) throw std::invalid_argument("covector not in the system: " + y.str());
  const std::size_t ei = s.ground()->index(e);
  if (y[ei] != Sign::Zero)
    throw std::invalid_argument("element " + e + " is not in the zero set of " + y.str());

  std::vector<SignVector> out;
  for (const auto& p : topes(s)) {
    if (!y.below(p)) continue;
    // Maximal covector X <= P with X_e = 0 is the composition of all of them.
    std::optional<SignVector> acc;
    for (const auto& x : s.covectors()) {
      if (x[ei] != Sign::Zero || !x.below(p)) continue;
      acc = acc ? compose(*acc, x) : x;
    }
    if (acc && *acc == y) out.push_back(p);
  }
  return out;
}

long long exponentBForElement(const SignSystem& s, const SignVector& y,
                              const std::string& e, const ElementOrder& order) {
  const auto rank = orderRank(order, s.ground()->size());
  auto zs = y.zeroSet();
  if (zs.empty()) return 0;
  if (maxElement(zs, rank) != s.ground()->index(e)) return 0;
  auto tye = topesYe(s, y, e);
  if (tye.size() % 2 != 0)
    throw std::logic_error("odd |T^{Y,e}| for Y=" + y.str() + ", e=" + e);
  return static_cast<long long>(tye.size() / 2);
}

long long exponentB(const SignSystem& s, const SignVector& y, const ElementOrder& order) {
  auto zs = y.zeroSet();
  if (zs.empty()) return 0;
  const auto rank = orderRank(order, s.ground()->size());
  const std::size_t ey = maxElement(zs, rank);
  return exponentBForElement(s, y, s.ground()->name(ey), order);
}

namespace {

Poly factorPoly(const SignSystem& s, const std::vector<std::size_t>& zeroSet,
                bool makeSigned) {
  Poly a(1);
  for (std::size_t e : zeroSet) {
    auto el = static_cast<std::int32_t>(e);
    if (makeSigned)
      a *= Poly::variable(Variable{el, VarKind::Plus}) *
           Poly::variable(Variable{el, VarKind::Minus});
    else
      a *= Poly::variable(Variable{el, VarKind::Plain}, 2);
  }
  return Poly(1) - a;
}

}  // namespace

std::vector<ClosedFormFactor> closedFormDet(const SignSystem& s, bool makeSigned) {
  return closedFormDet(s, makeSigned, defaultOrder(*s.ground()));
}

std::vector<ClosedFormFactor> closedFormDet(const SignSystem& s, bool makeSigned,
                                            const ElementOrder& order) {
  requireSimple(s);
  AxiomReport rep = checkAxioms(s);
  if (!rep.isCOM()) throw std::invalid_argument("system is not a COM");

  // Aggregate exponents over equal zero-sets; a(Y) depends only on z(Y).
  std::map<std::vector<std::size_t>, long long> byZeroSet;
  for (const auto& y : s.covectors()) {
    long long b = exponentB(s, y, order);
    if (b > 0) byZeroSet[y.zeroSet()] += b;
  }

  std::vector<ClosedFormFactor> out;
  for (const auto& [zs, b] : byZeroSet) {
    ClosedFormFactor f;
    f.factor = factorPoly(s, zs, makeSigned);
    f.exponent = b;
    for (std::size_t e : zs) f.zeroSet.insert(s.ground()->name(e));
    out.push_back(std::move(f));
  }
  return out;
}

Poly expandClosedForm(const std::vector<ClosedFormFactor>& factors) {
  Poly out(1);
  for (const auto& f : factors) out *= f.factor.pow(f.exponent);
  return out;
}

BlockCheck blockDecomposition(const SignSystem& s, const std::string& e,
                              const ElementOrder& order) {
  requireSimple(s);
  BlockCheck check;
  check.element = e;
  const std::size_t ei = s.ground()->index(e);

  // Covectors Y with Y_e = 0 and nonempty T^{Y,e}, plus the tope partition.
  std::vector<std::pair<SignVector, std::vector<SignVector>>> blocks;
  std::size_t covered = 0;
  for (const auto& y : s.covectors()) {
    if (y[ei] != Sign::Zero) continue;
    auto tye = topesYe(s, y, e);
    if (tye.empty()) continue;
    covered += tye.size();
    blocks.emplace_back(y, std::move(tye));
  }
  // Topes with no face in the e = 0 hyperplane cross nothing: their M^e row
  // is trivial, so each forms its own singleton block. Covered rows can still
  // reach them, so the singletons go first in the block order.
  const auto allTopes = topes(s);
  std::vector<std::size_t> sorted;
  if (covered != allTopes.size()) {
    std::set<std::string> inBlock;
    for (const auto& [y, tye] : blocks)
      for (const auto& t : tye) inBlock.insert(t.str());
    for (const auto& t : allTopes)
      if (!inBlock.count(t.str())) {
        sorted.push_back(blocks.size());
        blocks.emplace_back(t, std::vector<SignVector>{t});
      }
  }
  // Order covector blocks compatibly with the covector order: Y before Y'
  // when Y < Y'.
  std::vector<char> placed(blocks.size(), 0);
  for (std::size_t i : sorted) placed[i] = 1;
  while (sorted.size() < blocks.size()) {
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (placed[i]) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < blocks.size(); ++j) {
        if (placed[j] || j == i) continue;
        if (blocks[j].first.below(blocks[i].first) && blocks[j].first != blocks[i].first) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        placed[i] = 1;
        sorted.push_back(i);
        break;
      }
    }
  }

  std::vector<std::string> labelOrder;
  for (std::size_t i : sorted) {
    std::vector<std::string> blockLabels;
    for (const auto& t : blocks[i].second) {
      blockLabels.push_back(t.str());
      labelOrder.push_back(t.str());
    }
    check.blocks.push_back(std::move(blockLabels));
  }

  VarchenkoMatrix v = buildSigned(s);
  PolyMatrix me = buildMe(s, v, e, order);
  PolyMatrix reordered = me.reordered(labelOrder);
  check.triangular = blockTriangularCheck(reordered, check.blocks);

  check.blockDetsMatch = true;
  std::size_t offset = 0;
  for (std::size_t bi = 0; bi < sorted.size(); ++bi) {
    const auto& [y, tye] = blocks[sorted[bi]];
    const std::size_t k = tye.size();
    PolyMatrix sub(check.blocks[bi], check.blocks[bi]);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) sub.at(r, c) = reordered.at(offset + r, offset + c);
    offset += k;
    Poly det = bareissDet(sub);
    long long bye = exponentBForElement(s, y, e, order);
    Poly expected = factorPoly(s, y.zeroSet(), true).pow(bye);
    if (det != expected) check.blockDetsMatch = false;
  }
  return check;
}

long long contractionMobius(const SignSystem& s, const SignVector& y, const std::string& e,
                            const SignVector& q, const SignVector& r) {
  const std::size_t ei = s.ground()->index(e);
  auto zs = y.zeroSet();
  if (zs.empty() || zs.back() != ei) {
    // max of z(Y) in ground order; callers pass e = e_Y
    const ElementOrder order = defaultOrder(*s.ground());
    if (zs.empty() || maxElement(zs, orderRank(order, s.ground()->size())) != ei)
      throw std::invalid_argument("element is not the maximal element of z(Y)");
  }
  auto tye = topesYe(s, y, e);
  auto isMember = [&](const SignVector& t) {
    return std::any_of(tye.begin(), tye.end(), [&](const SignVector& u) { return u == t; });
  };
  if (!isMember(q) || !isMember(r))
    throw std::invalid_argument("topes are not both in T^{Y,e}");

  PointedTopePoset poset = pointedTopePoset(s, r, e);
  long long direct = intervalMobius(poset, q);

  // Closed form: rank of the OM on z(Y) when Q and R are opposite there.
  SignSystem faceOM = face(s, y);
  bool opposite = true;
  for (std::size_t z : zs)
    if (q[z] != negate(r[z])) { opposite = false; break; }
  long long closed = 0;
  if (opposite) closed = (rank(faceOM) % 2 == 0) ? 1 : -1;

  if (direct != closed)
    throw std::logic_error("contraction Moebius mismatch: direct=" + std::to_string(direct) +
                           " closed=" + std::to_string(closed));
  return direct;
}

namespace {

PolyMatrix submatrix(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) {
  std::vector<std::string> rl, cl;
  for (std::size_t r : rows) rl.push_back(m.rowLabels()[r]);
  for (std::size_t c : cols) cl.push_back(m.colLabels()[c]);
  PolyMatrix out(rl, cl);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) out.at(r, c) = m.at(rows[r], cols[c]);
  return out;
}

}  // namespace

bool FactorReport::allHold() const {
  if (!fac1Holds || !perElementHolds || !chainHolds || !match) return false;
  for (const auto& b : blockChecks)
    if (!b.triangular || !b.blockDetsMatch) return false;
  return true;
}

FactorReport verifyFactorChain(const SignSystem& s, bool makeSigned) {
  return verifyFactorChain(s, makeSigned, defaultOrder(*s.ground()));
}

FactorReport verifyFactorChain(const SignSystem& s, bool makeSigned,
                               const ElementOrder& order) {
  AxiomReport rep = checkAxioms(s);
  if (!rep.isCOM()) throw std::invalid_argument("system is not a COM");
  requireSimple(s);

  FactorReport report;
  const std::size_t n = s.ground()->size();
  orderRank(order, n);  // validates the permutation
  VarchenkoMatrix v = makeSigned ? buildSigned(s) : buildUnsigned(s);
  const auto& ts = v.topeList;

  // (iii) full chain, and collect the factors.
  PolyMatrix product = PolyMatrix::identity(v.matrix.rowLabels());
  for (std::size_t pos = 0; pos < n; ++pos) {
    PolyMatrix me = buildMe(s, v, s.ground()->name(order[pos]), order);
    product = matMul(product, me);
    report.perElementFactors.push_back(std::move(me));
  }
  report.chainHolds = product == v.matrix;

  if (n == 0) {
    report.fac1Holds = true;
    report.perElementHolds = true;
  } else {
    const std::size_t ei = order.back();
    const std::string e = s.ground()->name(ei);
    const PolyMatrix& me = report.perElementFactors.back();

    // (i) Half-block identities for the maximal element.
    std::vector<std::size_t> plusIdx, minusIdx;
    for (std::size_t i = 0; i < ts.size(); ++i)
      (ts[i][ei] == Sign::Plus ? plusIdx : minusIdx).push_back(i);
    PolyMatrix vmm = submatrix(v.matrix, minusIdx, minusIdx);
    PolyMatrix vmp = submatrix(v.matrix, minusIdx, plusIdx);
    PolyMatrix vpm = submatrix(v.matrix, plusIdx, minusIdx);
    PolyMatrix vpp = submatrix(v.matrix, plusIdx, plusIdx);
    PolyMatrix ue = submatrix(me, minusIdx, plusIdx);
    PolyMatrix le = submatrix(me, plusIdx, minusIdx);
    report.fac1Holds = (matMul(vmm, ue) == vmp) && (matMul(vpp, le) == vpm);

    // (ii) V = V_{x_e=0} * M^e.
    PolyMatrix vZero =
        v.matrix.map([&](const Poly& p) { return p.setZero(static_cast<std::int32_t>(ei)); });
    report.perElementHolds = matMul(vZero, me) == v.matrix;
  }

  for (std::size_t e = 0; e < n; ++e)
    report.blockChecks.push_back(blockDecomposition(s, s.ground()->name(e), order));

  report.detSymbolic = bareissDet(v.matrix);
  report.detClosedForm = closedFormDet(s, makeSigned, order);
  report.match = report.detSymbolic == expandClosedForm(report.detClosedForm);
  return report;
}

}  // namespace comdet
