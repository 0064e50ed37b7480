#include "comdet/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace comdet {

namespace {

// Sign vectors of the directed n-cycle induced by vertex level functions:
// arc (v_i -> v_{i+1}) gets the sign of level(v_i) - level(v_{i+1}).
std::set<std::string> cycleCovectorStrings(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle OM needs n >= 3");
  if (n > 8) throw std::invalid_argument("cycle OM guard: n <= 8");
  std::set<std::string> out;
  std::vector<std::size_t> level(n, 0);
  while (true) {
    std::string cov(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t a = level[i], b = level[(i + 1) % n];
      cov[i] = a > b ? '+' : (a < b ? '-' : '0');
    }
    out.insert(cov);
    std::size_t i = 0;
    while (i < n && level[i] + 1 == n) level[i++] = 0;
    if (i == n) break;
    ++level[i];
  }
  return out;
}

}  // namespace

SignSystem cycleOM(std::size_t n) {
  GroundSetPtr ground = defaultGroundSet(n);
  std::vector<SignVector> covs;
  for (const auto& s : cycleCovectorStrings(n)) covs.emplace_back(ground, s);
  return SignSystem(ground, std::move(covs));
}

bool isCycleSystem(const SignSystem& s) {
  const std::size_t n = s.ground()->size();
  if (n < 3) return false;
  std::set<std::string> have;
  for (const auto& x : s.covectors()) have.insert(x.str());
  return have == cycleCovectorStrings(n);
}

SignSystem fullCube(std::size_t n) {
  GroundSetPtr ground = defaultGroundSet(n);
  std::vector<SignVector> covs;
  std::string cur(n, '0');
  const char symbols[3] = {'0', '+', '-'};
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) cur[i] = symbols[digits[i]];
    covs.emplace_back(ground, cur);
    std::size_t i = 0;
    while (i < n && digits[i] == 2) digits[i++] = 0;
    if (i == n) break;
    ++digits[i];
  }
  return SignSystem(ground, std::move(covs));
}

FinitePoset posetQ() {
  return FinitePoset({"a", "b", "c", "d", "e"},
                     {{"a", "c"}, {"b", "c"}, {"a", "d"}, {"b", "d"}, {"b", "e"}});
}

namespace {

std::vector<std::vector<std::size_t>> ideals(const FinitePoset& p) {
  const std::size_t n = p.size();
  if (n > 20) throw std::invalid_argument("ideal enumeration guard: <= 20 elements");
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (1ull << n); ++mask) {
    bool down = true;
    for (std::size_t i = 0; i < n && down; ++i)
      if (mask & (1ull << i))
        for (std::size_t j = 0; j < n; ++j)
          if (p.less(j, i) && !(mask & (1ull << j))) { down = false; break; }
    if (!down) continue;
    std::vector<std::size_t> ideal;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) ideal.push_back(i);
    out.push_back(std::move(ideal));
  }
  return out;
}

std::vector<std::size_t> minimalOutside(const FinitePoset& p,
                                        const std::vector<char>& inIdeal) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (inIdeal[i]) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (!inIdeal[j] && p.less(j, i)) { minimal = false; break; }
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<std::vector<std::size_t>> antichains(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
    bool anti = true;
    for (std::size_t i = 0; i < n && anti; ++i)
      if (mask & (1ull << i))
        for (std::size_t j = i + 1; j < n; ++j)
          if ((mask & (1ull << j)) && p.comparable(i, j)) { anti = false; break; }
    if (!anti) continue;
    std::vector<std::size_t> a;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ull << i)) a.push_back(i);
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

SignSystem idealsCOM(const FinitePoset& p) {
  GroundSetPtr ground = makeGroundSet(p.elements());
  const std::size_t n = p.size();
  std::vector<SignVector> covs;
  for (const auto& ideal : ideals(p)) {
    std::vector<char> inIdeal(n, 0);
    for (std::size_t i : ideal) inIdeal[i] = 1;
    const auto mins = minimalOutside(p, inIdeal);
    // Faces of the cube spanned by the minimal elements of the complement.
    for (std::size_t mask = 0; mask < (1ull << mins.size()); ++mask) {
      std::string cov;
      cov.reserve(n);
      std::vector<char> zero(n, 0);
      for (std::size_t k = 0; k < mins.size(); ++k)
        if (mask & (1ull << k)) zero[mins[k]] = 1;
      for (std::size_t i = 0; i < n; ++i)
        cov.push_back(zero[i] ? '0' : (inIdeal[i] ? '-' : '+'));
      covs.emplace_back(ground, cov);
    }
  }
  std::sort(covs.begin(), covs.end());
  covs.erase(std::unique(covs.begin(), covs.end()), covs.end());
  return SignSystem(ground, std::move(covs));
}

std::vector<ClosedFormFactor> idealsClosedForm(const FinitePoset& p) {
  std::vector<long long> count(p.size(), 0);
  for (const auto& a : antichains(p))
    for (std::size_t i : a) ++count[i];
  std::vector<ClosedFormFactor> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (count[i] == 0) continue;
    ClosedFormFactor f;
    f.factor = Poly(1) - Poly::variable(Variable{static_cast<std::int32_t>(i), VarKind::Plain}, 2);
    f.exponent = count[i];
    f.zeroSet.insert(p.element(i));
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

void extendRec(const FinitePoset& p, std::vector<char>& used, std::vector<std::size_t>& prefix,
               std::vector<std::vector<std::size_t>>& out, std::size_t limit) {
  if (prefix.size() == p.size()) {
    if (limit && out.size() >= limit)
      throw std::invalid_argument("linear extension guard exceeded");
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (used[i]) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (!used[j] && p.less(j, i)) { minimal = false; break; }
    if (!minimal) continue;
    used[i] = 1;
    prefix.push_back(i);
    extendRec(p, used, prefix, out, limit);
    prefix.pop_back();
    used[i] = 0;
  }
}

using Blocks = std::vector<std::vector<std::size_t>>;

void weakExtRec(const FinitePoset& p, std::vector<char>& used, Blocks& blocks,
                std::vector<Blocks>& out, std::size_t limit) {
  if (std::all_of(used.begin(), used.end(), [](char c) { return c != 0; })) {
    if (limit && out.size() >= limit)
      throw std::invalid_argument("weak extension guard exceeded");
    out.push_back(blocks);
    return;
  }
  std::vector<std::size_t> mins;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (used[i]) continue;
    bool minimal = true;
    for (std::size_t j = 0; j < p.size(); ++j)
      if (!used[j] && p.less(j, i)) { minimal = false; break; }
    if (minimal) mins.push_back(i);
  }
  for (std::size_t mask = 1; mask < (1ull << mins.size()); ++mask) {
    std::vector<std::size_t> block;
    for (std::size_t k = 0; k < mins.size(); ++k)
      if (mask & (1ull << k)) {
        block.push_back(mins[k]);
        used[mins[k]] = 1;
      }
    blocks.push_back(block);
    weakExtRec(p, used, blocks, out, limit);
    blocks.pop_back();
    for (std::size_t i : block) used[i] = 0;
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> linearExtensions(const FinitePoset& p, std::size_t limit) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> used(p.size(), 0);
  std::vector<std::size_t> prefix;
  extendRec(p, used, prefix, out, limit);
  return out;
}

std::string incPairName(const FinitePoset& p, const std::vector<std::size_t>& l0,
                        std::size_t a, std::size_t b) {
  std::vector<std::size_t> pos(p.size());
  for (std::size_t i = 0; i < l0.size(); ++i) pos[l0[i]] = i;
  if (pos[a] > pos[b]) std::swap(a, b);
  return p.element(a) + p.element(b);
}

namespace {

void requireLinearExtension(const FinitePoset& p, const std::vector<std::size_t>& l0) {
  if (l0.size() != p.size()) throw std::invalid_argument("L0 has wrong length");
  std::vector<std::size_t> pos(p.size(), p.size());
  for (std::size_t i = 0; i < l0.size(); ++i) {
    if (l0[i] >= p.size() || pos[l0[i]] != p.size())
      throw std::invalid_argument("L0 is not a permutation");
    pos[l0[i]] = i;
  }
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.less(a, b) && pos[a] > pos[b])
        throw std::invalid_argument("L0 is not a linear extension");
}

}  // namespace

SignSystem rankingCOM(const FinitePoset& p, const std::vector<std::size_t>& l0) {
  requireLinearExtension(p, l0);
  std::vector<std::size_t> pos(p.size());
  for (std::size_t i = 0; i < l0.size(); ++i) pos[l0[i]] = i;

  // Incomparable pairs (a, b) with a before b in L0, in L0-lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < l0.size(); ++i)
    for (std::size_t j = i + 1; j < l0.size(); ++j)
      if (!p.comparable(l0[i], l0[j])) {
        pairs.emplace_back(l0[i], l0[j]);
        names.push_back(p.element(l0[i]) + p.element(l0[j]));
      }
  GroundSetPtr ground = makeGroundSet(names);

  std::vector<Blocks> weak;
  {
    std::vector<char> used(p.size(), 0);
    Blocks blocks;
    weakExtRec(p, used, blocks, weak, 4096);
  }

  std::vector<SignVector> covs;
  for (const auto& blocks : weak) {
    std::vector<std::size_t> blockOf(p.size());
    for (std::size_t bi = 0; bi < blocks.size(); ++bi)
      for (std::size_t i : blocks[bi]) blockOf[i] = bi;
    std::string cov;
    cov.reserve(pairs.size());
    for (const auto& [a, b] : pairs) {
      if (blockOf[a] == blockOf[b])
        cov.push_back('0');
      else
        cov.push_back(blockOf[a] < blockOf[b] ? '+' : '-');
    }
    covs.emplace_back(ground, cov);
  }
  std::sort(covs.begin(), covs.end());
  covs.erase(std::unique(covs.begin(), covs.end()), covs.end());
  return SignSystem(ground, std::move(covs));
}

SignSystem rankingCOM(const FinitePoset& p) {
  auto exts = linearExtensions(p, 4096);
  // Lexicographically least by element index sequence.
  auto least = *std::min_element(exts.begin(), exts.end());
  return rankingCOM(p, least);
}

namespace {

// Quotient poset with the antichain a merged into a single element.
FinitePoset contractAntichain(const FinitePoset& p, const std::vector<std::size_t>& a) {
  std::vector<char> inA(p.size(), 0);
  for (std::size_t i : a) inA[i] = 1;
  std::vector<std::string> ids{"[]"};
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!inA[i]) ids.push_back(p.element(i));
  std::vector<std::pair<std::string, std::string>> rels;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (!p.less(i, j)) continue;
      const std::string from = inA[i] ? "[]" : p.element(i);
      const std::string to = inA[j] ? "[]" : p.element(j);
      if (from != to) rels.emplace_back(from, to);
    }
  return FinitePoset(std::move(ids), rels);
}

}  // namespace

std::vector<ClosedFormFactor> rankingClosedForm(const FinitePoset& p) {
  auto exts = linearExtensions(p, 4096);
  auto l0 = *std::min_element(exts.begin(), exts.end());
  std::vector<std::size_t> pos(p.size());
  for (std::size_t i = 0; i < l0.size(); ++i) pos[l0[i]] = i;

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < l0.size(); ++i)
    for (std::size_t j = i + 1; j < l0.size(); ++j)
      if (!p.comparable(l0[i], l0[j])) pairs.emplace_back(l0[i], l0[j]);
  auto pairIndex = [&](std::size_t a, std::size_t b) {
    if (pos[a] > pos[b]) std::swap(a, b);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (pairs[k] == std::make_pair(a, b)) return k;
    throw std::logic_error("pair not incomparable");
  };

  std::vector<ClosedFormFactor> out;
  for (const auto& a : antichains(p)) {
    if (a.size() < 2) continue;
    Poly prod(1);
    ClosedFormFactor f;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        std::size_t k = pairIndex(a[i], a[j]);
        prod *= Poly::variable(Variable{static_cast<std::int32_t>(k), VarKind::Plain}, 2);
        f.zeroSet.insert(incPairName(p, l0, a[i], a[j]));
      }
    f.factor = Poly(1) - prod;
    // One weak extension per placement of the tied block A inside a total
    // order of the remaining elements, i.e. per linear extension of the
    // quotient poset with A contracted; each contributes b = (|A|-2)!.
    f.exponent = 1;
    for (std::size_t k = 2; k < a.size(); ++k) f.exponent *= static_cast<long long>(k - 1);
    f.exponent *= static_cast<long long>(linearExtensions(contractAntichain(p, a), 4096).size());
    out.push_back(std::move(f));
  }
  return out;
}

std::pair<GroundSetPtr, std::vector<SignVector>> k4SubdivisionTopes() {
  GroundSetPtr ground = makeGroundSet({"1", "2", "3", "4"});
  const std::vector<std::vector<std::size_t>> flips = {
      {}, {0}, {1}, {2}, {0, 3}, {0, 2, 3}, {2, 3}, {1, 2, 3}, {1, 3}, {0, 1, 3}};
  std::vector<SignVector> out;
  for (const auto& f : flips) {
    std::string t = "++++";
    for (std::size_t i : f) t[i] = '-';
    out.emplace_back(ground, t);
  }
  return {ground, out};
}

namespace {

SignSystem productSystem(const SignSystem& a, const SignSystem& b) {
  std::vector<std::string> names;
  const std::size_t n = a.ground()->size() + b.ground()->size();
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  GroundSetPtr ground = makeGroundSet(names);
  std::vector<SignVector> covs;
  for (const auto& x : a.covectors())
    for (const auto& y : b.covectors()) covs.emplace_back(ground, x.str() + y.str());
  return SignSystem(ground, std::move(covs));
}

SignSystem renameElements(const SignSystem& s) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= s.ground()->size(); ++i) names.push_back("e" + std::to_string(i));
  GroundSetPtr ground = makeGroundSet(names);
  std::vector<SignVector> covs;
  for (const auto& x : s.covectors()) covs.emplace_back(ground, x.str());
  return SignSystem(ground, std::move(covs));
}

}  // namespace

SignSystem randomCOM(std::uint64_t seed, const RandomBudget& budget) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  for (std::size_t attempt = 0; attempt < budget.maxRetries; ++attempt) {
    SignSystem base;
    switch (pick(5)) {
      case 0: base = cycleOM(3); break;
      case 1: base = cycleOM(4); break;
      case 2: base = fullCube(2); break;
      case 3: base = fullCube(3); break;
      default: base = productSystem(cycleOM(3), fullCube(1 + pick(2))); break;
    }
    if (pick(3) == 0) base = productSystem(base, fullCube(1));

    const std::size_t ops = pick(4);
    bool failed = false;
    for (std::size_t k = 0; k < ops && !failed; ++k) {
      if (base.ground()->size() <= 1) break;
      const std::string el = base.ground()->name(pick(base.ground()->size()));
      try {
        switch (pick(3)) {
          case 0: base = deletion(base, {el}); break;
          case 1: base = topalFiber(base, {el}, {}); break;
          default: base = topalFiber(base, {}, {el}); break;
        }
      } catch (const std::exception&) {
        failed = true;
      }
    }
    if (failed) continue;
    base = renameElements(base);
    if (base.ground()->size() == 0 || base.ground()->size() > budget.maxElements) continue;
    if (topes(base).size() == 0 || topes(base).size() > budget.maxTopes) continue;
    AxiomReport rep = checkAxioms(base);
    if (!rep.isCOM() || !rep.isSimple) continue;
    return base;
  }
  throw std::runtime_error("randomCOM: budget unsatisfiable after retries");
}

}  // namespace comdet
