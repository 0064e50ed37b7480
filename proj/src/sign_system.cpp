#include "comdet/sign_system.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace comdet {

SignSystem::SignSystem(GroundSetPtr ground, std::vector<SignVector> covectors)
    : ground_(std::move(ground)), covectors_(std::move(covectors)) {
  if (!ground_) throw std::invalid_argument("null ground set");
  std::set<std::string> seen;
  for (const auto& x : covectors_) {
    if (*x.ground() != *ground_)
      throw std::invalid_argument("covector over a different ground set: " + x.str());
    if (!seen.insert(x.str()).second)
      throw std::invalid_argument("duplicate covector: " + x.str());
  }
}

bool SignSystem::contains(const SignVector& x) const {
  return std::any_of(covectors_.begin(), covectors_.end(),
                     [&](const SignVector& y) { return y == x; });
}

namespace {

Sign signProduct(Sign a, Sign b) {
  if (a == Sign::Zero || b == Sign::Zero) return Sign::Zero;
  return a == b ? Sign::Plus : Sign::Minus;
}

}  // namespace

AxiomReport checkAxioms(const SignSystem& s) {
  AxiomReport report;
  const auto& covs = s.covectors();
  std::unordered_set<std::string> member;
  for (const auto& x : covs) member.insert(x.str());

  report.containsZero = member.count(std::string(s.ground()->size(), '0')) > 0;

  report.satisfiesFS = true;
  for (const auto& x : covs) {
    for (const auto& y : covs) {
      if (!member.count(compose(x, y.negated()).str())) {
        report.satisfiesFS = false;
        report.fsWitness = "X=" + x.str() + " Y=" + y.str();
        break;
      }
    }
    if (!report.satisfiesFS) break;
  }

  report.satisfiesC = true;
  for (const auto& x : covs) {
    for (const auto& y : covs) {
      if (!member.count(compose(x, y).str())) {
        report.satisfiesC = false;
        report.cWitness = "X=" + x.str() + " Y=" + y.str();
        break;
      }
    }
    if (!report.satisfiesC) break;
  }

  report.satisfiesSE = true;
  for (const auto& x : covs) {
    for (const auto& y : covs) {
      const auto sep = separatorIdx(x, y);
      if (sep.empty()) continue;
      const SignVector xy = compose(x, y);
      std::vector<char> inSep(s.ground()->size(), 0);
      for (std::size_t i : sep) inSep[i] = 1;
      for (std::size_t e : sep) {
        bool found = false;
        for (const auto& z : covs) {
          if (z[e] != Sign::Zero) continue;
          bool agrees = true;
          for (std::size_t f = 0; f < s.ground()->size(); ++f) {
            if (!inSep[f] && z[f] != xy[f]) { agrees = false; break; }
          }
          if (agrees) { found = true; break; }
        }
        if (!found) {
          report.satisfiesSE = false;
          report.seWitness =
              "X=" + x.str() + " Y=" + y.str() + " e=" + s.ground()->name(e);
          break;
        }
      }
      if (!report.satisfiesSE) break;
    }
    if (!report.satisfiesSE) break;
  }

  report.isSimple = true;
  const std::size_t n = s.ground()->size();
  for (std::size_t e = 0; e < n && report.isSimple; ++e) {
    std::set<Sign> seen;
    for (const auto& x : covs) seen.insert(x[e]);
    if (seen.size() != 3) {
      report.isSimple = false;
      report.simplicityWitness = "element " + s.ground()->name(e) + " misses a sign";
    }
  }
  for (std::size_t e = 0; e < n && report.isSimple; ++e) {
    for (std::size_t f = e + 1; f < n && report.isSimple; ++f) {
      std::set<Sign> seen;
      for (const auto& x : covs) seen.insert(signProduct(x[e], x[f]));
      if (seen.size() != 3) {
        report.isSimple = false;
        report.simplicityWitness = "pair (" + s.ground()->name(e) + "," +
                                   s.ground()->name(f) + ") misses a product sign";
      }
    }
  }
  return report;
}

std::vector<SignVector> topes(const SignSystem& s) {
  std::vector<SignVector> out;
  for (const auto& x : s.covectors())
    if (x.fullSupport()) out.push_back(x);
  std::sort(out.begin(), out.end());  // lexicographic, + before -
  return out;
}

SignSystem deletion(const SignSystem& s, const std::set<std::string>& removed) {
  std::vector<std::string> keep;
  for (const auto& name : s.ground()->names())
    if (!removed.count(name)) keep.push_back(name);
  for (const auto& name : removed)
    if (!s.ground()->contains(name))
      throw std::invalid_argument("unknown element: " + name);
  GroundSetPtr sub = makeGroundSet(keep);
  std::vector<SignVector> out;
  std::set<std::string> seen;
  for (const auto& x : s.covectors()) {
    SignVector r = restrict(x, keep);
    SignVector rebased(sub, r.str());
    if (seen.insert(rebased.str()).second) out.push_back(std::move(rebased));
  }
  return SignSystem(sub, std::move(out));
}

SignSystem topalFiber(const SignSystem& s, const std::set<std::string>& splus,
                      const std::set<std::string>& sminus) {
  for (const auto& name : splus)
    if (sminus.count(name))
      throw std::invalid_argument("S+ and S- overlap at " + name);
  for (const auto& name : splus)
    if (!s.ground()->contains(name)) throw std::invalid_argument("unknown element: " + name);
  for (const auto& name : sminus)
    if (!s.ground()->contains(name)) throw std::invalid_argument("unknown element: " + name);

  std::vector<std::string> keep;
  for (const auto& name : s.ground()->names())
    if (!splus.count(name) && !sminus.count(name)) keep.push_back(name);
  GroundSetPtr sub = makeGroundSet(keep);

  std::vector<SignVector> out;
  std::set<std::string> seen;
  for (const auto& x : s.covectors()) {
    bool ok = true;
    for (const auto& name : splus)
      if (x.at(name) != Sign::Plus) { ok = false; break; }
    if (ok)
      for (const auto& name : sminus)
        if (x.at(name) != Sign::Minus) { ok = false; break; }
    if (!ok) continue;
    SignVector rebased(sub, restrict(x, keep).str());
    if (seen.insert(rebased.str()).second) out.push_back(std::move(rebased));
  }
  return SignSystem(sub, std::move(out));
}

SignSystem face(const SignSystem& s, const SignVector& x) {
  if (!s.contains(x)) throw std::invalid_argument("covector not in the system: " + x.str());
  std::vector<std::string> keep;
  std::set<std::string> supp = x.supportNames();
  for (const auto& name : s.ground()->names())
    if (!supp.count(name)) keep.push_back(name);
  GroundSetPtr sub = makeGroundSet(keep);

  std::vector<SignVector> out;
  std::set<std::string> seen;
  for (const auto& y : s.covectors()) {
    SignVector rebased(sub, restrict(compose(x, y), keep).str());
    if (seen.insert(rebased.str()).second) out.push_back(std::move(rebased));
  }
  return SignSystem(sub, std::move(out));
}

std::vector<SignVector> star(const SignSystem& s, const SignVector& x) {
  if (!s.contains(x)) throw std::invalid_argument("covector not in the system: " + x.str());
  std::vector<SignVector> out;
  for (const auto& t : topes(s))
    if (x.below(t)) out.push_back(t);
  return out;
}

SignVector gate(const SignSystem& s, const SignVector& x, const SignVector& p) {
  if (!s.contains(x)) throw std::invalid_argument("covector not in the system: " + x.str());
  if (!p.fullSupport() || !s.contains(p))
    throw std::invalid_argument("not a tope of the system: " + p.str());
  return compose(x, p);
}

std::optional<SignVector> maxFaceCovector(const SignSystem& s, const SignVector& r,
                                          const std::string& e) {
  if (!r.fullSupport() || !s.contains(r))
    throw std::invalid_argument("not a tope of the system: " + r.str());
  const std::size_t ei = s.ground()->index(e);
  std::optional<SignVector> acc;
  for (const auto& x : s.covectors()) {
    if (x.isZero() || x[ei] != Sign::Zero || !x.below(r)) continue;
    acc = acc ? compose(*acc, x) : x;
  }
  return acc;
}

std::size_t rank(const SignSystem& s) {
  const std::string zero(s.ground()->size(), '0');
  std::map<std::string, std::size_t> id;
  for (std::size_t i = 0; i < s.size(); ++i) id[s.covectors()[i].str()] = i;
  if (!id.count(zero)) throw std::invalid_argument("system has no all-zero covector");

  // Longest strictly increasing chain starting at 0, by memoized DFS.
  std::vector<long long> height(s.size(), -1);
  std::vector<char> done(s.size(), 0);
  auto supportSize = [&](std::size_t i) { return s.covectors()[i].support().size(); };
  std::vector<std::size_t> order(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return supportSize(a) < supportSize(b); });

  const std::size_t zi = id[zero];
  height[zi] = 0;
  for (std::size_t i : order) {
    if (i == zi) continue;
    long long best = -1;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j == i) continue;
      if (height[j] >= 0 && s.covectors()[j].below(s.covectors()[i]) &&
          s.covectors()[j] != s.covectors()[i])
        best = std::max(best, height[j] + 1);
    }
    height[i] = best;
  }

  long long result = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.covectors()[i].fullSupport() && height[i] > result) result = height[i];
  return static_cast<std::size_t>(result);
}

}  // namespace comdet
