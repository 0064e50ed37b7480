#include "comdet/tope_poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace comdet {

namespace {

void requireFullSupport(const SignVector& r) {
  if (!r.fullSupport())
    throw std::invalid_argument("base pattern must have full support: " + r.str());
}

}  // namespace

TopePoset topeOrder(const SignSystem& s, const SignVector& r) {
  requireFullSupport(r);
  TopePoset tp;
  tp.basePattern = r;
  tp.topeList = topes(s);
  for (const auto& t : tp.topeList) tp.separators.push_back(separator(r, t));

  std::vector<std::string> ids;
  for (const auto& t : tp.topeList) ids.push_back(t.str());
  std::vector<std::pair<std::string, std::string>> rels;
  for (std::size_t i = 0; i < tp.topeList.size(); ++i) {
    for (std::size_t j = 0; j < tp.topeList.size(); ++j) {
      if (i == j) continue;
      if (tp.separators[i] != tp.separators[j] &&
          std::includes(tp.separators[j].begin(), tp.separators[j].end(),
                        tp.separators[i].begin(), tp.separators[i].end()))
        rels.emplace_back(ids[i], ids[j]);
    }
  }
  tp.base = FinitePoset(std::move(ids), rels);
  return tp;
}

PointedTopePoset pointedTopePoset(const SignSystem& s, const SignVector& r,
                                  const std::string& e) {
  requireFullSupport(r);
  const std::size_t ei = s.ground()->index(e);
  PointedTopePoset p;
  p.basePattern = r;
  p.element = e;
  for (const auto& t : topes(s))
    if (t[ei] == negate(r[ei])) p.members.push_back(t);

  std::vector<std::string> ids;
  ids.push_back(PointedTopePoset::bottomId);
  for (const auto& t : p.members) ids.push_back(t.str());
  std::vector<std::pair<std::string, std::string>> rels;
  std::vector<std::set<std::string>> seps;
  for (const auto& t : p.members) seps.push_back(separator(r, t));
  for (std::size_t i = 0; i < p.members.size(); ++i) {
    rels.emplace_back(std::string(PointedTopePoset::bottomId), p.members[i].str());
    for (std::size_t j = 0; j < p.members.size(); ++j) {
      if (i == j || seps[i] == seps[j]) continue;
      if (std::includes(seps[j].begin(), seps[j].end(), seps[i].begin(), seps[i].end()))
        rels.emplace_back(p.members[i].str(), p.members[j].str());
    }
  }
  p.underlying = FinitePoset(std::move(ids), rels);
  return p;
}

std::size_t PointedTopePoset::indexOf(const SignVector& q) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == q) return i + 1;
  throw std::invalid_argument("tope not a member of the pointed poset: " + q.str());
}

long long intervalMobius(const PointedTopePoset& p, const SignVector& q) {
  return mobius(p.underlying, 0, p.indexOf(q));
}

long long intervalMobiusBottom(const PointedTopePoset&) { return 1; }

}  // namespace comdet
