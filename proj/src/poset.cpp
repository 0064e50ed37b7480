#include "comdet/poset.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace comdet {

FinitePoset::FinitePoset(std::vector<std::string> elements)
    : elements_(std::move(elements)), strict_(elements_.size() * elements_.size(), 0) {
  std::vector<std::string> sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw std::invalid_argument("duplicate poset element: " + *dup);
}

FinitePoset::FinitePoset(std::vector<std::string> elements,
                         const std::vector<std::pair<std::string, std::string>>& relations)
    : FinitePoset(std::move(elements)) {
  const std::size_t n = size();
  for (const auto& [a, b] : relations) strict_[index(a) * n + index(b)] = 1;
  // Floyd-Warshall transitive closure.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (strict_[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (strict_[k * n + j]) strict_[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (strict_[i * n + i])
      throw std::invalid_argument("relation cycle through " + elements_[i]);
}

std::size_t FinitePoset::index(const std::string& id) const {
  auto it = std::find(elements_.begin(), elements_.end(), id);
  if (it == elements_.end()) throw std::invalid_argument("unknown poset element: " + id);
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FinitePoset::less(const std::string& a, const std::string& b) const {
  return less(index(a), index(b));
}

FinitePoset FinitePoset::subposet(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> names;
  for (std::size_t i : keep) names.push_back(elements_.at(i));
  FinitePoset sub(std::move(names));
  const std::size_t m = keep.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      sub.strict_[i * m + j] = strict_[keep[i] * size() + keep[j]];
  return sub;
}

namespace {

long long mobiusMemo(const FinitePoset& p, std::size_t x, std::size_t y,
                     std::unordered_map<std::size_t, long long>& memo) {
  if (x == y) return 1;
  auto it = memo.find(y);
  if (it != memo.end()) return it->second;
  long long sum = 0;
  for (std::size_t z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && p.less(z, y)) sum += mobiusMemo(p, x, z, memo);
  memo[y] = -sum;
  return -sum;
}

// Any linear extension of the strict order.
std::vector<std::size_t> topoOrder(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<std::size_t> below(n, 0), out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p.less(j, i)) ++below[i];
  std::vector<char> placed(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!placed[i] && below[i] == 0) {
        placed[i] = 1;
        out.push_back(i);
        for (std::size_t j = 0; j < n; ++j)
          if (p.less(i, j)) --below[j];
        break;
      }
    }
  }
  return out;
}

}  // namespace

long long mobius(const FinitePoset& p, std::size_t x, std::size_t y) {
  if (!p.leq(x, y))
    throw std::invalid_argument("mobius arguments are incomparable");
  std::unordered_map<std::size_t, long long> memo;
  return mobiusMemo(p, x, y, memo);
}

long long mobius(const FinitePoset& p, const std::string& x, const std::string& y) {
  return mobius(p, p.index(x), p.index(y));
}

long long mobiusNumber(const FinitePoset& p) {
  // Bounded extension with fresh top and bottom; mu(0^, 1^) directly by the
  // defining recursion: mu(0^,1^) = -(1 + sum over x in P of mu(0^, x)).
  const std::size_t n = p.size();
  std::vector<long long> mu(n, 0);
  for (std::size_t i : topoOrder(p)) {
    long long sum = 1;  // mu(0^, 0^)
    for (std::size_t z = 0; z < n; ++z)
      if (p.less(z, i)) sum += mu[z];
    mu[i] = -sum;
  }
  long long total = 1;
  for (std::size_t i = 0; i < n; ++i) total += mu[i];
  return -total;
}

long long chainEulerCharacteristic(const FinitePoset& p, std::size_t maxElements) {
  if (p.size() > maxElements)
    throw std::invalid_argument("poset too large for chain enumeration");
  const std::size_t n = p.size();
  // signedChains[i] = sum over chains ending at i of (-1)^(len-1)
  std::vector<long long> signedChains(n, 0);
  for (std::size_t i : topoOrder(p)) {
    long long v = 1;  // the singleton chain {i}
    for (std::size_t z = 0; z < n; ++z)
      if (p.less(z, i)) v -= signedChains[z];
    signedChains[i] = v;
  }
  long long chi = 0;
  for (std::size_t i = 0; i < n; ++i) chi += signedChains[i];
  return chi;
}

}  // namespace comdet
