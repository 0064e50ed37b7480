#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace comdet {

// Finite poset over string ids. The strict order is stored transitively closed.
class FinitePoset {
 public:
  FinitePoset() = default;
  explicit FinitePoset(std::vector<std::string> elements);
  // Relations are any generating set of pairs (a, b) meaning a < b; the
  // transitive closure is taken, cycles are rejected.
  FinitePoset(std::vector<std::string> elements,
              const std::vector<std::pair<std::string, std::string>>& relations);

  std::size_t size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  std::size_t index(const std::string& id) const;
  const std::string& element(std::size_t i) const { return elements_.at(i); }

  bool less(std::size_t a, std::size_t b) const { return strict_[a * size() + b]; }
  bool less(const std::string& a, const std::string& b) const;
  bool leq(std::size_t a, std::size_t b) const { return a == b || less(a, b); }
  bool comparable(std::size_t a, std::size_t b) const {
    return a == b || less(a, b) || less(b, a);
  }

  // Subposet on the given element indices, ids preserved.
  FinitePoset subposet(const std::vector<std::size_t>& keep) const;

 private:
  std::vector<std::string> elements_;
  std::vector<char> strict_;  // size() * size() strict-order matrix
};

// Standard Moebius function; requires x <= y.
long long mobius(const FinitePoset& p, std::size_t x, std::size_t y);
long long mobius(const FinitePoset& p, const std::string& x, const std::string& y);

// mu(0^, 1^) in the bounded extension of p.
long long mobiusNumber(const FinitePoset& p);

// Euler characteristic of the order complex: sum over k >= 1 of
// (-1)^(k-1) * (#k-element chains). Guarded by maxElements.
long long chainEulerCharacteristic(const FinitePoset& p, std::size_t maxElements = 20);

}  // namespace comdet
