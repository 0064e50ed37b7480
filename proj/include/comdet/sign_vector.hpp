#pragma once

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace comdet {

enum class Sign : std::int8_t { Zero = 0, Plus = 1, Minus = 2 };

inline Sign negate(Sign s) {
  if (s == Sign::Plus) return Sign::Minus;
  if (s == Sign::Minus) return Sign::Plus;
  return Sign::Zero;
}

inline char signChar(Sign s) {
  switch (s) {
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    default: return '0';
  }
}

Sign signFromChar(char c);

// Named ground set E. The element order is the canonical linear order on E.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> elements);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t index(const std::string& name) const;
  bool contains(const std::string& name) const;

  bool operator==(const GroundSet& other) const { return names_ == other.names_; }
  bool operator!=(const GroundSet& other) const { return !(*this == other); }

 private:
  std::vector<std::string> names_;
};

using GroundSetPtr = std::shared_ptr<const GroundSet>;

GroundSetPtr makeGroundSet(std::vector<std::string> elements);

// Ground set of n elements named e1..en.
GroundSetPtr defaultGroundSet(std::size_t n, const std::string& prefix = "e");

// An element of {0,+,-}^E, index-aligned with the ground set.
class SignVector {
 public:
  SignVector() = default;
  SignVector(GroundSetPtr ground, std::vector<Sign> signs);
  // Parse from a string over {0,+,-}.
  SignVector(GroundSetPtr ground, const std::string& str);

  const GroundSetPtr& ground() const { return ground_; }
  std::size_t size() const { return signs_.size(); }
  Sign operator[](std::size_t i) const { return signs_[i]; }
  Sign at(const std::string& element) const;

  std::string str() const;

  bool isZero() const;
  bool fullSupport() const;
  SignVector negated() const;

  std::vector<std::size_t> support() const;
  std::vector<std::size_t> zeroSet() const;
  std::set<std::string> supportNames() const;
  std::set<std::string> zeroSetNames() const;

  // X <= Y componentwise with 0 < +,-.
  bool below(const SignVector& other) const;

  bool operator==(const SignVector& other) const;
  bool operator!=(const SignVector& other) const { return !(*this == other); }
  // Total order used for canonical sorting: lexicographic with 0 < + < -.
  bool operator<(const SignVector& other) const;

 private:
  GroundSetPtr ground_;
  std::vector<Sign> signs_;
};

SignVector compose(const SignVector& x, const SignVector& y);
std::set<std::string> separator(const SignVector& x, const SignVector& y);
std::vector<std::size_t> separatorIdx(const SignVector& x, const SignVector& y);
SignVector reorient(const SignVector& x, const std::set<std::string>& flip);
SignVector restrict(const SignVector& x, const std::vector<std::string>& keep);

SignVector allZero(const GroundSetPtr& ground);
SignVector allPlus(const GroundSetPtr& ground);
SignVector allMinus(const GroundSetPtr& ground);

}  // namespace comdet
