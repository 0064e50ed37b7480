#include "comdet/sign_vector.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace comdet {

Sign signFromChar(char c) {
  switch (c) {
    case '+': return Sign::Plus;
    case '-': return Sign::Minus;
    case '0': return Sign::Zero;
    default: throw std::invalid_argument(std::string("invalid sign character '") + c + "'");
  }
}

GroundSet::GroundSet(std::vector<std::string> elements) : names_(std::move(elements)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate ground-set element: " + n);
  }
}

std::size_t GroundSet::index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::invalid_argument("unknown element: " + name);
  return static_cast<std::size_t>(it - names_.begin());
}

bool GroundSet::contains(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

GroundSetPtr makeGroundSet(std::vector<std::string> elements) {
  return std::make_shared<const GroundSet>(std::move(elements));
}

GroundSetPtr defaultGroundSet(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return makeGroundSet(std::move(names));
}

SignVector::SignVector(GroundSetPtr ground, std::vector<Sign> signs)
    : ground_(std::move(ground)), signs_(std::move(signs)) {
  if (!ground_) throw std::invalid_argument("null ground set");
  if (signs_.size() != ground_->size())
    throw std::invalid_argument("sign vector length does not match ground set");
}

SignVector::SignVector(GroundSetPtr ground, const std::string& str) : ground_(std::move(ground)) {
  if (!ground_) throw std::invalid_argument("null ground set");
  if (str.size() != ground_->size())
    throw std::invalid_argument("sign string length does not match ground set: " + str);
  signs_.reserve(str.size());
  for (char c : str) signs_.push_back(signFromChar(c));
}

Sign SignVector::at(const std::string& element) const { return signs_[ground_->index(element)]; }

std::string SignVector::str() const {
  std::string out;
  out.reserve(signs_.size());
  for (Sign s : signs_) out.push_back(signChar(s));
  return out;
}

bool SignVector::isZero() const {
  return std::all_of(signs_.begin(), signs_.end(), [](Sign s) { return s == Sign::Zero; });
}

bool SignVector::fullSupport() const {
  return std::none_of(signs_.begin(), signs_.end(), [](Sign s) { return s == Sign::Zero; });
}

SignVector SignVector::negated() const {
  std::vector<Sign> out(signs_.size());
  for (std::size_t i = 0; i < signs_.size(); ++i) out[i] = negate(signs_[i]);
  return SignVector(ground_, std::move(out));
}

std::vector<std::size_t> SignVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < signs_.size(); ++i)
    if (signs_[i] != Sign::Zero) out.push_back(i);
  return out;
}

std::vector<std::size_t> SignVector::zeroSet() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < signs_.size(); ++i)
    if (signs_[i] == Sign::Zero) out.push_back(i);
  return out;
}

std::set<std::string> SignVector::supportNames() const {
  std::set<std::string> out;
  for (std::size_t i : support()) out.insert(ground_->name(i));
  return out;
}

std::set<std::string> SignVector::zeroSetNames() const {
  std::set<std::string> out;
  for (std::size_t i : zeroSet()) out.insert(ground_->name(i));
  return out;
}

bool SignVector::below(const SignVector& other) const {
  if (*ground_ != *other.ground_) throw std::invalid_argument("ground-set mismatch");
  for (std::size_t i = 0; i < signs_.size(); ++i)
    if (signs_[i] != Sign::Zero && signs_[i] != other.signs_[i]) return false;
  return true;
}

bool SignVector::operator==(const SignVector& other) const {
  return signs_ == other.signs_ && (ground_ == other.ground_ || *ground_ == *other.ground_);
}

bool SignVector::operator<(const SignVector& other) const {
  // 0 < + < - coordinatewise, lexicographically.
  return signs_ < other.signs_;
}

static void requireSameGround(const SignVector& x, const SignVector& y) {
  if (x.ground() != y.ground() && *x.ground() != *y.ground())
    throw std::invalid_argument("ground-set mismatch");
}

SignVector compose(const SignVector& x, const SignVector& y) {
  requireSameGround(x, y);
  std::vector<Sign> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] != Sign::Zero ? x[i] : y[i];
  return SignVector(x.ground(), std::move(out));
}

std::vector<std::size_t> separatorIdx(const SignVector& x, const SignVector& y) {
  requireSameGround(x, y);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != Sign::Zero && x[i] == negate(y[i])) out.push_back(i);
  return out;
}

std::set<std::string> separator(const SignVector& x, const SignVector& y) {
  std::set<std::string> out;
  for (std::size_t i : separatorIdx(x, y)) out.insert(x.ground()->name(i));
  return out;
}

SignVector reorient(const SignVector& x, const std::set<std::string>& flip) {
  std::vector<Sign> out(x.size());
  std::vector<char> mask(x.size(), 0);
  for (const auto& name : flip) mask[x.ground()->index(name)] = 1;
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = mask[i] ? negate(x[i]) : x[i];
  return SignVector(x.ground(), std::move(out));
}

SignVector restrict(const SignVector& x, const std::vector<std::string>& keep) {
  std::vector<std::string> names;
  std::vector<Sign> signs;
  std::unordered_set<std::string> keepSet(keep.begin(), keep.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const std::string& n = x.ground()->name(i);
    if (keepSet.count(n)) {
      names.push_back(n);
      signs.push_back(x[i]);
      keepSet.erase(n);
    }
  }
  if (!keepSet.empty())
    throw std::invalid_argument("unknown element in restriction: " + *keepSet.begin());
  return SignVector(makeGroundSet(std::move(names)), std::move(signs));
}

static SignVector uniform(const GroundSetPtr& ground, Sign s) {
  return SignVector(ground, std::vector<Sign>(ground->size(), s));
}

SignVector allZero(const GroundSetPtr& ground) { return uniform(ground, Sign::Zero); }
SignVector allPlus(const GroundSetPtr& ground) { return uniform(ground, Sign::Plus); }
SignVector allMinus(const GroundSetPtr& ground) { return uniform(ground, Sign::Minus); }

}  // namespace comdet
