#pragma once

#include <string>
#include <vector>

#include "comdet/poset.hpp"
#include "comdet/sign_system.hpp"

namespace comdet {

// Topes ordered by inclusion of separators against a full-support base pattern.
struct TopePoset {
  FinitePoset base;                     // ids are tope sign strings
  SignVector basePattern;               // in {+,-}^E
  std::vector<SignVector> topeList;     // aligned with base elements
  std::vector<std::set<std::string>> separators;  // S(R, tope), aligned
};

TopePoset topeOrder(const SignSystem& s, const SignVector& r);

// {T in topes | T_e = -R_e} with an artificial least element 0^, order
// induced from the tope poset with base pattern R.
struct PointedTopePoset {
  FinitePoset underlying;               // element 0 is the marked bottom "^0"
  std::vector<SignVector> members;      // aligned with elements 1..n
  SignVector basePattern;
  std::string element;

  static constexpr const char* bottomId = "^0";

  // Index of tope q inside the underlying poset; throws if absent.
  std::size_t indexOf(const SignVector& q) const;
};

PointedTopePoset pointedTopePoset(const SignSystem& s, const SignVector& r,
                                  const std::string& e);

// mu(0^, Q) inside the pointed poset; mu(0^, 0^) = 1 via q = bottom.
long long intervalMobius(const PointedTopePoset& p, const SignVector& q);
long long intervalMobiusBottom(const PointedTopePoset& p);  // always 1

}  // namespace comdet
