#pragma once

#include <optional>
#include <string>
#include <vector>

#include "comdet/sign_vector.hpp"

namespace comdet {

// Outcome of the axiom checks, with one violating witness per failed axiom.
struct AxiomReport {
  bool satisfiesFS = false;
  bool satisfiesSE = false;
  bool satisfiesC = false;
  bool isSimple = false;
  bool containsZero = false;
  std::string fsWitness;  // empty when the axiom holds
  std::string seWitness;
  std::string cWitness;
  std::string simplicityWitness;

  bool isCOM() const { return satisfiesFS && satisfiesSE; }
  bool isOM() const { return isCOM() && containsZero; }
};

// A finite ground set together with an explicit covector list.
class SignSystem {
 public:
  SignSystem() = default;
  SignSystem(GroundSetPtr ground, std::vector<SignVector> covectors);

  const GroundSetPtr& ground() const { return ground_; }
  const std::vector<SignVector>& covectors() const { return covectors_; }
  std::size_t size() const { return covectors_.size(); }
  bool contains(const SignVector& x) const;

 private:
  GroundSetPtr ground_;
  std::vector<SignVector> covectors_;
};

AxiomReport checkAxioms(const SignSystem& s);

// Covectors of full support, sorted lexicographically with + < -.
std::vector<SignVector> topes(const SignSystem& s);

SignSystem deletion(const SignSystem& s, const std::set<std::string>& removed);

SignSystem topalFiber(const SignSystem& s, const std::set<std::string>& splus,
                      const std::set<std::string>& sminus);

// The OM (E \ support(X), F(X) \ support(X)) for X a covector.
SignSystem face(const SignSystem& s, const SignVector& x);

// Topes above X in the componentwise order.
std::vector<SignVector> star(const SignSystem& s, const SignVector& x);

// The gate X o P of star(X) seen from tope P.
SignVector gate(const SignSystem& s, const SignVector& x, const SignVector& p);

// Composition of all nonzero covectors X <= R with X_e = 0, or nullopt when
// no such covector exists (e does not define a proper face of R).
std::optional<SignVector> maxFaceCovector(const SignSystem& s, const SignVector& r,
                                          const std::string& e);

// Length of a longest chain from the all-zero covector to a tope.
std::size_t rank(const SignSystem& s);

}  // namespace comdet
