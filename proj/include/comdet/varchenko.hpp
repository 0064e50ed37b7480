#pragma once

#include <string>
#include <vector>

#include "comdet/poly_matrix.hpp"
#include "comdet/sign_system.hpp"

namespace comdet {

// A linear order on E: element indices listed from smallest to largest.
using ElementOrder = std::vector<std::size_t>;

ElementOrder defaultOrder(const GroundSet& ground);

// Tope-indexed matrix with monomial entries over the separator sets.
struct VarchenkoMatrix {
  PolyMatrix matrix;
  bool isSigned = true;
  std::vector<SignVector> topeList;  // aligned with the matrix labels
};

struct ClosedFormFactor {
  Poly factor;        // 1 - a(Y), variables merged over equal zero-sets
  long long exponent;  // aggregated b_Y
  std::set<std::string> zeroSet;
};

struct BlockCheck {
  std::string element;
  bool triangular = false;
  bool blockDetsMatch = false;
  std::vector<std::vector<std::string>> blocks;  // tope labels per block, in order
};

struct FactorReport {
  std::vector<PolyMatrix> perElementFactors;  // M^e in ground-set order
  bool fac1Holds = false;                     // the two U^e / L^e identities
  bool perElementHolds = false;               // V = V_{x_e=0} * M^e for max e
  bool chainHolds = false;                    // full product over E
  std::vector<BlockCheck> blockChecks;
  Poly detSymbolic;
  std::vector<ClosedFormFactor> detClosedForm;
  bool match = false;  // detSymbolic == expanded closed form

  bool allHold() const;
};

VarchenkoMatrix buildSigned(const SignSystem& s);
VarchenkoMatrix buildUnsigned(const SignSystem& s);

// Unsigned matrix from an arbitrary distinct full-support tope list (no COM
// assumption); entry (u, v) multiplies x_e over the coordinates where u, v
// differ.
VarchenkoMatrix buildUnsignedFromTopes(const GroundSetPtr& ground,
                                       const std::vector<SignVector>& topes);

// The factor matrix M^e: identity on the diagonal, -mu((0^,Q)_{R,e}) V_{Q,R}
// where e is the order-maximal element of S(Q,R), zero elsewhere.
PolyMatrix buildMe(const SignSystem& s, const VarchenkoMatrix& v, const std::string& e,
                   const ElementOrder& order);

FactorReport verifyFactorChain(const SignSystem& s, bool makeSigned = true);
FactorReport verifyFactorChain(const SignSystem& s, bool makeSigned, const ElementOrder& order);

// Topes P with Y the maximal covector satisfying Y_e = 0 and Y <= P.
std::vector<SignVector> topesYe(const SignSystem& s, const SignVector& y,
                                const std::string& e);

// b_{Y,e} for a specific element of z(Y).
long long exponentBForElement(const SignSystem& s, const SignVector& y,
                              const std::string& e, const ElementOrder& order);

// b_Y = b_{Y, max z(Y)}; zero for topes.
long long exponentB(const SignSystem& s, const SignVector& y, const ElementOrder& order);

std::vector<ClosedFormFactor> closedFormDet(const SignSystem& s, bool makeSigned);
std::vector<ClosedFormFactor> closedFormDet(const SignSystem& s, bool makeSigned,
                                            const ElementOrder& order);

Poly expandClosedForm(const std::vector<ClosedFormFactor>& factors);

// Partitions topes into the sets T^{Y,e}, orders blocks compatibly with the
// covector order, and checks triangularity plus the per-block determinants.
BlockCheck blockDecomposition(const SignSystem& s, const std::string& e,
                              const ElementOrder& order);

// Evaluates mu((0^,Q)_{R,e}) directly and via the rank closed form; throws on
// disagreement, returns the direct value.
long long contractionMobius(const SignSystem& s, const SignVector& y, const std::string& e,
                            const SignVector& q, const SignVector& r);

// Throws unless the system is simple (precondition of the Varchenko layer).
void requireSimple(const SignSystem& s);

}  // namespace comdet
