#pragma once

#include <cstdint>
#include <vector>

#include "comdet/poset.hpp"
#include "comdet/sign_system.hpp"
#include "comdet/varchenko.hpp"

namespace comdet {

// Graphic OM of the directed n-cycle (covector set C_n), n >= 3.
SignSystem cycleOM(std::size_t n);

// True iff the covector set equals C_{|E|} on the same ground set.
bool isCycleSystem(const SignSystem& s);

// The lopsided set {0,+,-}^n.
SignSystem fullCube(std::size_t n);

// The worked five-element poset with relations a<c, b<c, a<d, b<d, b<e.
FinitePoset posetQ();

// COM of the distributive lattice of ideals: topes are ideals (- on the
// ideal, + elsewhere), covectors are cube faces (ideal I, subset of the
// minimal elements of the complement set to 0).
SignSystem idealsCOM(const FinitePoset& p);

// det(V_L) = prod_p (1 - x_p^2)^{m_p}, m_p = #antichains containing p.
std::vector<ClosedFormFactor> idealsClosedForm(const FinitePoset& p);

// All linear extensions of p, each as the element-index sequence.
std::vector<std::vector<std::size_t>> linearExtensions(const FinitePoset& p,
                                                       std::size_t limit = 0);

// Ranking COM on the incomparable pairs of p; topes are linear extensions,
// covectors are weak extensions, signs relative to the reference extension l0.
SignSystem rankingCOM(const FinitePoset& p, const std::vector<std::size_t>& l0);
SignSystem rankingCOM(const FinitePoset& p);  // lexicographically least L0

// det = prod over antichains A of size >= 2 of
// (1 - prod_{pairs in A} x_{pq}^2)^{(|A|-2)! * ext(p/A)}, where ext(p/A) is
// the number of linear extensions of p with A contracted to one element.
std::vector<ClosedFormFactor> rankingClosedForm(const FinitePoset& p);

// Ground name of the incomparable pair {p,q} as used by rankingCOM.
std::string incPairName(const FinitePoset& p, const std::vector<std::size_t>& l0,
                        std::size_t a, std::size_t b);

// The ten topes of the full subdivision of K4 (a partial cube, not a COM).
std::pair<GroundSetPtr, std::vector<SignVector>> k4SubdivisionTopes();

struct RandomBudget {
  std::size_t maxTopes = 14;
  std::size_t maxElements = 6;
  std::size_t maxRetries = 64;
};

// Seed-deterministic simple COM built from products of cycles and cubes with
// random deletions and topal fibers.
SignSystem randomCOM(std::uint64_t seed, const RandomBudget& budget = {});

}  // namespace comdet
