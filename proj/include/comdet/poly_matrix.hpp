#pragma once

#include <string>
#include <vector>

#include "comdet/poly.hpp"

namespace comdet {

// Dense matrix of polynomials with row/column labels (tope ids).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::vector<std::string> rowLabels, std::vector<std::string> colLabels);
  static PolyMatrix identity(const std::vector<std::string>& labels);

  std::size_t rows() const { return rowLabels_.size(); }
  std::size_t cols() const { return colLabels_.size(); }
  const std::vector<std::string>& rowLabels() const { return rowLabels_; }
  const std::vector<std::string>& colLabels() const { return colLabels_; }

  Poly& at(std::size_t r, std::size_t c) { return entries_[r * cols() + c]; }
  const Poly& at(std::size_t r, std::size_t c) const { return entries_[r * cols() + c]; }

  bool operator==(const PolyMatrix& o) const;

  // Same-label permutation applied to rows and columns simultaneously.
  PolyMatrix reordered(const std::vector<std::string>& labelOrder) const;

  PolyMatrix map(const std::function<Poly(const Poly&)>& f) const;

 private:
  std::vector<std::string> rowLabels_;
  std::vector<std::string> colLabels_;
  std::vector<Poly> entries_;
};

PolyMatrix matMul(const PolyMatrix& a, const PolyMatrix& b);

// Fraction-free Gaussian elimination; exact over the integer polynomial ring.
Poly bareissDet(const PolyMatrix& a);

// Laplace-expansion oracle, guarded by dimension.
Poly cofactorDet(const PolyMatrix& a, std::size_t maxDim = 10);

// True iff every entry strictly above the diagonal blocks is zero, where
// blocks are the given ordered partition of the (shared) label sequence.
bool blockTriangularCheck(const PolyMatrix& a,
                          const std::vector<std::vector<std::string>>& blocks);

}  // namespace comdet
