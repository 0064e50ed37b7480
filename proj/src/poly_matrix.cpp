#include "comdet/poly_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace comdet {

PolyMatrix::PolyMatrix(std::vector<std::string> rowLabels, std::vector<std::string> colLabels)
    : rowLabels_(std::move(rowLabels)),
      colLabels_(std::move(colLabels)),
      entries_(rowLabels_.size() * colLabels_.size()) {}

PolyMatrix PolyMatrix::identity(const std::vector<std::string>& labels) {
  PolyMatrix m(labels, labels);
  for (std::size_t i = 0; i < labels.size(); ++i) m.at(i, i) = Poly(1);
  return m;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  return rowLabels_ == o.rowLabels_ && colLabels_ == o.colLabels_ && entries_ == o.entries_;
}

PolyMatrix PolyMatrix::reordered(const std::vector<std::string>& labelOrder) const {
  if (rowLabels_ != colLabels_)
    throw std::invalid_argument("simultaneous reorder needs matching row/col labels");
  std::unordered_map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < rowLabels_.size(); ++i) pos[rowLabels_[i]] = i;
  if (labelOrder.size() != rowLabels_.size())
    throw std::invalid_argument("label order is not a permutation");
  std::vector<std::size_t> perm;
  for (const auto& l : labelOrder) {
    auto it = pos.find(l);
    if (it == pos.end()) throw std::invalid_argument("unknown label: " + l);
    perm.push_back(it->second);
  }
  PolyMatrix out(labelOrder, labelOrder);
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) out.at(r, c) = at(perm[r], perm[c]);
  return out;
}

PolyMatrix PolyMatrix::map(const std::function<Poly(const Poly&)>& f) const {
  PolyMatrix out(rowLabels_, colLabels_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = f(entries_[i]);
  return out;
}

PolyMatrix matMul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows() || a.colLabels() != b.rowLabels())
    throw std::invalid_argument("matrix dimension/label mismatch");
  PolyMatrix out(a.rowLabels(), b.colLabels());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).isZero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).isZero()) continue;
        out.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  return out;
}

Poly bareissDet(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Poly(1);

  std::vector<Poly> m;
  m.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.push_back(a.at(r, c));
  auto e = [&](std::size_t r, std::size_t c) -> Poly& { return m[r * n + c]; };

  int sign = 1;
  Poly prevPivot(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (e(k, k).isZero()) {
      std::size_t swapRow = k;
      for (std::size_t r = k + 1; r < n; ++r)
        if (!e(r, k).isZero()) { swapRow = r; break; }
      if (swapRow == k) return Poly(0);  // whole column zero
      for (std::size_t c = 0; c < n; ++c) std::swap(e(k, c), e(swapRow, c));
      sign = -sign;
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      for (std::size_t c = k + 1; c < n; ++c) {
        Poly num = e(r, c) * e(k, k) - e(r, k) * e(k, c);
        e(r, c) = num.exactDiv(prevPivot);
      }
      e(r, k) = Poly(0);
    }
    prevPivot = e(k, k);
  }
  Poly det = e(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

namespace {

Poly cofactorDetRec(const std::vector<Poly>& m, std::vector<std::size_t> rows,
                    std::vector<std::size_t> cols, std::size_t n) {
  if (rows.empty()) return Poly(1);
  if (rows.size() == 1) return m[rows[0] * n + cols[0]];
  Poly det;
  std::vector<std::size_t> subRows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const Poly& entry = m[rows[0] * n + cols[j]];
    if (entry.isZero()) continue;
    std::vector<std::size_t> subCols;
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != j) subCols.push_back(cols[k]);
    Poly sub = entry * cofactorDetRec(m, subRows, subCols, n);
    if (j % 2 == 0)
      det += sub;
    else
      det -= sub;
  }
  return det;
}

}  // namespace

Poly cofactorDet(const PolyMatrix& a, std::size_t maxDim) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (a.rows() > maxDim)
    throw std::invalid_argument("cofactor expansion guard exceeded");
  const std::size_t n = a.rows();
  std::vector<Poly> m;
  m.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.push_back(a.at(r, c));
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  return cofactorDetRec(m, idx, idx, n);
}

bool blockTriangularCheck(const PolyMatrix& a,
                          const std::vector<std::vector<std::string>>& blocks) {
  std::unordered_map<std::string, std::size_t> blockOf;
  std::size_t total = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (const auto& l : blocks[b]) {
      if (!blockOf.emplace(l, b).second)
        throw std::invalid_argument("label in two blocks: " + l);
      ++total;
    }
  if (total != a.rows() || a.rows() != a.cols())
    throw std::invalid_argument("block partition does not cover the labels");
  for (const auto& l : a.rowLabels())
    if (!blockOf.count(l)) throw std::invalid_argument("label without block: " + l);

  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (blockOf[a.rowLabels()[r]] < blockOf[a.colLabels()[c]] && !a.at(r, c).isZero())
        return false;
  return true;
}

}  // namespace comdet
