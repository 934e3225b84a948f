#pragma once

#include <vector>

#include "ginwb/field.hpp"

namespace ginwb {

/// Dense row-major matrix over a prime field.
class MatrixFp {
public:
  MatrixFp(const PrimeField& F, std::size_t rows, std::size_t cols)
      : F_(F), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  const PrimeField& field() const { return F_; }

  /// In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t pr = r;
      while (pr < rows_ && at(pr, c) == 0) ++pr;
      if (pr == rows_) continue;
      if (pr != r)
        for (std::size_t j = c; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
      std::uint32_t iv = F_.inv(at(r, c));
      for (std::size_t j = c; j < cols_; ++j) at(r, j) = F_.mul(at(r, j), iv);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        std::uint32_t f = at(i, c);
        if (!f) continue;
        for (std::size_t j = c; j < cols_; ++j)
          at(i, j) = F_.sub(at(i, j), F_.mul(f, at(r, j)));
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  std::size_t rank() const {
    MatrixFp tmp = *this;
    return tmp.rref().size();
  }

  /// Basis of the right nullspace (one vector per free column of the RREF),
  /// each normalized with its free coordinate equal to 1. The vectors come
  /// in increasing free-column order.
  std::vector<std::vector<std::uint32_t>> nullspace() const {
    MatrixFp R = *this;
    auto piv = R.rref();
    std::vector<bool> is_piv(cols_, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_piv[f]) continue;
      std::vector<std::uint32_t> v(cols_, 0);
      v[f] = 1;
      for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F_.neg(R.at(i, f));
      basis.push_back(std::move(v));
    }
    return basis;
  }

private:
  PrimeField F_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> a_;
};

}  // namespace ginwb
