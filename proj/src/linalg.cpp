#include "conglab/linalg.hpp"

#include <stdexcept>

namespace conglab {

std::size_t Matrix::rref() {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows_ && at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != pivot_row)
      for (std::size_t c = 0; c < cols_; ++c)
        std::swap(at(sel, c), at(pivot_row, c));
    Fe piv_inv = fq_.inv(at(pivot_row, col));
    for (std::size_t c = col; c < cols_; ++c)
      at(pivot_row, c) = fq_.mul(at(pivot_row, c), piv_inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pivot_row || at(r, col) == 0) continue;
      Fe f = at(r, col);
      for (std::size_t c = col; c < cols_; ++c)
        at(r, c) = fq_.sub(at(r, c), fq_.mul(f, at(pivot_row, c)));
    }
    ++pivot_row;
  }
  return pivot_row;
}

std::size_t Matrix::rank() const {
  Matrix tmp(*this);
  return tmp.rref();
}

Fe Matrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("Matrix::det: not square");
  Matrix tmp(*this);
  Fe d = 1;
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t sel = col;
    while (sel < rows_ && tmp.at(sel, col) == 0) ++sel;
    if (sel == rows_) return 0;
    if (sel != col) {
      for (std::size_t c = 0; c < cols_; ++c)
        std::swap(tmp.at(sel, c), tmp.at(col, c));
      d = fq_.neg(d);
    }
    d = fq_.mul(d, tmp.at(col, col));
    Fe piv_inv = fq_.inv(tmp.at(col, col));
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (tmp.at(r, col) == 0) continue;
      Fe f = fq_.mul(tmp.at(r, col), piv_inv);
      for (std::size_t c = col; c < cols_; ++c)
        tmp.at(r, c) = fq_.sub(tmp.at(r, c), fq_.mul(f, tmp.at(col, c)));
    }
  }
  return d;
}

std::vector<std::vector<Fe>> Matrix::nullspace() const {
  Matrix tmp(*this);
  tmp.rref();
  // Pivot of each row is its leading entry after rref.
  std::vector<long> pivot_of_col(cols_, -1);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::size_t c = 0;
    while (c < cols_ && tmp.at(r, c) == 0) ++c;
    if (c == cols_) break;
    pivot_of_col[c] = static_cast<long>(r);
  }
  std::vector<std::vector<Fe>> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (pivot_of_col[free_col] >= 0) continue;
    std::vector<Fe> v(cols_, 0);
    v[free_col] = 1;
    for (std::size_t c = 0; c < cols_; ++c) {
      long pr = pivot_of_col[c];
      if (pr >= 0) v[c] = fq_.neg(tmp.at(static_cast<std::size_t>(pr), free_col));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Fe> Matrix::apply(const std::vector<Fe>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size");
  std::vector<Fe> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      acc += std::uint64_t(at(r, c)) * v[c];
    out[r] = static_cast<Fe>(acc % fq_.modulus());
  }
  return out;
}

}  // namespace conglab
