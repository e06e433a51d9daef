#ifndef CONGLAB_LINALG_HPP
#define CONGLAB_LINALG_HPP

#include <cstddef>
#include <vector>

#include "conglab/field.hpp"

namespace conglab {

// Dense row-major matrix over F_q.
class Matrix {
public:
  Matrix(const PrimeField& fq, std::size_t rows, std::size_t cols)
      : fq_(fq), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return fq_; }

  Fe& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fe at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // In-place reduced row echelon form; returns the rank.
  std::size_t rref();

  std::size_t rank() const;

  // Determinant of a square matrix.
  Fe det() const;

  // Reduced-echelon basis of the right kernel, one vector per row of the
  // returned matrix (each of length cols()).
  std::vector<std::vector<Fe>> nullspace() const;

  std::vector<Fe> apply(const std::vector<Fe>& v) const;

private:
  PrimeField fq_;
  std::size_t rows_, cols_;
  std::vector<Fe> data_;
};

}  // namespace conglab

#endif
