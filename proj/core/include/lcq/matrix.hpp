#pragma once

#include <vector>

#include "lcq/rational.hpp"

namespace lcq {

/// Dense matrix of exact rationals, row-major.
class Matrix {
 public:
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  Rational trace() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<Rational> e_;
};

}  // namespace lcq
