#pragma once

#include <complex>
#include <vector>

#include "qsg/cyclotomic.hpp"

namespace qsg {

using CVec = std::vector<Cyclo>;

// Dense matrix over the cyclotomic field, row-major.  Small sizes only; every
// operation is exact.
class ExactMat {
 public:
  ExactMat() : rows_(0), cols_(0) {}
  ExactMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static ExactMat identity(int n);
  static ExactMat from_rows(const std::vector<CVec>& rows);
  static ExactMat from_columns(const std::vector<CVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Cyclo& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Cyclo& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  CVec row(int r) const;
  CVec col(int c) const;

  ExactMat operator+(const ExactMat& o) const;
  ExactMat operator-(const ExactMat& o) const;
  ExactMat operator*(const ExactMat& o) const;
  ExactMat scaled(const Cyclo& s) const;
  ExactMat conj_transpose() const;
  ExactMat transpose() const;
  ExactMat conj() const;

  bool operator==(const ExactMat& o) const;
  bool operator!=(const ExactMat& o) const { return !(*this == o); }
  bool is_zero() const;

  CVec apply(const CVec& v) const;  // matrix * column vector

  std::vector<std::vector<std::complex<double>>> embed() const;

 private:
  int rows_, cols_;
  std::vector<Cyclo> data_;
};

// Rank via Gaussian elimination.
int rank(ExactMat m);

// Determinant of a square matrix.
Cyclo determinant(ExactMat m);

// Inverse of a square invertible matrix; throws std::domain_error if singular.
ExactMat inverse(ExactMat m);

// Basis of the null space {x : m x = 0}, deterministic (free columns in order,
// pivot-normalized).
std::vector<CVec> kernel_basis(const ExactMat& m);

// Echelon basis of the span of the given vectors (each normalized to leading
// coefficient 1); deterministic.
std::vector<CVec> span_basis(const std::vector<CVec>& vectors);

// Does v lie in the span of the given vectors?
bool in_span(const std::vector<CVec>& vectors, const CVec& v);

// Basis of span(a) intersect span(b).
std::vector<CVec> span_intersection(const std::vector<CVec>& a, const std::vector<CVec>& b);

CVec operator+(const CVec& a, const CVec& b);
CVec operator-(const CVec& a, const CVec& b);
CVec scaled(const CVec& v, const Cyclo& s);

}  // namespace qsg
