#include "qsg/exact_matrix.hpp"

#include <stdexcept>

namespace qsg {

ExactMat ExactMat::identity(int n) {
  ExactMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyclo(Rational(1));
  return m;
}

ExactMat ExactMat::from_rows(const std::vector<CVec>& rows) {
  if (rows.empty()) return ExactMat();
  ExactMat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols_) throw std::invalid_argument("ragged rows");
    for (int c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

ExactMat ExactMat::from_columns(const std::vector<CVec>& cols) {
  if (cols.empty()) return ExactMat();
  ExactMat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols_; ++c) {
    if (static_cast<int>(cols[c].size()) != m.rows_) throw std::invalid_argument("ragged columns");
    for (int r = 0; r < m.rows_; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

CVec ExactMat::row(int r) const {
  CVec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

CVec ExactMat::col(int c) const {
  CVec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

ExactMat ExactMat::operator+(const ExactMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  ExactMat m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

ExactMat ExactMat::operator-(const ExactMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  ExactMat m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

ExactMat ExactMat::operator*(const ExactMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch");
  ExactMat m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Cyclo& a = at(r, k);
      if (a.is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c) {
        if (o.at(k, c).is_zero()) continue;
        m.at(r, c) += a * o.at(k, c);
      }
    }
  return m;
}

ExactMat ExactMat::scaled(const Cyclo& s) const {
  ExactMat m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
  return m;
}

ExactMat ExactMat::conj_transpose() const {
  ExactMat m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c).conjugate();
  return m;
}

ExactMat ExactMat::transpose() const {
  ExactMat m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
  return m;
}

ExactMat ExactMat::conj() const {
  ExactMat m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].conjugate();
  return m;
}

bool ExactMat::operator==(const ExactMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < data_.size(); ++i)
    if (data_[i] != o.data_[i]) return false;
  return true;
}

bool ExactMat::is_zero() const {
  for (const auto& c : data_)
    if (!c.is_zero()) return false;
  return true;
}

CVec ExactMat::apply(const CVec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("shape mismatch");
  CVec out(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      if (at(r, c).is_zero() || v[c].is_zero()) continue;
      out[r] += at(r, c) * v[c];
    }
  return out;
}

std::vector<std::vector<std::complex<double>>> ExactMat::embed() const {
  std::vector<std::vector<std::complex<double>>> out(rows_, std::vector<std::complex<double>>(cols_));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out[r][c] = at(r, c).embed();
  return out;
}

namespace {

// Row echelon form in place; returns pivot columns.  First nonzero pivot in
// column order, rows normalized to leading coefficient 1, full reduction
// above and below the pivot.
std::vector<int> rref(ExactMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (!m.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
    const Cyclo inv = m.at(r, c).inverse();
    for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Cyclo f = m.at(i, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(ExactMat m) { return static_cast<int>(rref(m).size()); }

Cyclo determinant(ExactMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  Cyclo det(Rational(1));
  const int n = m.rows();
  for (int c = 0; c < n; ++c) {
    int pr = -1;
    for (int i = c; i < n; ++i)
      if (!m.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) return Cyclo(Rational(0));
    if (pr != c) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    const Cyclo inv = m.at(c, c).inverse();
    for (int i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      const Cyclo f = m.at(i, c) * inv;
      for (int j = c; j < n; ++j) m.at(i, j) -= f * m.at(c, j);
    }
  }
  return det;
}

ExactMat inverse(ExactMat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = m.rows();
  ExactMat aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = Cyclo(Rational(1));
  }
  const auto pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1) throw std::domain_error("singular matrix");
  ExactMat out(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
  return out;
}

std::vector<CVec> kernel_basis(const ExactMat& m) {
  ExactMat e = m;
  const auto pivots = rref(e);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<CVec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    CVec v(m.cols());
    v[free] = Cyclo(Rational(1));
    for (size_t p = 0; p < pivots.size(); ++p) v[pivots[p]] = -e.at(static_cast<int>(p), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<CVec> span_basis(const std::vector<CVec>& vectors) {
  if (vectors.empty()) return {};
  ExactMat m = ExactMat::from_rows(vectors);
  const auto pivots = rref(m);
  std::vector<CVec> basis;
  for (size_t p = 0; p < pivots.size(); ++p) basis.push_back(m.row(static_cast<int>(p)));
  return basis;
}

bool in_span(const std::vector<CVec>& vectors, const CVec& v) {
  auto basis = span_basis(vectors);
  const int r = static_cast<int>(basis.size());
  basis.push_back(v);
  return static_cast<int>(span_basis(basis).size()) == r;
}

std::vector<CVec> span_intersection(const std::vector<CVec>& a, const std::vector<CVec>& b) {
  if (a.empty() || b.empty()) return {};
  // x in both spans iff x = A^T s = B^T t; solve [A^T | -B^T] (s,t) = 0.
  const int dim = static_cast<int>(a[0].size());
  ExactMat sys(dim, static_cast<int>(a.size() + b.size()));
  for (int r = 0; r < dim; ++r) {
    for (size_t j = 0; j < a.size(); ++j) sys.at(r, static_cast<int>(j)) = a[j][r];
    for (size_t j = 0; j < b.size(); ++j) sys.at(r, static_cast<int>(a.size() + j)) = -b[j][r];
  }
  std::vector<CVec> vectors;
  for (const auto& k : kernel_basis(sys)) {
    CVec x(dim);
    for (size_t j = 0; j < a.size(); ++j)
      if (!k[j].is_zero()) x = x + scaled(a[j], k[j]);
    vectors.push_back(std::move(x));
  }
  return span_basis(vectors);
}

CVec operator+(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  CVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

CVec operator-(const CVec& a, const CVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  CVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

CVec scaled(const CVec& v, const Cyclo& s) {
  CVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
  return out;
}

}  // namespace qsg
