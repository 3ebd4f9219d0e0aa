#include "qsg/algebra.hpp"

#include <Eigen/Dense>
#include <stdexcept>

namespace qsg {

namespace {

Eigen::MatrixXcd to_eigen(const ExactMat& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = m.at(r, c).embed();
  return out;
}

}  // namespace

CVec StructuredAlgebra::multiply(const CVec& a, const CVec& b) const {
  if (static_cast<int>(a.size()) != dim || static_cast<int>(b.size()) != dim)
    throw std::invalid_argument("element dimension mismatch");
  CVec out(dim);
  for (int i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      const Cyclo f = a[i] * b[j];
      const CVec& row = mult[i][j];
      for (int k = 0; k < dim; ++k) {
        if (row[k].is_zero()) continue;
        out[k] += f * row[k];
      }
    }
  }
  return out;
}

CVec StructuredAlgebra::star(const CVec& a) const {
  if (static_cast<int>(a.size()) != dim) throw std::invalid_argument("element dimension mismatch");
  CVec out(dim);
  for (int i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    const Cyclo c = a[i].conjugate();
    for (int k = 0; k < dim; ++k) {
      if (involution.at(i, k).is_zero()) continue;
      out[k] += c * involution.at(i, k);
    }
  }
  return out;
}

Cyclo StructuredAlgebra::omega(const CVec& a) const {
  Cyclo out;
  for (int i = 0; i < dim; ++i) out += a[i] * state[i];
  return out;
}

Cyclo StructuredAlgebra::omega_pair(const CVec& a, const CVec& b) const {
  return omega(multiply(star(a), b));
}

ExactMat StructuredAlgebra::gram() const {
  ExactMat g(dim, dim);
  std::vector<CVec> basis(dim, CVec(dim));
  for (int i = 0; i < dim; ++i) basis[i][i] = Cyclo(Rational(1));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g.at(i, j) = omega_pair(basis[i], basis[j]);
  return g;
}

ExactMat StructuredAlgebra::left_multiplication(const CVec& a) const {
  ExactMat m(dim, dim);
  for (int j = 0; j < dim; ++j) {
    CVec ej(dim);
    ej[j] = Cyclo(Rational(1));
    const CVec prod = multiply(a, ej);
    for (int k = 0; k < dim; ++k) m.at(k, j) = prod[k];
  }
  return m;
}

bool StructuredAlgebra::is_tracial() const {
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      Cyclo ab, ba;
      for (int k = 0; k < dim; ++k) {
        ab += mult[i][j][k] * state[k];
        ba += mult[j][i][k] * state[k];
      }
      if (ab != ba) return false;
    }
  return true;
}

void StructuredAlgebra::validate() const {
  std::vector<CVec> basis(dim, CVec(dim));
  for (int i = 0; i < dim; ++i) basis[i][i] = Cyclo(Rational(1));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        const CVec lhs = multiply(multiply(basis[i], basis[j]), basis[k]);
        const CVec rhs = multiply(basis[i], multiply(basis[j], basis[k]));
        if (lhs != rhs)
          throw std::invalid_argument("associativity fails at basis triple (" + std::to_string(i) + "," +
                                      std::to_string(j) + "," + std::to_string(k) + ")");
      }
  for (int i = 0; i < dim; ++i) {
    if (star(star(basis[i])) != basis[i])
      throw std::invalid_argument("involution is not of order two at basis index " + std::to_string(i));
    for (int j = 0; j < dim; ++j) {
      const CVec lhs = star(multiply(basis[i], basis[j]));
      const CVec rhs = multiply(star(basis[j]), star(basis[i]));
      if (lhs != rhs)
        throw std::invalid_argument("involution is not an antihomomorphism at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
    }
  }
  for (int i = 0; i < dim; ++i) {
    if (multiply(unit, basis[i]) != basis[i] || multiply(basis[i], unit) != basis[i])
      throw std::invalid_argument("unit axiom fails at basis index " + std::to_string(i));
  }
  if (omega(unit) != Cyclo(Rational(1))) throw std::invalid_argument("omega(1) != 1");
  const ExactMat g = gram();
  if (g != g.conj_transpose()) throw std::invalid_argument("Gram matrix is not self-adjoint");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(g));
  if (es.eigenvalues().minCoeff() <= 1e-9)
    throw std::invalid_argument("state is not faithful: Gram matrix is not positive definite");
}

StructuredAlgebra pointwise_algebra(const std::vector<Rational>& state_weights) {
  StructuredAlgebra a;
  a.dim = static_cast<int>(state_weights.size());
  a.basis_labels.resize(a.dim);
  a.mult.assign(a.dim, std::vector<CVec>(a.dim, CVec(a.dim)));
  a.involution = ExactMat(a.dim, a.dim);
  a.unit.assign(a.dim, Cyclo(Rational(1)));
  a.state.resize(a.dim);
  for (int i = 0; i < a.dim; ++i) {
    a.basis_labels[i] = "e" + std::to_string(i + 1);
    a.mult[i][i][i] = Cyclo(Rational(1));
    a.involution.at(i, i) = Cyclo(Rational(1));
    a.state[i] = Cyclo(state_weights[i]);
  }
  return a;
}

StructuredAlgebra group_algebra(const FiniteGroupData& g) {
  StructuredAlgebra a;
  a.dim = g.order;
  a.basis_labels.resize(a.dim);
  a.mult.assign(a.dim, std::vector<CVec>(a.dim, CVec(a.dim)));
  a.involution = ExactMat(a.dim, a.dim);
  a.unit.assign(a.dim, Cyclo());
  a.unit[g.identity] = Cyclo(Rational(1));
  a.state.assign(a.dim, Cyclo());
  a.state[g.identity] = Cyclo(Rational(1));  // canonical trace
  for (int x = 0; x < a.dim; ++x) {
    a.basis_labels[x] = "l_" + g.names[x];
    a.involution.at(x, g.inverse[x]) = Cyclo(Rational(1));
    for (int y = 0; y < a.dim; ++y) a.mult[x][y][g.mult[x][y]] = Cyclo(Rational(1));
  }
  return a;
}

StructuredAlgebra matrix_algebra(int k, const std::vector<Rational>& state_diag) {
  if (static_cast<int>(state_diag.size()) != k) throw std::invalid_argument("state diagonal must have length k");
  StructuredAlgebra a;
  a.dim = k * k;
  auto idx = [k](int r, int c) { return r * k + c; };
  a.basis_labels.resize(a.dim);
  a.mult.assign(a.dim, std::vector<CVec>(a.dim, CVec(a.dim)));
  a.involution = ExactMat(a.dim, a.dim);
  a.unit.assign(a.dim, Cyclo());
  a.state.assign(a.dim, Cyclo());
  for (int r = 0; r < k; ++r) {
    a.unit[idx(r, r)] = Cyclo(Rational(1));
    a.state[idx(r, r)] = Cyclo(state_diag[r]);
    for (int c = 0; c < k; ++c) {
      a.basis_labels[idx(r, c)] = "E" + std::to_string(r + 1) + std::to_string(c + 1);
      a.involution.at(idx(r, c), idx(c, r)) = Cyclo(Rational(1));
      // E_{rc} E_{uv} = delta_{cu} E_{rv}
      for (int v = 0; v < k; ++v) a.mult[idx(r, c)][idx(c, v)][idx(r, v)] = Cyclo(Rational(1));
    }
  }
  return a;
}

StructuredAlgebra direct_sum(const StructuredAlgebra& a, const StructuredAlgebra& b,
                             const Rational& weight_a, const Rational& weight_b) {
  if (weight_a + weight_b != 1) throw std::invalid_argument("state weights must sum to 1");
  StructuredAlgebra s;
  s.dim = a.dim + b.dim;
  s.basis_labels.resize(s.dim);
  s.mult.assign(s.dim, std::vector<CVec>(s.dim, CVec(s.dim)));
  s.involution = ExactMat(s.dim, s.dim);
  s.unit.resize(s.dim);
  s.state.resize(s.dim);
  for (int i = 0; i < a.dim; ++i) {
    s.basis_labels[i] = "A." + a.basis_labels[i];
    s.unit[i] = a.unit[i];
    s.state[i] = Cyclo(weight_a) * a.state[i];
    for (int k = 0; k < a.dim; ++k) s.involution.at(i, k) = a.involution.at(i, k);
    for (int j = 0; j < a.dim; ++j)
      for (int k = 0; k < a.dim; ++k) s.mult[i][j][k] = a.mult[i][j][k];
  }
  for (int i = 0; i < b.dim; ++i) {
    s.basis_labels[a.dim + i] = "B." + b.basis_labels[i];
    s.unit[a.dim + i] = b.unit[i];
    s.state[a.dim + i] = Cyclo(weight_b) * b.state[i];
    for (int k = 0; k < b.dim; ++k) s.involution.at(a.dim + i, a.dim + k) = b.involution.at(i, k);
    for (int j = 0; j < b.dim; ++j)
      for (int k = 0; k < b.dim; ++k) s.mult[a.dim + i][a.dim + j][a.dim + k] = b.mult[i][j][k];
  }
  return s;
}

OrthonormalBasis gram_orthonormalize(const StructuredAlgebra& alg, const std::vector<CVec>& vectors) {
  OrthonormalBasis out;
  // Exact pass: orthogonalize, then normalize when the norm^2 is the square
  // of a rational.  On the first non-square norm the whole computation is
  // redone in doubles so the returned family is consistently scaled.
  std::vector<CVec> ortho;   // orthogonal, not yet normalized
  std::vector<Cyclo> norms;  // omega-norm^2 of each orthogonal vector
  bool exact_ok = true;
  for (const auto& v : vectors) {
    CVec u = v;
    for (size_t j = 0; j < ortho.size(); ++j) {
      const Cyclo coeff = alg.omega_pair(ortho[j], v) / norms[j];
      if (!coeff.is_zero()) u = u - scaled(ortho[j], coeff);
    }
    const Cyclo n2 = alg.omega_pair(u, u);
    if (n2.is_zero()) throw std::domain_error("gram_orthonormalize: input vectors are linearly dependent");
    ortho.push_back(u);
    norms.push_back(n2);
    if (!n2.is_rational() || !rational_sqrt(n2.rational_part())) exact_ok = false;
  }
  if (exact_ok) {
    out.exact_mode = true;
    for (size_t j = 0; j < ortho.size(); ++j) {
      const Rational inv = Rational(1) / *rational_sqrt(norms[j].rational_part());
      out.exact.push_back(scaled(ortho[j], Cyclo(inv)));
    }
    return out;
  }
  out.exact_mode = false;
  for (size_t j = 0; j < ortho.size(); ++j) {
    const double inv = 1.0 / std::sqrt(norms[j].embed().real());
    std::vector<std::complex<double>> v(ortho[j].size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = ortho[j][i].embed() * inv;
    out.numeric.push_back(std::move(v));
  }
  return out;
}

std::vector<SpectralSubspace> regular_spectral_decomposition(const FiniteGroupData& g) {
  if (!g.characters) throw std::invalid_argument("regular_spectral_decomposition needs a character table");
  std::vector<SpectralSubspace> out;
  for (const auto& chi : *g.characters) {
    ExactMat p(g.order, g.order);
    const Cyclo scale(Rational(chi.dim, g.order));
    for (int gp = 0; gp < g.order; ++gp)
      for (int gc = 0; gc < g.order; ++gc) {
        const int h = g.mult[gp][g.inverse[gc]];
        p.at(gp, gc) = scale * chi.values[h].conjugate();
      }
    SpectralSubspace s;
    s.label = chi.label;
    s.irrep_dim = chi.dim;
    s.basis = span_basis([&] {
      std::vector<CVec> cols;
      for (int c = 0; c < g.order; ++c) cols.push_back(p.col(c));
      return cols;
    }());
    out.push_back(std::move(s));
  }
  return out;
}

SupportCheck support_subgroup_check(const FiniteGroupData& g, const std::vector<int>& dims) {
  if (static_cast<int>(dims.size()) != g.order) throw std::invalid_argument("dims must be indexed by the group");
  SupportCheck out;
  auto in_support = [&](int x) { return dims[x] > 0; };
  if (!in_support(g.identity)) {
    out.is_subgroup = false;
    out.reason = "identity not in support";
    return out;
  }
  for (int x = 0; x < g.order; ++x) {
    if (!in_support(x)) continue;
    for (int y = 0; y < g.order; ++y) {
      if (!in_support(y)) continue;
      if (!in_support(g.mult[x][y])) {
        out.is_subgroup = false;
        out.reason = "support not closed under product of " + g.names[x] + " and " + g.names[y];
        out.offending = {x, y};
        return out;
      }
    }
  }
  for (int x = 0; x < g.order; ++x) {
    if (!in_support(x)) continue;
    if (!in_support(g.inverse[x])) {
      out.is_subgroup = false;
      out.reason = "support not inverse-closed at " + g.names[x];
      out.offending = {x, g.inverse[x]};
      return out;
    }
  }
  return out;
}

}  // namespace qsg
