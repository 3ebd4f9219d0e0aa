#include "qsg/filtration.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qsg {

ColoredMatrix ColoredMatrix::from(const ExactMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("colored matrix must be square");
  unsigned order = 1;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) order = std::lcm(order, m.at(r, c).order());
  ColoredMatrix out;
  out.entries = ExactMat(m.rows(), m.cols());
  std::set<Cyclo> values;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      out.entries.at(r, c) = m.at(r, c).promoted(order);
      values.insert(out.entries.at(r, c));
    }
  out.palette.assign(values.begin(), values.end());
  out.masks.assign(out.palette.size(), std::vector<std::vector<int>>(m.rows(), std::vector<int>(m.cols(), 0)));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out.masks[out.color_index(r, c)][r][c] = 1;
  return out;
}

int ColoredMatrix::color_index(int r, int c) const {
  const auto it = std::lower_bound(palette.begin(), palette.end(), entries.at(r, c));
  return static_cast<int>(it - palette.begin());
}

std::vector<std::pair<Cyclo, std::vector<std::vector<int>>>> color_components(const ColoredMatrix& m) {
  std::vector<std::pair<Cyclo, std::vector<std::vector<int>>>> out;
  for (size_t i = 0; i < m.palette.size(); ++i) out.emplace_back(m.palette[i], m.masks[i]);
  return out;
}

namespace {

std::vector<CVec> all_part_vectors(const OrthogonalFiltration& f) {
  std::vector<CVec> all;
  for (const auto& part : f.parts)
    for (const auto& v : part) all.push_back(v);
  return all;
}

}  // namespace

ValidationReport validate(const OrthogonalFiltration& f) {
  ValidationReport report;
  auto fail = [&](std::string what, int a, int b) {
    report.valid = false;
    report.issues.push_back({std::move(what), a, b});
  };
  const auto& alg = *f.algebra;
  if (f.parts.empty()) {
    fail("filtration has no parts", -1, -1);
    return report;
  }
  for (size_t i = 0; i < f.parts.size(); ++i) {
    if (f.parts[i].empty()) fail("part has no basis vectors", static_cast<int>(i), -1);
    for (const auto& v : f.parts[i])
      if (static_cast<int>(v.size()) != alg.dim) {
        fail("basis vector has wrong dimension", static_cast<int>(i), -1);
        return report;
      }
    if (!f.parts[i].empty() &&
        static_cast<int>(span_basis(f.parts[i]).size()) != static_cast<int>(f.parts[i].size()))
      fail("part basis is linearly dependent", static_cast<int>(i), -1);
  }
  // (i) part 0 = C * unit
  if (!f.parts[0].empty()) {
    if (f.parts[0].size() != 1 || !in_span(f.parts[0], alg.unit) || !in_span({alg.unit}, f.parts[0][0]))
      fail("part 0 is not the span of the unit", 0, -1);
  }
  // (ii) omega-orthogonality across parts
  for (size_t i = 0; i < f.parts.size(); ++i) {
    for (size_t j = i + 1; j < f.parts.size(); ++j) {
      bool orthogonal = true;
      for (const auto& a : f.parts[i])
        for (const auto& b : f.parts[j]) orthogonal = orthogonal && alg.omega_pair(a, b).is_zero();
      if (!orthogonal) fail("parts are not omega-orthogonal", static_cast<int>(i), static_cast<int>(j));
    }
  }
  // (iii) spanning and involution closure
  {
    const auto all = all_part_vectors(f);
    const auto basis = span_basis(all);
    if (static_cast<int>(basis.size()) != alg.dim) fail("parts do not span the algebra", -1, -1);
    for (const auto& v : all)
      if (!in_span(basis, alg.star(v))) {
        fail("span of the parts is not involution-closed", -1, -1);
        break;
      }
  }
  return report;
}

std::vector<ExactMat> projections(const OrthogonalFiltration& f) {
  const auto report = validate(f);
  if (!report.valid) throw std::domain_error("projections: invalid filtration: " + report.issues.front().what);
  const auto& alg = *f.algebra;
  const ExactMat gram = alg.gram();
  std::vector<ExactMat> out;
  for (const auto& part : f.parts) {
    const ExactMat b = ExactMat::from_columns(part);
    const ExactMat bstar_g = b.conj_transpose() * gram;
    const ExactMat m = bstar_g * b;  // part Gram matrix, positive definite
    out.push_back(b * inverse(m) * bstar_g);
  }
  return out;
}

std::vector<Rational> default_weights(size_t parts) {
  std::vector<Rational> w(parts);
  for (size_t i = 0; i < parts; ++i) w[i] = Rational(static_cast<long>(i));
  return w;
}

ColoredMatrix q_matrix(const OrthogonalFiltration& f, const std::vector<Rational>& weights) {
  if (weights.size() != f.parts.size()) throw std::invalid_argument("one weight per part required");
  for (size_t i = 0; i < weights.size(); ++i)
    for (size_t j = i + 1; j < weights.size(); ++j)
      if (weights[i] == weights[j]) throw std::invalid_argument("q_matrix weights must be pairwise distinct");
  const auto proj = projections(f);
  ExactMat q(f.algebra->dim, f.algebra->dim);
  for (size_t i = 0; i < proj.size(); ++i) q = q + proj[i].scaled(Cyclo(weights[i]));
  return ColoredMatrix::from(q);
}

OrthogonalFiltration join(const OrthogonalFiltration& f, const OrthogonalFiltration& g) {
  if (f.algebra != g.algebra) throw std::invalid_argument("join requires filtrations of the same algebra");
  OrthogonalFiltration out;
  out.algebra = f.algebra;
  std::vector<size_t> dims_f(f.parts.size(), 0), dims_g(g.parts.size(), 0);
  for (size_t i = 0; i < f.parts.size(); ++i) {
    for (size_t j = 0; j < g.parts.size(); ++j) {
      auto inter = span_intersection(f.parts[i], g.parts[j]);
      if (inter.empty()) continue;
      dims_f[i] += inter.size();
      dims_g[j] += inter.size();
      out.parts.push_back(std::move(inter));
      out.labels.push_back("(" + (i < f.labels.size() ? f.labels[i] : std::to_string(i)) + "," +
                           (j < g.labels.size() ? g.labels[j] : std::to_string(j)) + ")");
    }
  }
  for (size_t i = 0; i < f.parts.size(); ++i)
    if (dims_f[i] != f.parts[i].size())
      throw std::domain_error("join: part " + std::to_string(i) +
                              " of the first filtration does not decompose into intersections");
  for (size_t j = 0; j < g.parts.size(); ++j)
    if (dims_g[j] != g.parts[j].size())
      throw std::domain_error("join: part " + std::to_string(j) +
                              " of the second filtration does not decompose into intersections");
  return out;
}

VdwResult vdw_parameter(const OrthogonalFiltration& f, size_t part) {
  const auto& alg = *f.algebra;
  const auto e_basis = gram_orthonormalize(alg, f.parts[part]);
  VdwResult out;
  if (e_basis.exact_mode) {
    std::vector<CVec> starred;
    for (const auto& e : e_basis.exact) starred.push_back(alg.star(e));
    const auto f_basis = gram_orthonormalize(alg, starred);
    if (f_basis.exact_mode) {
      const int k = static_cast<int>(starred.size());
      ExactMat s(k, k);
      for (int l = 0; l < k; ++l)
        for (int m = 0; m < k; ++m) s.at(l, m) = alg.omega_pair(f_basis.exact[m], starred[l]);
      out.exact_mode = true;
      out.exact = s.conj() * s.transpose();
      return out;
    }
  }
  // Numeric fallback: redo both Gram-Schmidt passes in doubles.
  const int dim = alg.dim;
  const int k = static_cast<int>(f.parts[part].size());
  Eigen::MatrixXcd gram(dim, dim);
  {
    const ExactMat g = alg.gram();
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) gram(r, c) = g.at(r, c).embed();
  }
  auto pair = [&](const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) -> std::complex<double> {
    return (a.adjoint() * gram * b)(0, 0);
  };
  auto orthonormalize = [&](std::vector<Eigen::VectorXcd> vs) {
    for (size_t i = 0; i < vs.size(); ++i) {
      for (size_t j = 0; j < i; ++j) vs[i] -= pair(vs[j], vs[i]) * vs[j];
      vs[i] /= std::sqrt(pair(vs[i], vs[i]).real());
    }
    return vs;
  };
  std::vector<Eigen::VectorXcd> e_vecs;
  for (const auto& v : f.parts[part]) {
    Eigen::VectorXcd x(dim);
    for (int i = 0; i < dim; ++i) x(i) = v[i].embed();
    e_vecs.push_back(x);
  }
  e_vecs = orthonormalize(std::move(e_vecs));
  ExactMat star_mat = alg.involution;  // star of a coordinate vector, numerically
  Eigen::MatrixXcd star(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) star(c, r) = star_mat.at(r, c).embed();
  std::vector<Eigen::VectorXcd> starred;
  for (const auto& e : e_vecs) starred.push_back(star * e.conjugate());
  const auto f_vecs = orthonormalize(starred);
  Eigen::MatrixXcd s(k, k);
  for (int l = 0; l < k; ++l)
    for (int m = 0; m < k; ++m) s(l, m) = pair(f_vecs[m], starred[l]);
  Eigen::MatrixXcd q = s.conjugate() * s.transpose();
  out.exact_mode = false;
  out.numeric.assign(k, std::vector<std::complex<double>>(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) out.numeric[r][c] = q(r, c);
  return out;
}

DiracResult dirac_operator(const OrthogonalFiltration& f, const std::vector<int>& levels) {
  if (levels.size() != f.parts.size()) throw std::invalid_argument("one level per part required");
  const auto proj = projections(f);
  const auto& alg = *f.algebra;
  DiracResult out;
  out.dirac = ExactMat(alg.dim, alg.dim);
  for (size_t i = 0; i < proj.size(); ++i)
    out.dirac = out.dirac + proj[i].scaled(Cyclo(Rational(levels[i])));
  for (int a = 0; a < alg.dim; ++a) {
    CVec ea(alg.dim);
    ea[a] = Cyclo(Rational(1));
    const ExactMat pi_a = alg.left_multiplication(ea);
    DiracEntry entry;
    entry.basis_label = alg.basis_labels[a];
    entry.commutator = out.dirac * pi_a - pi_a * out.dirac;
    Eigen::MatrixXcd cm(alg.dim, alg.dim);
    for (int r = 0; r < alg.dim; ++r)
      for (int c = 0; c < alg.dim; ++c) cm(r, c) = entry.commutator.at(r, c).embed();
    entry.norm = cm.jacobiSvd().singularValues()(0);
    out.commutators.push_back(std::move(entry));
  }
  return out;
}

SpectralTripleTypeResult spectral_triple_type_check(const OrthogonalFiltration& f, int m_bound,
                                                    const std::vector<int>& levels) {
  if (levels.size() != f.parts.size()) throw std::invalid_argument("one level per part required");
  const auto proj = projections(f);
  const auto& alg = *f.algebra;
  SpectralTripleTypeResult out;
  for (size_t k = 0; k < f.parts.size(); ++k) {
    for (size_t l = 0; l < f.parts.size(); ++l) {
      for (const auto& u : f.parts[k]) {
        for (const auto& v : f.parts[l]) {
          for (int starred = 0; starred < 2; ++starred) {
            const CVec prod = alg.multiply(starred ? alg.star(u) : u, v);
            for (size_t p = 0; p < f.parts.size(); ++p) {
              if (levels[p] <= levels[l] + m_bound) continue;
              CVec comp = proj[p].apply(prod);
              bool zero = true;
              for (const auto& c : comp) zero = zero && c.is_zero();
              if (!zero) {
                out.holds = false;
                out.part_k = static_cast<int>(k);
                out.part_l = static_cast<int>(l);
                out.violating_part = static_cast<int>(p);
                out.starred = starred;
                return out;
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace qsg
