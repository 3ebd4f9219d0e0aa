#include "qsg/operator_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qsg {

OperatorMatrix OperatorMatrix::zero(int dim, int op_dim, bool signed_labels, double tol) {
  if (dim < 1 || op_dim < 1) throw std::invalid_argument("operator matrix dimensions must be positive");
  if (signed_labels && dim % 2 != 0) throw std::invalid_argument("signed label scheme needs even dimension");
  OperatorMatrix u;
  u.dim = dim;
  u.op_dim = op_dim;
  u.signed_labels = signed_labels;
  u.tol = tol;
  u.entries.assign(static_cast<size_t>(dim) * dim, OpEntry::Zero(op_dim, op_dim));
  return u;
}

OperatorMatrix OperatorMatrix::identity(int dim, int op_dim, bool signed_labels, double tol) {
  OperatorMatrix u = zero(dim, op_dim, signed_labels, tol);
  for (int i = 0; i < dim; ++i) u.at(i, i) = OpEntry::Identity(op_dim, op_dim);
  return u;
}

int OperatorMatrix::pairs() const {
  if (!signed_labels) throw std::domain_error("operation requires the signed label scheme");
  return dim / 2;
}

std::string OperatorMatrix::label_name(int idx) const {
  if (!signed_labels) return std::to_string(idx + 1);
  return std::string(idx % 2 == 0 ? "+" : "-") + std::to_string(idx / 2 + 1);
}

Eigen::MatrixXcd OperatorMatrix::flattened() const {
  Eigen::MatrixXcd out(dim * op_dim, dim * op_dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) out.block(r * op_dim, c * op_dim, op_dim, op_dim) = at(r, c);
  return out;
}

bool RelationReport::all_ok() const {
  return std::all_of(flags.begin(), flags.end(), [](const Flag& f) { return f.ok; });
}

double RelationReport::max_violation() const {
  double v = 0;
  for (const auto& f : flags) v = std::max(v, f.violation);
  return v;
}

const Flag& RelationReport::get(const std::string& name) const {
  for (const auto& f : flags)
    if (f.name == name) return f;
  throw std::out_of_range("no flag named " + name);
}

void RelationReport::add(const std::string& name, double violation, double tol) {
  flags.push_back({name, violation <= tol, violation});
}

double spectral_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() * m.cols() <= (1 << 16))
    return m.jacobiSvd().singularValues()(0);
  // Power iteration on M* M for larger residuals.
  Eigen::VectorXcd x = Eigen::VectorXcd::Ones(m.cols());
  x.normalize();
  double value = 0;
  for (int it = 0; it < 200; ++it) {
    Eigen::VectorXcd y = m.adjoint() * (m * x);
    const double norm = y.norm();
    if (norm == 0) return 0;
    y /= norm;
    const double next = std::sqrt(norm);
    if (std::abs(next - value) <= 1e-9 * std::max(1.0, next)) return next;
    value = next;
    x = y;
  }
  return value;
}

namespace {

double residual_norm(const Eigen::MatrixXcd& m, double tol, double* frobenius = nullptr) {
  const double frob = m.norm();
  if (frobenius) *frobenius = frob;
  // The Frobenius norm bounds the spectral norm from above; when it is well
  // below the tolerance the exact value is not needed.
  if (frob <= 0.25 * tol) return frob;
  return spectral_norm(m);
}

void require_same_shape(const OperatorMatrix& u, const OperatorMatrix& v) {
  if (u.dim != v.dim || u.signed_labels != v.signed_labels)
    throw std::invalid_argument("operator matrices have mismatched outer shape");
}

}  // namespace

RelationReport is_block_unitary(const OperatorMatrix& u) {
  RelationReport report;
  const auto flat = u.flattened();
  const auto id = Eigen::MatrixXcd::Identity(flat.rows(), flat.cols());
  report.add("unitary_left", residual_norm(flat.adjoint() * flat - id, u.tol), u.tol);
  report.add("unitary_right", residual_norm(flat * flat.adjoint() - id, u.tol), u.tol);
  return report;
}

RelationReport is_magic_unitary(const OperatorMatrix& u) {
  RelationReport report;
  const auto id = OpEntry::Identity(u.op_dim, u.op_dim);
  double self_adjoint = 0, idempotent = 0, rows = 0, cols = 0;
  for (int r = 0; r < u.dim; ++r) {
    OpEntry row_sum = OpEntry::Zero(u.op_dim, u.op_dim);
    OpEntry col_sum = OpEntry::Zero(u.op_dim, u.op_dim);
    for (int c = 0; c < u.dim; ++c) {
      const auto& e = u.at(r, c);
      self_adjoint = std::max(self_adjoint, residual_norm(e - e.adjoint(), u.tol));
      idempotent = std::max(idempotent, residual_norm(e * e - e, u.tol));
      row_sum += e;
      col_sum += u.at(c, r);
    }
    rows = std::max(rows, residual_norm(row_sum - id, u.tol));
    cols = std::max(cols, residual_norm(col_sum - id, u.tol));
  }
  report.add("entries_self_adjoint", self_adjoint, u.tol);
  report.add("entries_idempotent", idempotent, u.tol);
  report.add("row_sums", rows, u.tol);
  report.add("column_sums", cols, u.tol);
  return report;
}

RelationReport check_hplus_relations(const OperatorMatrix& u) {
  if (!u.signed_labels) throw std::domain_error("H+ relations need the signed label scheme");
  RelationReport report;
  double pi = 0, bar = 0;
  for (int r = 0; r < u.dim; ++r)
    for (int c = 0; c < u.dim; ++c) {
      const auto& e = u.at(r, c);
      pi = std::max(pi, residual_norm(e * e.adjoint() * e - e, u.tol));
      bar = std::max(bar, residual_norm(e - u.at(u.bar(r), u.bar(c)).adjoint(), u.tol));
    }
  report.add("entry_partial_isometry", pi, u.tol);
  report.add("bar_symmetry", bar, u.tol);
  for (const auto& f : is_block_unitary(u).flags) report.flags.push_back(f);
  return report;
}

RelationReport check_kplus_relations(const OperatorMatrix& u) {
  if (!u.signed_labels) throw std::domain_error("K+ relations need the signed label scheme");
  RelationReport report;
  double pi = 0, bar = 0, normal = 0;
  for (int r = 0; r < u.dim; ++r)
    for (int c = 0; c < u.dim; ++c) {
      const auto& e = u.at(r, c);
      bar = std::max(bar, residual_norm(e.adjoint() - u.at(u.bar(r), u.bar(c)), u.tol));
      pi = std::max(pi, residual_norm(e * e.adjoint() * e - e, u.tol));
      normal = std::max(normal, residual_norm(e * e.adjoint() - e.adjoint() * e, u.tol));
    }
  report.add("bar_symmetry", bar, u.tol);
  report.add("entry_partial_isometry", pi, u.tol);
  report.add("entry_normality", normal, u.tol);

  OperatorMatrix ranges = OperatorMatrix::zero(u.dim, u.op_dim, u.signed_labels, u.tol);
  for (int r = 0; r < u.dim; ++r)
    for (int c = 0; c < u.dim; ++c) ranges.at(r, c) = u.at(r, c) * u.at(r, c).adjoint();
  const auto magic = is_magic_unitary(ranges);
  report.add("range_projection_magic", magic.max_violation(), u.tol);

  const int n = u.pairs();
  double block2 = 0;
  for (int x = 0; x < u.dim; ++x)
    for (int sigma = 1; sigma <= n; ++sigma)
      for (int kappa = 1; kappa <= n; ++kappa) {
        if (sigma == kappa) continue;
        for (int j : {+1, -1})
          for (int l : {+1, -1})
            block2 = std::max(block2, residual_norm(u.at(OperatorMatrix::label_index(j, sigma), x) *
                                                        u.at(OperatorMatrix::label_index(l, kappa), x),
                                                    u.tol));
      }
  report.add("block2", block2, u.tol);
  return report;
}

Eigen::MatrixXcd lemma52_intertwiner(int d) {
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int z = 0; z < d; ++z) {
    const int zbar = z ^ 1;
    t(zbar * d + z, z * d + zbar) = 1.0;
  }
  return t;
}

namespace {

// Nonzero products U_{c_1 b_1} ... U_{c_k b_k} for a fixed tuple c, keyed by
// the row-major index of b.  fixed_rows selects whether c indexes rows
// (products along rows) or columns.  Exactly-zero factors prune the walk,
// which keeps the cost proportional to the sparsity of U.
std::vector<std::pair<long, OpEntry>> product_row(const OperatorMatrix& u, const std::vector<int>& c,
                                                  bool fixed_rows) {
  std::vector<std::pair<long, OpEntry>> prods{{0, OpEntry::Identity(u.op_dim, u.op_dim)}};
  for (int t = 0; t < static_cast<int>(c.size()); ++t) {
    std::vector<std::pair<long, OpEntry>> next;
    next.reserve(prods.size() * 2);
    for (const auto& [prefix, mat] : prods)
      for (int b = 0; b < u.dim; ++b) {
        const OpEntry& factor = fixed_rows ? u.at(c[t], b) : u.at(b, c[t]);
        if (factor.isZero(0.0)) continue;
        OpEntry prod = mat * factor;
        if (prod.isZero(0.0)) continue;
        next.emplace_back(prefix * u.dim + b, std::move(prod));
      }
    prods = std::move(next);
  }
  return prods;
}

std::vector<int> tuple_of(long index, int arity, int base) {
  std::vector<int> t(arity);
  for (int i = arity; i-- > 0;) {
    t[i] = static_cast<int>(index % base);
    index /= base;
  }
  return t;
}

}  // namespace

IntertwinerResult intertwiner_check(const Eigen::MatrixXcd& t, const OperatorMatrix& u, int k, int l) {
  const long dk = static_cast<long>(std::pow(u.dim, k) + 0.5);
  const long dl = static_cast<long>(std::pow(u.dim, l) + 0.5);
  if (t.rows() != dl || t.cols() != dk)
    throw std::invalid_argument("intertwiner has the wrong shape for the given powers");
  const int m = u.op_dim;
  Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(dl * m, dk * m);
  Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(dl * m, dk * m);

  // lhs(a, b) = sum_c T(a, c) U_{c_1 b_1} ... U_{c_k b_k}; group by c.
  for (long c = 0; c < dk; ++c) {
    bool used = false;
    for (long a = 0; a < dl && !used; ++a) used = t(a, c) != 0.0;
    if (!used) continue;
    const auto prods = product_row(u, tuple_of(c, k, u.dim), true);
    for (long a = 0; a < dl; ++a) {
      if (t(a, c) == 0.0) continue;
      for (const auto& [b, prod] : prods) lhs.block(a * m, b * m, m, m) += t(a, c) * prod;
    }
  }
  // rhs(a, b) = sum_e U_{a_1 e_1} ... U_{a_l e_l} T(e, b); group by e.
  for (long e = 0; e < dl; ++e) {
    bool used = false;
    for (long b = 0; b < dk && !used; ++b) used = t(e, b) != 0.0;
    if (!used) continue;
    const auto prods = product_row(u, tuple_of(e, l, u.dim), false);
    for (long b = 0; b < dk; ++b) {
      if (t(e, b) == 0.0) continue;
      for (const auto& [a, prod] : prods) rhs.block(a * m, b * m, m, m) += t(e, b) * prod;
    }
  }
  IntertwinerResult result;
  result.violation = residual_norm(lhs - rhs, u.tol, &result.frobenius);
  result.ok = result.violation <= u.tol;
  return result;
}

Lemma52Report lemma52_suite(const OperatorMatrix& u) {
  Lemma52Report report;
  report.hplus = check_hplus_relations(u);
  if (!report.hplus.all_ok())
    throw std::domain_error("lemma52_suite requires a matrix satisfying the H+ relations");
  const auto inter = intertwiner_check(lemma52_intertwiner(u.dim), u, 2, 2);
  report.intertwiner = {"intertwiner", inter.ok, inter.violation};
  const auto kplus = check_kplus_relations(u);
  report.normal_entries = kplus.get("entry_normality");
  report.block2 = kplus.get("block2");
  report.agree = (report.intertwiner.ok == report.normal_entries.ok) &&
                 (report.normal_entries.ok == report.block2.ok);
  return report;
}

OperatorMatrix tensor_power(const OperatorMatrix& u, int k, size_t max_outer) {
  if (k < 1) throw std::invalid_argument("tensor power needs k >= 1");
  size_t outer = 1;
  for (int i = 0; i < k; ++i) {
    outer *= u.dim;
    if (outer > max_outer) throw std::invalid_argument("tensor power exceeds the size cap");
  }
  OperatorMatrix w = OperatorMatrix::zero(static_cast<int>(outer), u.op_dim, false, u.tol);
  for (long r = 0; r < static_cast<long>(outer); ++r) {
    const auto rt = tuple_of(r, k, u.dim);
    for (long c = 0; c < static_cast<long>(outer); ++c) {
      const auto ct = tuple_of(c, k, u.dim);
      OpEntry prod = OpEntry::Identity(u.op_dim, u.op_dim);
      for (int i = 0; i < k; ++i) prod = prod * u.at(rt[i], ct[i]);
      w.at(static_cast<int>(r), static_cast<int>(c)) = prod;
    }
  }
  return w;
}

namespace {

OpEntry kron(const OpEntry& a, const OpEntry& b) {
  OpEntry out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

}  // namespace

OperatorMatrix tensor_composite(const OperatorMatrix& u, const OperatorMatrix& v) {
  require_same_shape(u, v);
  OperatorMatrix w = OperatorMatrix::zero(u.dim, u.op_dim * v.op_dim, u.signed_labels, u.tol);
  for (int x = 0; x < u.dim; ++x)
    for (int y = 0; y < u.dim; ++y) {
      OpEntry sum = OpEntry::Zero(w.op_dim, w.op_dim);
      for (int z = 0; z < u.dim; ++z) sum += kron(u.at(x, z), v.at(z, y));
      w.at(x, y) = sum;
    }
  return w;
}

OperatorMatrix antipode_transform(const OperatorMatrix& u) {
  OperatorMatrix w = OperatorMatrix::zero(u.dim, u.op_dim, u.signed_labels, u.tol);
  for (int x = 0; x < u.dim; ++x)
    for (int y = 0; y < u.dim; ++y) w.at(x, y) = u.at(y, x).adjoint();
  return w;
}

OperatorMatrix counit_transform(const OperatorMatrix& u) {
  return OperatorMatrix::identity(u.dim, 1, u.signed_labels, u.tol);
}

std::map<FreeProductWord, OpEntry> induced_action_coefficients(const OperatorMatrix& u,
                                                               const FreeProductWord& word,
                                                               const Factors& factors,
                                                               const std::vector<FreeProductWord>& ball) {
  const int n = u.pairs();
  if (static_cast<int>(factors.size()) != n)
    throw std::invalid_argument("factor count must match the label scheme");
  std::map<FreeProductWord, OpEntry> state;
  state[FreeProductWord{}] = OpEntry::Identity(u.op_dim, u.op_dim);
  for (const auto& block : word.blocks) {
    const long reps = block.element < 0 ? -block.element : block.element;
    const int j = block.element < 0 ? -1 : +1;
    for (long step = 0; step < reps; ++step) {
      std::map<FreeProductWord, OpEntry> next;
      const int col = OperatorMatrix::label_index(j, block.factor + 1);
      for (const auto& [w, coeff] : state) {
        for (int sigma = 1; sigma <= n; ++sigma) {
          for (int i : {+1, -1}) {
            const auto& entry = u.at(OperatorMatrix::label_index(i, sigma), col);
            if (entry.norm() == 0) continue;
            const FreeProductWord next_word =
                multiply(factors, w, FreeProductWord{{Block{sigma - 1, i}}});
            auto [it, inserted] = next.emplace(next_word, OpEntry(coeff * entry));
            if (!inserted) it->second += coeff * entry;
          }
        }
      }
      state = std::move(next);
    }
  }
  std::map<FreeProductWord, OpEntry> out;
  std::set<FreeProductWord> members(ball.begin(), ball.end());
  for (auto& [w, coeff] : state) {
    if (!members.count(w)) {
      if (spectral_norm(coeff) > u.tol)
        throw std::domain_error("induced action: coefficient mass escapes the given ball");
      continue;
    }
    out.emplace(w, std::move(coeff));
  }
  return out;
}

RelationReport filtration_preservation_check(const OperatorMatrix& u, const OrthogonalFiltration& f) {
  const auto& alg = *f.algebra;
  if (u.dim != alg.dim) throw std::invalid_argument("outer dimension must match the algebra");
  const auto exact_proj = projections(f);
  std::vector<Eigen::MatrixXcd> proj;
  for (const auto& p : exact_proj) {
    Eigen::MatrixXcd q(alg.dim, alg.dim);
    for (int r = 0; r < alg.dim; ++r)
      for (int c = 0; c < alg.dim; ++c) q(r, c) = p.at(r, c).embed();
    proj.push_back(std::move(q));
  }
  Eigen::VectorXcd omega(alg.dim);
  for (int i = 0; i < alg.dim; ++i) omega(i) = alg.state[i].embed();

  double cross = 0, state_violation = 0;
  for (size_t p = 0; p < f.parts.size(); ++p) {
    for (const auto& v : f.parts[p]) {
      Eigen::VectorXcd x(alg.dim);
      for (int i = 0; i < alg.dim; ++i) x(i) = v[i].embed();
      // operator coefficients of alpha(v)
      std::vector<OpEntry> coeff(alg.dim, OpEntry::Zero(u.op_dim, u.op_dim));
      for (int i = 0; i < alg.dim; ++i)
        for (int jj = 0; jj < alg.dim; ++jj) {
          if (x(jj) == 0.0) continue;
          coeff[i] += x(jj) * u.at(i, jj);
        }
      for (size_t pp = 0; pp < f.parts.size(); ++pp) {
        if (pp == p) continue;
        for (int i = 0; i < alg.dim; ++i) {
          OpEntry comp = OpEntry::Zero(u.op_dim, u.op_dim);
          for (int kk = 0; kk < alg.dim; ++kk) {
            if (proj[pp](i, kk) == 0.0) continue;
            comp += proj[pp](i, kk) * coeff[kk];
          }
          cross = std::max(cross, residual_norm(comp, u.tol));
        }
      }
      OpEntry pushed = OpEntry::Zero(u.op_dim, u.op_dim);
      for (int i = 0; i < alg.dim; ++i) pushed += omega(i) * coeff[i];
      const std::complex<double> omega_v = (omega.transpose() * x)(0, 0);
      state_violation = std::max(
          state_violation,
          residual_norm(pushed - omega_v * OpEntry::Identity(u.op_dim, u.op_dim), u.tol));
    }
  }
  RelationReport report;
  report.add("part_components", cross, u.tol);
  report.add("state_preservation", state_violation, u.tol);
  return report;
}

}  // namespace qsg
