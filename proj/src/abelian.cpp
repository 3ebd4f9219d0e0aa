#include "qsg/abelian.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qsg {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factors)
    : FiniteAbelianGroup(factors, [&] {
        std::vector<std::vector<int>> gens;
        for (size_t i = 0; i < factors.size(); ++i) {
          std::vector<int> e(factors.size(), 0);
          e[i] = 1;
          gens.push_back(e);
          if (factors[i] > 2) {
            e[i] = factors[i] - 1;
            gens.push_back(e);
          }
        }
        return gens;
      }()) {}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factors, std::vector<std::vector<int>> generators)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("need at least one cyclic factor");
  for (int r : factors_) {
    if (r < 1) throw std::invalid_argument("cyclic factor orders must be >= 1");
    size_ *= r;
    char_order_ = std::lcm(char_order_, r);
  }
  build_lengths(generators);
}

std::vector<int> FiniteAbelianGroup::element(int index) const {
  std::vector<int> t(factors_.size());
  for (size_t i = factors_.size(); i-- > 0;) {
    t[i] = index % factors_[i];
    index /= factors_[i];
  }
  return t;
}

int FiniteAbelianGroup::index(const std::vector<int>& tuple) const {
  if (tuple.size() != factors_.size()) throw std::invalid_argument("tuple arity mismatch");
  int idx = 0;
  for (size_t i = 0; i < factors_.size(); ++i) {
    const int c = ((tuple[i] % factors_[i]) + factors_[i]) % factors_[i];
    idx = idx * factors_[i] + c;
  }
  return idx;
}

int FiniteAbelianGroup::add(int a, int b) const {
  const auto ta = element(a), tb = element(b);
  std::vector<int> t(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) t[i] = (ta[i] + tb[i]) % factors_[i];
  return index(t);
}

int FiniteAbelianGroup::negate(int a) const {
  const auto ta = element(a);
  std::vector<int> t(factors_.size());
  for (size_t i = 0; i < factors_.size(); ++i) t[i] = (factors_[i] - ta[i]) % factors_[i];
  return index(t);
}

void FiniteAbelianGroup::build_lengths(const std::vector<std::vector<int>>& generators) {
  std::vector<int> gen_idx;
  for (const auto& g : generators) {
    const int i = index(g);
    if (i != 0) gen_idx.push_back(i);
  }
  length_.assign(size_, -1);
  length_[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (int s : gen_idx) {
      const int y = add(x, s);
      if (length_[y] < 0) {
        length_[y] = length_[x] + 1;
        queue.push_back(y);
      }
    }
  }
  for (int x = 0; x < size_; ++x)
    if (length_[x] < 0) throw std::invalid_argument("generating set does not generate the group");
}

Cyclo FiniteAbelianGroup::character(int s, int t) const {
  const auto ts = element(s), tt = element(t);
  long exp = 0;
  for (size_t i = 0; i < factors_.size(); ++i)
    exp += static_cast<long>(ts[i]) * tt[i] * (char_order_ / factors_[i]);
  return Cyclo::root_of_unity(static_cast<unsigned>(char_order_), exp);
}

std::vector<std::vector<int>> length_partition(const FiniteAbelianGroup& g) {
  int max_len = 0;
  for (int x = 0; x < g.size(); ++x) max_len = std::max(max_len, g.length(x));
  std::vector<std::vector<int>> parts(max_len + 1);
  for (int x = 0; x < g.size(); ++x) parts[g.length(x)].push_back(x);
  return parts;
}

ExactMat fourier_matrix(const FiniteAbelianGroup& g) {
  const int m = g.size();
  ExactMat f(m, m);
  const Cyclo scale(Rational(1, m));
  for (int chi = 0; chi < m; ++chi)
    for (int gamma = 0; gamma < m; ++gamma) f.at(chi, gamma) = scale * g.character(chi, gamma);
  return f;
}

std::vector<ColoredMatrix> qm_matrices(const FiniteAbelianGroup& g) {
  const int m = g.size();
  const auto parts = length_partition(g);
  bool symmetric = true;
  for (int x = 0; x < m; ++x) symmetric = symmetric && g.length(x) == g.length(g.negate(x));
  std::vector<ColoredMatrix> out;
  const ExactMat fourier = fourier_matrix(g);
  const ExactMat fourier_inv = inverse(fourier);
  for (size_t len = 0; len < parts.size(); ++len) {
    ExactMat q(m, m);
    for (int s = 0; s < m; ++s)
      for (int t = 0; t < m; ++t) {
        // conj(chi_s) chi_t = chi_{t-s} entrywise on gamma
        const int diff = g.add(t, g.negate(s));
        Cyclo sum;
        for (int gamma : parts[len]) sum += g.character(diff, gamma);
        q.at(s, t) = sum;
      }
    // Internal consistency: Q_m = M F P_m F^-1; this uses F_m = -F_m, so it
    // only applies for symmetric generating sets.
    if (symmetric) {
      ExactMat p(m, m);
      for (int gamma : parts[len]) p.at(gamma, gamma) = Cyclo(Rational(1));
      if ((fourier * p * fourier_inv).scaled(Cyclo(Rational(m))) != q)
        throw std::logic_error("qm_matrices: Fourier-conjugation cross-check failed");
    }
    out.push_back(ColoredMatrix::from(q));
  }
  return out;
}

HypercubeReport qm_distance_comparison(const FiniteAbelianGroup& g) {
  const int m = g.size();
  const auto qs = qm_matrices(g);
  HypercubeReport report;
  report.k = static_cast<int>(g.factors().size());
  // Joint color class of (s,t): tuple of palette indices across the Q_m.
  std::map<std::vector<int>, int> class_of;
  report.q_class.assign(m, std::vector<int>(m));
  report.distance.assign(m, std::vector<int>(m));
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      std::vector<int> key;
      key.reserve(qs.size());
      for (const auto& q : qs) key.push_back(q.color_index(s, t));
      auto [it, inserted] = class_of.emplace(key, static_cast<int>(class_of.size()));
      report.q_class[s][t] = it->second;
      report.distance[s][t] = g.length(g.add(s, g.negate(t)));
    }
  report.num_classes = static_cast<int>(class_of.size());
  // The partitions coincide iff q_class is constant on distance classes and
  // distinct across them.
  std::map<int, int> q_of_distance;
  bool coincide = true;
  for (int s = 0; s < m && coincide; ++s)
    for (int t = 0; t < m && coincide; ++t) {
      auto [it, inserted] = q_of_distance.emplace(report.distance[s][t], report.q_class[s][t]);
      if (!inserted && it->second != report.q_class[s][t]) coincide = false;
    }
  if (coincide) {
    std::set<int> distinct;
    for (const auto& [d, q] : q_of_distance) distinct.insert(q);
    coincide = distinct.size() == q_of_distance.size();
  }
  report.partitions_coincide = coincide;
  return report;
}

ColoredMatrix joint_coloring(const FiniteAbelianGroup& g) {
  const auto report = qm_distance_comparison(g);
  const int m = g.size();
  ExactMat joint(m, m);
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) joint.at(s, t) = Cyclo(Rational(report.q_class[s][t]));
  return ColoredMatrix::from(joint);
}

DualFiltration dual_filtration(const FiniteAbelianGroup& g) {
  // C[G] as a group algebra on the element list of g.
  FiniteGroupData data;
  data.order = g.size();
  data.identity = 0;
  data.names.resize(data.order);
  data.mult.assign(data.order, std::vector<int>(data.order));
  data.inverse.resize(data.order);
  for (int a = 0; a < data.order; ++a) {
    const auto t = g.element(a);
    std::string name;
    for (size_t i = 0; i < t.size(); ++i) name += (i ? "," : "(") + std::to_string(t[i]);
    data.names[a] = name + ")";
    data.inverse[a] = g.negate(a);
    for (int b = 0; b < data.order; ++b) data.mult[a][b] = g.add(a, b);
  }
  DualFiltration out;
  out.algebra = std::make_shared<StructuredAlgebra>(group_algebra(data));
  out.filtration.algebra = out.algebra.get();
  for (const auto& part : length_partition(g)) {
    std::vector<CVec> vectors;
    for (int x : part) {
      CVec v(data.order);
      v[x] = Cyclo(Rational(1));
      vectors.push_back(std::move(v));
    }
    out.filtration.parts.push_back(std::move(vectors));
    out.filtration.labels.push_back("len" + std::to_string(out.filtration.labels.size()));
  }
  return out;
}

}  // namespace qsg
