#include "qsg/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsg {

int ColoredNCPartition::num_blocks() const {
  int b = 0;
  for (int x : block_of) b = std::max(b, x + 1);
  return b;
}

std::vector<std::vector<int>> ColoredNCPartition::blocks() const {
  std::vector<std::vector<int>> out(num_blocks());
  for (size_t p = 0; p < block_of.size(); ++p) out[block_of[p]].push_back(static_cast<int>(p));
  return out;
}

bool is_noncrossing(const ColoredNCPartition& p) {
  // circular position: upper t -> t; lower with left-to-right index s -> k + (l-1-s)
  const int n = p.points();
  std::vector<int> circ(n);
  for (int t = 0; t < n; ++t) circ[t] = p.upper(t) ? t : p.k + (p.l - 1 - (t - p.k));
  std::vector<int> block_at_circ(n);
  for (int t = 0; t < n; ++t) block_at_circ[circ[t]] = p.block_of[t];
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (block_at_circ[a] == block_at_circ[c] && block_at_circ[b] == block_at_circ[d] &&
              block_at_circ[a] != block_at_circ[b])
            return false;
  return true;
}

bool balanced_colors(const ColoredNCPartition& p) {
  for (const auto& block : p.blocks()) {
    int white = 0, black = 0;
    for (int leg : block) {
      const int sign = p.upper(leg) ? +1 : -1;
      (p.colors[leg] == LegColor::White ? white : black) += sign;
    }
    if (white != black) return false;
  }
  return true;
}

std::vector<ColoredNCPartition> enumerate_partitions(int k, int l, const ColorPredicate& predicate,
                                                     int max_points) {
  const int n = k + l;
  if (n > max_points) throw std::invalid_argument("partition enumeration exceeds the size cap");
  std::vector<ColoredNCPartition> out;
  if (n == 0) {
    ColoredNCPartition empty;
    empty.k = k;
    empty.l = l;
    if (!predicate || predicate(empty)) out.push_back(empty);
    return out;
  }
  // restricted growth strings enumerate set partitions in canonical form
  std::vector<int> rgs(n, 0);
  while (true) {
    ColoredNCPartition p;
    p.k = k;
    p.l = l;
    p.block_of = rgs;
    p.colors.assign(n, LegColor::White);
    if (is_noncrossing(p)) {
      for (long mask = 0; mask < (1L << n); ++mask) {
        for (int leg = 0; leg < n; ++leg)
          p.colors[leg] = (mask >> leg) & 1 ? LegColor::Black : LegColor::White;
        if (!predicate || predicate(p)) out.push_back(p);
      }
    }
    // next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      const int cap = 1 + *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[i] < cap) break;
    }
    if (i == 0) break;
    ++rgs[i];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

long count_noncrossing(int n) {
  const auto all = enumerate_partitions(n, 0, [](const ColoredNCPartition& p) {
    return std::all_of(p.colors.begin(), p.colors.end(),
                       [](LegColor c) { return c == LegColor::White; });
  });
  return static_cast<long>(all.size());
}

bool is_pair_partition(const ColoredNCPartition& p) {
  for (const auto& block : p.blocks())
    if (block.size() != 2) return false;
  return true;
}

Eigen::MatrixXcd t_pi(const ColoredNCPartition& p, int n) {
  const int d = 2 * n;
  long rows = 1, cols = 1;
  for (int i = 0; i < p.l; ++i) rows *= d;
  for (int i = 0; i < p.k; ++i) cols *= d;
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(rows, cols);
  const auto blocks = p.blocks();
  std::vector<int> labels(p.points());
  for (long r = 0; r < rows; ++r) {
    // lower labels, leftmost leg highest stride
    long rr = r;
    for (int i = p.l; i-- > 0;) {
      labels[p.k + i] = static_cast<int>(rr % d);
      rr /= d;
    }
    for (long c = 0; c < cols; ++c) {
      long cc = c;
      for (int i = p.k; i-- > 0;) {
        labels[i] = static_cast<int>(cc % d);
        cc /= d;
      }
      bool ok = true;
      for (const auto& block : blocks) {
        const int ref = block[0];
        for (size_t j = 1; j < block.size() && ok; ++j) {
          const int leg = block[j];
          const int want = p.colors[leg] == p.colors[ref] ? labels[ref] : (labels[ref] ^ 1);
          ok = labels[leg] == want;
        }
        if (!ok) break;
      }
      if (ok) t(r, c) = 1.0;
    }
  }
  return t;
}

ColoredNCPartition lemma52_partition() {
  ColoredNCPartition p;
  p.k = 2;
  p.l = 2;
  p.block_of = {0, 0, 0, 0};
  // upper legs carry z and x = zbar, lower legs carry zbar and z
  p.colors = {LegColor::White, LegColor::Black, LegColor::Black, LegColor::White};
  return p;
}

SpanCheckReport span_containment_check(const std::vector<ColoredNCPartition>& partitions,
                                       const OperatorMatrix& u, int k, int l,
                                       size_t max_system_entries) {
  const auto kplus = check_kplus_relations(u);
  if (!kplus.all_ok())
    throw std::domain_error("span_containment_check requires a matrix satisfying the K+ relations");
  SpanCheckReport report;
  const int n = u.pairs();
  std::vector<Eigen::MatrixXcd> maps;
  for (const auto& p : partitions) {
    if (p.k != k || p.l != l) throw std::invalid_argument("partition shape mismatch");
    SpanCheckEntry entry;
    entry.partition = p;
    const auto t = t_pi(p, n);
    const auto res = intertwiner_check(t, u, k, l);
    entry.intertwiner = res.ok;
    entry.violation = res.violation;
    maps.push_back(t);
    report.entries.push_back(std::move(entry));
  }
  // numerical rank of the span of {vec(T_pi)}
  if (!maps.empty()) {
    Eigen::MatrixXcd stacked(maps.size(), maps[0].size());
    for (size_t i = 0; i < maps.size(); ++i)
      stacked.row(i) = Eigen::Map<const Eigen::VectorXcd>(maps[i].data(), maps[i].size()).transpose();
    const auto svals = stacked.jacobiSvd().singularValues();
    for (int i = 0; i < svals.size(); ++i)
      if (svals(i) > 1e-7 * svals(0)) ++report.span_rank;
  }
  // solution space of the intertwiner equation, when small enough
  const long dk = static_cast<long>(std::pow(u.dim, k) + 0.5);
  const long dl = static_cast<long>(std::pow(u.dim, l) + 0.5);
  const long unknowns = dk * dl;
  const long equations = dk * dl * u.op_dim * u.op_dim;
  if (static_cast<size_t>(unknowns) * equations <= max_system_entries) {
    // rows: for each (a, b) and operator coordinate, the equation
    // sum_c X(a,c) P_k(c,b)[mu nu] - sum_e P_l(a,e)[mu nu] X(e,b) = 0.
    const int m = u.op_dim;
    Eigen::MatrixXcd system = Eigen::MatrixXcd::Zero(equations, unknowns);
    const auto uk = tensor_power(u, k, 1u << 20);
    const auto ul = tensor_power(u, l, 1u << 20);
    long row = 0;
    for (long a = 0; a < dl; ++a)
      for (long b = 0; b < dk; ++b)
        for (int mu = 0; mu < m; ++mu)
          for (int nu = 0; nu < m; ++nu, ++row) {
            for (long c = 0; c < dk; ++c) system(row, a * dk + c) += uk.at(c, b)(mu, nu);
            for (long e = 0; e < dl; ++e) system(row, e * dk + b) -= ul.at(a, e)(mu, nu);
          }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system);
    const auto svals = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < svals.size(); ++i)
      if (svals(i) > 1e-7 * std::max(1.0, static_cast<double>(svals(0)))) ++rank;
    report.solution_dim = static_cast<int>(unknowns) - rank;
  }
  return report;
}

bool SpanCheckReport::all_intertwiners() const {
  return std::all_of(entries.begin(), entries.end(), [](const SpanCheckEntry& e) { return e.intertwiner; });
}

}  // namespace qsg
