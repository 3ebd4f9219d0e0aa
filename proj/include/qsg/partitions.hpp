#pragma once

#include <functional>

#include "qsg/operator_matrix.hpp"

namespace qsg {

enum class LegColor : int { White = 0, Black = 1 };

// Noncrossing partition of k upper and l lower points with colored legs.
// Points are stored upper 0..k-1 left to right, then lower k..k+l-1 left to
// right; the noncrossing test runs along the circular boundary order (upper
// left to right, then lower right to left).
struct ColoredNCPartition {
  int k = 0, l = 0;
  std::vector<int> block_of;     // size k+l, block ids normalized by first occurrence
  std::vector<LegColor> colors;  // size k+l

  int points() const { return k + l; }
  int num_blocks() const;
  std::vector<std::vector<int>> blocks() const;
  bool upper(int point) const { return point < k; }
};

bool is_noncrossing(const ColoredNCPartition& p);

using ColorPredicate = std::function<bool(const ColoredNCPartition&)>;

// Default D-type color filter: in each block the signed white count equals
// the signed black count, a leg counting +1 on top and -1 on the bottom.
bool balanced_colors(const ColoredNCPartition& p);

// All noncrossing (partition, coloring) pairs of k upper and l lower points
// passing the predicate; deterministic order (restricted-growth strings,
// then binary colorings).  k + l <= max_points.
std::vector<ColoredNCPartition> enumerate_partitions(int k, int l, const ColorPredicate& predicate,
                                                     int max_points = 8);

// Number of uncrossed set partitions of n points (no colors).
long count_noncrossing(int n);

// Only pair partitions (all blocks of size two).
bool is_pair_partition(const ColoredNCPartition& p);

// The linear map T_pi on labels J_n: matrix of size (2n)^l x (2n)^k.
// delta rule inside each block: legs of equal color carry equal labels; legs
// of opposite color carry bar-related labels.
Eigen::MatrixXcd t_pi(const ColoredNCPartition& p, int n);

// k = l = 2, one block, colored so that t_pi equals the explicit two-leg
// flip operator delta_{z,xbar} e_zbar (x) e_z.
ColoredNCPartition lemma52_partition();

struct SpanCheckEntry {
  ColoredNCPartition partition;
  bool intertwiner = false;
  double violation = 0.0;
};

struct SpanCheckReport {
  std::vector<SpanCheckEntry> entries;
  int span_rank = 0;          // numerical rank of {vec(T_pi)}
  int solution_dim = -1;      // dim of the intertwiner equation solution space; -1 when skipped
  bool all_intertwiners() const;
};

// Runs intertwiner_check for each T_pi against U and, when the linear system
// is small enough, the dimension of the full solution space of
// (X (x) 1) U^k = U^l (X (x) 1).
SpanCheckReport span_containment_check(const std::vector<ColoredNCPartition>& partitions,
                                       const OperatorMatrix& u, int k, int l,
                                       size_t max_system_entries = 1u << 24);

}  // namespace qsg
