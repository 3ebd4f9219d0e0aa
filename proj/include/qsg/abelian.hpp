#pragma once

#include <memory>

#include "qsg/filtration.hpp"
#include "qsg/perm_group.hpp"

namespace qsg {

// Z_{r_1} x ... x Z_{r_d} with a symmetric generating set and the word-length
// function computed by breadth-first search over the Cayley graph.
class FiniteAbelianGroup {
 public:
  // Default generating set: +-(standard basis vectors).
  explicit FiniteAbelianGroup(std::vector<int> factors);
  FiniteAbelianGroup(std::vector<int> factors, std::vector<std::vector<int>> generators);

  int size() const { return size_; }
  const std::vector<int>& factors() const { return factors_; }
  int char_order() const { return char_order_; }  // lcm of the factor orders

  std::vector<int> element(int index) const;      // tuple of an index
  int index(const std::vector<int>& tuple) const;
  int add(int a, int b) const;
  int negate(int a) const;
  int length(int a) const { return length_[a]; }

  // chi_s(t) = prod_i zeta_{r_i}^{s_i t_i}, a single root of unity.
  Cyclo character(int s, int t) const;

 private:
  void build_lengths(const std::vector<std::vector<int>>& generators);

  std::vector<int> factors_;
  int size_ = 1;
  int char_order_ = 1;
  std::vector<int> length_;
};

// F_m = {g : l(g) = m}, m = 0..max length.
std::vector<std::vector<int>> length_partition(const FiniteAbelianGroup& g);

// Fourier matrix F[chi][gamma] = (1/M) chi(gamma).
ExactMat fourier_matrix(const FiniteAbelianGroup& g);

// Q_m[s][t] = sum_{gamma : l(gamma) = m} conj(chi_s(gamma)) chi_t(gamma),
// one matrix per length value.  Internal consistency with the Fourier
// conjugate of the diagonal length projections is always verified:
// Q_m = M * F P_m F^{-1} for the symmetric generating set.
std::vector<ColoredMatrix> qm_matrices(const FiniteAbelianGroup& g);

struct HypercubeReport {
  int k = 0;
  // Partition labels of the index pairs (s,t): joint color class of the Q_m
  // family, and the Cayley distance l(s-t).
  std::vector<std::vector<int>> q_class;
  std::vector<std::vector<int>> distance;
  bool partitions_coincide = false;
  int num_classes = 0;
};

// The common color refinement of {Q_m} against the Cayley distance classes
// {R_m}.  The coincidence of the two partitions is the matrix-level content
// of the dual-of-Z_2^k reduction; for general factors this is reported as an
// experiment, nothing is asserted.
HypercubeReport qm_distance_comparison(const FiniteAbelianGroup& g);

// Joint coloring of the Q_m family as one colored matrix (entry = class id).
ColoredMatrix joint_coloring(const FiniteAbelianGroup& g);

// C[G] with the canonical trace, parts spanned by {lambda_g : l(g) = m}.
// The StructuredAlgebra is owned by the result.
struct DualFiltration {
  std::shared_ptr<StructuredAlgebra> algebra;
  OrthogonalFiltration filtration;
};
DualFiltration dual_filtration(const FiniteAbelianGroup& g);

}  // namespace qsg
