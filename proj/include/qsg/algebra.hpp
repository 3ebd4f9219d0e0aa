#pragma once

#include <string>
#include <variant>
#include <vector>

#include "qsg/exact_matrix.hpp"
#include "qsg/group_data.hpp"

namespace qsg {

// Finite-dimensional *-algebra presented by structure constants on an
// explicit basis, carrying a unit and a faithful state omega.
//   e_i e_j   = sum_k mult[i][j][k] e_k
//   e_i^*     = sum_k involution(i,k) e_k
//   omega(e_i)= state[i]
struct StructuredAlgebra {
  int dim = 0;
  std::vector<std::string> basis_labels;
  std::vector<std::vector<CVec>> mult;  // dim x dim x dim
  ExactMat involution;                  // dim x dim, row i = coords of e_i^*
  CVec unit;
  CVec state;

  CVec multiply(const CVec& a, const CVec& b) const;
  CVec star(const CVec& a) const;
  Cyclo omega(const CVec& a) const;
  // omega(a^* b)
  Cyclo omega_pair(const CVec& a, const CVec& b) const;
  // G[i][j] = omega(e_i^* e_j)
  ExactMat gram() const;
  // Matrix of left multiplication by a in the canonical basis.
  ExactMat left_multiplication(const CVec& a) const;
  // omega(ab) = omega(ba) on all basis pairs.
  bool is_tracial() const;

  // Checks associativity, the involution axioms, omega(1) = 1 and positive
  // definiteness of the Gram matrix (smallest eigenvalue of the float
  // embedding > 1e-9).  Throws std::invalid_argument with a description.
  void validate() const;
};

StructuredAlgebra pointwise_algebra(const std::vector<Rational>& state_weights);
StructuredAlgebra group_algebra(const FiniteGroupData& g);  // canonical trace
StructuredAlgebra matrix_algebra(int k, const std::vector<Rational>& state_diag);
StructuredAlgebra direct_sum(const StructuredAlgebra& a, const StructuredAlgebra& b,
                             const Rational& weight_a, const Rational& weight_b);

// Result of Gram-Schmidt with respect to omega.  Exact whenever every norm
// arising is the square of a rational; otherwise the basis is returned in the
// double embedding with exact_mode = false.
struct OrthonormalBasis {
  bool exact_mode = true;
  std::vector<CVec> exact;
  std::vector<std::vector<std::complex<double>>> numeric;
  size_t size() const { return exact_mode ? exact.size() : numeric.size(); }
};

// Gram-Schmidt in list order; throws std::domain_error on dependent input.
OrthonormalBasis gram_orthonormalize(const StructuredAlgebra& alg, const std::vector<CVec>& vectors);

struct SpectralSubspace {
  std::string label;
  int irrep_dim = 1;
  std::vector<CVec> basis;  // coordinates in the delta basis of C(G)
};

// Isotypic subspaces of C(G) under left translation; requires a character
// table.  The subspace for irrep u is the image of
//   P_u[g'][g] = (dim_u / |G|) conj(chi_u(g' g^-1)).
std::vector<SpectralSubspace> regular_spectral_decomposition(const FiniteGroupData& g);

struct SupportCheck {
  bool is_subgroup = true;
  std::string reason;          // empty when is_subgroup
  std::pair<int, int> offending{-1, -1};  // product violation, else (-1,-1)
};

// Is {g : dims[g] > 0} a subgroup?
SupportCheck support_subgroup_check(const FiniteGroupData& g, const std::vector<int>& dims);

}  // namespace qsg
