#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsg/algebra.hpp"

namespace qsg {

// Square matrix whose distinct exact entry values play the role of colors.
struct ColoredMatrix {
  ExactMat entries;               // all entries promoted to a common order
  std::vector<Cyclo> palette;     // sorted distinct values
  std::vector<std::vector<std::vector<int>>> masks;  // one 0/1 matrix per palette value

  static ColoredMatrix from(const ExactMat& m);
  int size() const { return entries.rows(); }
  int color_index(int r, int c) const;
};

// color -> 0/1 indicator of the positions carrying it.
std::vector<std::pair<Cyclo, std::vector<std::vector<int>>>> color_components(const ColoredMatrix& m);

struct OrthogonalFiltration {
  const StructuredAlgebra* algebra = nullptr;
  std::vector<std::vector<CVec>> parts;  // parts[0] is the distinguished part
  std::vector<std::string> labels;
};

struct ValidationIssue {
  std::string what;
  int part_a = -1, part_b = -1;
};

struct ValidationReport {
  bool valid = true;
  std::vector<ValidationIssue> issues;
};

// Checks: part 0 spans exactly C*1; distinct parts are omega-orthogonal on
// all basis pairs; the parts jointly span the algebra and the span is closed
// under the involution.
ValidationReport validate(const OrthogonalFiltration& f);

// Matrices, in the canonical coordinate basis, of the omega-orthogonal
// projections onto the parts.  Exact; P_i^2 = P_i, sum P_i = I and
// G P_i = P_i^dagger G for the Gram matrix G.
std::vector<ExactMat> projections(const OrthogonalFiltration& f);

// Q = sum_i weights[i] P_i; weights must be pairwise distinct.
ColoredMatrix q_matrix(const OrthogonalFiltration& f, const std::vector<Rational>& weights);
std::vector<Rational> default_weights(size_t parts);

// Join of two filtrations of the same algebra: parts are the nonzero
// intersections V_i cap W_j.  Requires every V_i to decompose into its
// intersections with the W_j (and vice versa); throws std::domain_error
// otherwise.
OrthogonalFiltration join(const OrthogonalFiltration& f, const OrthogonalFiltration& g);

// Van Daele-Wang parameter matrix of part i: with (e_l) an omega-orthonormal
// basis of V_i and (f_m) one of V_i^* (Gram-Schmidt of the starred e-basis in
// order), S is defined by e_l^* = sum_m S_lm f_m and Q_i = conj(S) S^T.
struct VdwResult {
  bool exact_mode = true;
  ExactMat exact;                                       // when exact_mode
  std::vector<std::vector<std::complex<double>>> numeric;  // otherwise
};
VdwResult vdw_parameter(const OrthogonalFiltration& f, size_t part);

struct DiracEntry {
  std::string basis_label;
  ExactMat commutator;  // [D, pi(e_a)] = D pi(e_a) - pi(e_a) D
  double norm = 0.0;    // spectral norm of the float embedding
};

struct DiracResult {
  ExactMat dirac;  // D = sum levels[i] P_i
  std::vector<DiracEntry> commutators;
};

DiracResult dirac_operator(const OrthogonalFiltration& f, const std::vector<int>& levels);

struct SpectralTripleTypeResult {
  bool holds = true;
  // First violating triple: parts (k, l) and the part index whose component
  // of the product is nonzero although its level exceeds level(l) + M.
  int part_k = -1, part_l = -1, violating_part = -1;
  bool starred = false;  // violation came from V_k^* V_l
};

// Def-style check with explicit integer levels: for all parts (k, l), both
// V_k V_l and V_k^* V_l lie in the span of the parts with level <= level(l)+M.
SpectralTripleTypeResult spectral_triple_type_check(const OrthogonalFiltration& f, int m_bound,
                                                    const std::vector<int>& levels);

}  // namespace qsg
