#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsg/filtration.hpp"
#include "qsg/words.hpp"

namespace qsg {

using OpEntry = Eigen::MatrixXcd;

// d x d matrix whose entries are m x m complex matrices.  When
// signed_labels is set, d = 2n and the outer index encodes the label
// i kappa with i in {+1,-1}: index = 2*(kappa-1) + (i == +1 ? 0 : 1);
// the bar involution flips the low bit.
struct OperatorMatrix {
  int dim = 0;
  int op_dim = 1;
  bool signed_labels = false;
  double tol = 1e-9;
  std::vector<OpEntry> entries;  // row-major, dim * dim

  static OperatorMatrix zero(int dim, int op_dim, bool signed_labels, double tol = 1e-9);
  static OperatorMatrix identity(int dim, int op_dim, bool signed_labels, double tol = 1e-9);

  OpEntry& at(int r, int c) { return entries[static_cast<size_t>(r) * dim + c]; }
  const OpEntry& at(int r, int c) const { return entries[static_cast<size_t>(r) * dim + c]; }

  int pairs() const;  // n with d = 2n; throws unless signed_labels
  int bar(int idx) const { return idx ^ 1; }
  static int label_index(int sign, int kappa) { return 2 * (kappa - 1) + (sign > 0 ? 0 : 1); }
  std::string label_name(int idx) const;

  Eigen::MatrixXcd flattened() const;  // (d m) x (d m)
};

struct Flag {
  std::string name;
  bool ok = true;
  double violation = 0.0;
};

struct RelationReport {
  std::vector<Flag> flags;
  bool all_ok() const;
  double max_violation() const;
  const Flag& get(const std::string& name) const;
  void add(const std::string& name, double violation, double tol);
};

// Largest singular value.
double spectral_norm(const Eigen::MatrixXcd& m);

RelationReport is_block_unitary(const OperatorMatrix& u);
// Entries are orthogonal projections; rows and columns sum to the identity.
RelationReport is_magic_unitary(const OperatorMatrix& u);
// Partial-isometry entries, bar-symmetry U_{x,y} = U*_{xbar,ybar}, unitarity.
RelationReport check_hplus_relations(const OperatorMatrix& u);
// Bar-symmetry; normal partial-isometry entries; (U_{x,y} U*_{x,y}) magic;
// plus the derived block2 flag U_{j sigma, x} U_{l kappa, x} = 0, sigma != kappa.
RelationReport check_kplus_relations(const OperatorMatrix& u);

// T(e_z otimes e_x) = delta_{z, xbar} e_{zbar} otimes e_z on C^d otimes C^d.
Eigen::MatrixXcd lemma52_intertwiner(int d);

struct IntertwinerResult {
  bool ok = true;
  double violation = 0.0;   // spectral norm of the residual (or a tight upper bound)
  double frobenius = 0.0;
};

// || (T otimes 1) U^{tensor k} - U^{tensor l} (T otimes 1) ||.  T is scalar,
// d^l x d^k.  Computed blockwise; tensor powers are never materialized.
IntertwinerResult intertwiner_check(const Eigen::MatrixXcd& t, const OperatorMatrix& u, int k, int l);

struct Lemma52Report {
  RelationReport hplus;  // precondition
  Flag intertwiner;      // (i)
  Flag normal_entries;   // (ii)
  Flag block2;           // (iii)
  bool agree = false;    // the three booleans coincide
};

Lemma52Report lemma52_suite(const OperatorMatrix& u);

// Entrywise k-fold representation tensor power; outer dimension d^k.
OperatorMatrix tensor_power(const OperatorMatrix& u, int k, size_t max_outer = 4096);
// W_{x,y} = sum_z U_{x,z} otimes V_{z,y} (coproduct composite).
OperatorMatrix tensor_composite(const OperatorMatrix& u, const OperatorMatrix& v);
// W_{x,y} = U*_{y,x}.
OperatorMatrix antipode_transform(const OperatorMatrix& u);
// delta_{x,y} 1 as a scalar matrix.
OperatorMatrix counit_transform(const OperatorMatrix& u);

// Coefficients f_w(alpha(v)) of the induced action on the group algebra of
// F_n, truncated to the given ball.  Throws std::domain_error when mass
// above tol would land outside the ball.
std::map<FreeProductWord, OpEntry> induced_action_coefficients(const OperatorMatrix& u,
                                                               const FreeProductWord& word,
                                                               const Factors& factors,
                                                               const std::vector<FreeProductWord>& ball);

// alpha(e_j) = sum_i e_i otimes U_{ij} against an orthogonal filtration of a
// d-dimensional algebra: cross-part components of every alpha(v) vanish and
// (omega otimes id) alpha(v) = omega(v) 1.
RelationReport filtration_preservation_check(const OperatorMatrix& u, const OrthogonalFiltration& f);

// --- shipped instances ---------------------------------------------------

// Left-translation magic unitary of a finite group on C(G); op_dim = |G|.
OperatorMatrix translation_magic_unitary(const FiniteGroupData& g);
// The 6x6 two-projection magic unitary (free dihedral pattern) with
// p = diag(1,0) and q the projection onto (cos theta, sin theta).
OperatorMatrix dinfty_unitary(double theta);

struct FleetInstance {
  std::string name;
  std::string family;
  OperatorMatrix u;
  bool expect_kplus = true;  // false for the non-normal instances
};

// Deterministic seeded instance fleet: scalar signed permutations, dual-Z
// diagonal families, group-algebra constructions (projection wreath patterns
// from Z2*Z2 representations, order-4 unitary patterns from Z4*Z4) and
// non-normal partial-isometry instances.
std::vector<FleetInstance> make_fleet(std::uint64_t seed, int count_per_family = 26);

}  // namespace qsg
