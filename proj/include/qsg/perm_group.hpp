#pragma once

#include <vector>

#include "qsg/filtration.hpp"

namespace qsg {

using Perm = std::vector<int>;

struct PermGroup {
  int degree = 0;
  std::vector<Perm> generators;
  BigInt order = 1;
};

bool is_color_automorphism(const ColoredMatrix& m, const Perm& sigma);

// Group of permutations sigma with m[sigma(i)][sigma(j)] = m[i][j],
// equivalently P_sigma m = m P_sigma.  Backtracking with iterated color-degree
// partition refinement; the order is exact (product of the orbit sizes along
// the point stabilizer chain).  Deterministic for a fixed input.
PermGroup color_automorphisms(const ColoredMatrix& m);

// All automorphisms by brute force; degree <= 8.
std::vector<Perm> brute_force_automorphisms(const ColoredMatrix& m);

}  // namespace qsg
