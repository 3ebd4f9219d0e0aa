#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsg/cyclotomic.hpp"

namespace qsg {

// One irreducible representation: integer dimension and a character value per
// group element (expanded from the conjugacy classes).
struct IrrepCharacter {
  std::string label;
  int dim = 1;
  std::vector<Cyclo> values;  // indexed by element
};

struct FiniteGroupData {
  int order = 0;
  std::vector<std::string> names;
  std::vector<std::vector<int>> mult;  // mult[a][b] = index of a*b
  std::vector<int> inverse;
  int identity = 0;
  std::optional<std::vector<IrrepCharacter>> characters;

  int op(int a, int b) const { return mult[a][b]; }
  // Group axioms on the table; throws std::invalid_argument on violation.
  void validate() const;
  // Character rows orthonormal under (1/|G|) sum_g conj(chi(g)) chi'(g).
  void validate_characters() const;
};

FiniteGroupData cyclic_group(int n);
FiniteGroupData direct_product(const FiniteGroupData& a, const FiniteGroupData& b);
FiniteGroupData elementary_abelian2(int k);
// S3 with the even permutations listed first: e, (123), (132), (12), (13), (23).
FiniteGroupData symmetric3();
// D4 of order 8: r^4 = s^2 = e, s r s = r^-1; elements e,r,r2,r3,s,rs,r2s,r3s.
FiniteGroupData dihedral4();

}  // namespace qsg
