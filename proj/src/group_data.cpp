#include "qsg/group_data.hpp"

#include <stdexcept>

namespace qsg {

void FiniteGroupData::validate() const {
  const int n = order;
  if (static_cast<int>(names.size()) != n || static_cast<int>(mult.size()) != n ||
      static_cast<int>(inverse.size()) != n)
    throw std::invalid_argument("group table sizes do not match the order");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mult[a].size()) != n) throw std::invalid_argument("ragged multiplication table");
    if (mult[identity][a] != a || mult[a][identity] != a) throw std::invalid_argument("identity axiom fails");
    if (mult[a][inverse[a]] != identity || mult[inverse[a]][a] != identity)
      throw std::invalid_argument("inverse axiom fails");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) throw std::invalid_argument("associativity fails");
}

void FiniteGroupData::validate_characters() const {
  if (!characters) throw std::invalid_argument("no character table");
  const auto& chars = *characters;
  for (size_t u = 0; u < chars.size(); ++u) {
    if (static_cast<int>(chars[u].values.size()) != order)
      throw std::invalid_argument("character row length mismatch");
    for (size_t v = 0; v < chars.size(); ++v) {
      Cyclo ip;
      for (int g = 0; g < order; ++g) ip += chars[u].values[g].conjugate() * chars[v].values[g];
      const Cyclo expect = (u == v) ? Cyclo(Rational(order)) : Cyclo();
      if (ip != expect) throw std::invalid_argument("character rows are not orthonormal");
    }
  }
}

FiniteGroupData cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be >= 1");
  FiniteGroupData g;
  g.order = n;
  g.identity = 0;
  g.names.resize(n);
  g.mult.assign(n, std::vector<int>(n));
  g.inverse.resize(n);
  for (int a = 0; a < n; ++a) {
    g.names[a] = "g" + std::to_string(a);
    g.inverse[a] = (n - a) % n;
    for (int b = 0; b < n; ++b) g.mult[a][b] = (a + b) % n;
  }
  std::vector<IrrepCharacter> chars(n);
  for (int j = 0; j < n; ++j) {
    chars[j].label = "chi" + std::to_string(j);
    chars[j].dim = 1;
    chars[j].values.resize(n);
    for (int a = 0; a < n; ++a) chars[j].values[a] = Cyclo::root_of_unity(n, static_cast<long>(j) * a);
  }
  g.characters = std::move(chars);
  return g;
}

FiniteGroupData direct_product(const FiniteGroupData& a, const FiniteGroupData& b) {
  FiniteGroupData g;
  g.order = a.order * b.order;
  g.identity = a.identity * b.order + b.identity;
  g.names.resize(g.order);
  g.mult.assign(g.order, std::vector<int>(g.order));
  g.inverse.resize(g.order);
  auto idx = [&](int x, int y) { return x * b.order + y; };
  for (int x = 0; x < a.order; ++x)
    for (int y = 0; y < b.order; ++y) {
      const int i = idx(x, y);
      g.names[i] = "(" + a.names[x] + "," + b.names[y] + ")";
      g.inverse[i] = idx(a.inverse[x], b.inverse[y]);
      for (int u = 0; u < a.order; ++u)
        for (int v = 0; v < b.order; ++v) g.mult[i][idx(u, v)] = idx(a.mult[x][u], b.mult[y][v]);
    }
  if (a.characters && b.characters) {
    std::vector<IrrepCharacter> chars;
    for (const auto& cu : *a.characters)
      for (const auto& cv : *b.characters) {
        IrrepCharacter c;
        c.label = cu.label + "x" + cv.label;
        c.dim = cu.dim * cv.dim;
        c.values.resize(g.order);
        for (int x = 0; x < a.order; ++x)
          for (int y = 0; y < b.order; ++y) c.values[idx(x, y)] = cu.values[x] * cv.values[y];
        chars.push_back(std::move(c));
      }
    g.characters = std::move(chars);
  }
  return g;
}

FiniteGroupData elementary_abelian2(int k) {
  if (k < 1) throw std::invalid_argument("rank must be >= 1");
  FiniteGroupData g = cyclic_group(2);
  for (int i = 1; i < k; ++i) g = direct_product(g, cyclic_group(2));
  return g;
}

FiniteGroupData symmetric3() {
  // Permutations of {0,1,2} listed with the even ones first.
  const int perms[6][3] = {
      {0, 1, 2},  // e
      {1, 2, 0},  // (123): 0->1,1->2,2->0
      {2, 0, 1},  // (132)
      {1, 0, 2},  // (12)
      {2, 1, 0},  // (13)
      {0, 2, 1},  // (23)
  };
  const char* names[6] = {"e", "(123)", "(132)", "(12)", "(13)", "(23)"};
  FiniteGroupData g;
  g.order = 6;
  g.identity = 0;
  g.names.assign(names, names + 6);
  g.mult.assign(6, std::vector<int>(6));
  g.inverse.resize(6);
  auto find = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2]) return i;
    throw std::logic_error("permutation lookup failed");
  };
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      int comp[3];  // (a*b)(x) = a(b(x))
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      g.mult[a][b] = find(comp);
    }
    int inv[3];
    for (int x = 0; x < 3; ++x) inv[perms[a][x]] = x;
    g.inverse[a] = find(inv);
  }
  std::vector<IrrepCharacter> chars(3);
  chars[0] = {"trivial", 1, std::vector<Cyclo>(6, Cyclo(Rational(1)))};
  chars[1].label = "sign";
  chars[1].dim = 1;
  chars[1].values.resize(6);
  for (int a = 0; a < 6; ++a) chars[1].values[a] = Cyclo(Rational(a < 3 ? 1 : -1));
  chars[2].label = "standard";
  chars[2].dim = 2;
  chars[2].values.resize(6);
  for (int a = 0; a < 6; ++a) {
    int value = (a == 0) ? 2 : (a < 3 ? -1 : 0);
    chars[2].values[a] = Cyclo(Rational(value));
  }
  g.characters = std::move(chars);
  return g;
}

FiniteGroupData dihedral4() {
  // Elements are r^i s^j with i mod 4, j mod 2, listed as
  // e, r, r2, r3, s, rs, r2s, r3s.  The relation is s r = r^-1 s.
  auto idx = [](int i, int j) { return (j % 2) * 4 + ((i % 4) + 4) % 4; };
  const char* names[8] = {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
  FiniteGroupData g;
  g.order = 8;
  g.identity = 0;
  g.names.assign(names, names + 8);
  g.mult.assign(8, std::vector<int>(8));
  g.inverse.resize(8);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) {
      const int a = idx(i, j);
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 2; ++l) {
          // (r^i s^j)(r^k s^l) = r^{i + (-1)^j k} s^{j+l}
          const int e = j ? (i - k) : (i + k);
          g.mult[a][idx(k, l)] = idx(e, j + l);
        }
      g.inverse[a] = j ? a : idx(-i, 0);
    }
  // Classes: {e}, {r2}, {r, r3}, {s, r2s}, {rs, r3s}.
  auto chi = [&](int on_r, int on_s) {
    std::vector<Cyclo> v(8);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 2; ++j) {
        int value = 1;
        if (on_r == -1 && (i % 2)) value = -value;
        if (on_s == -1 && j) value = -value;
        v[idx(i, j)] = Cyclo(Rational(value));
      }
    return v;
  };
  std::vector<IrrepCharacter> chars(5);
  chars[0] = {"trivial", 1, chi(1, 1)};
  chars[1] = {"sign_r", 1, chi(-1, 1)};
  chars[2] = {"sign_s", 1, chi(1, -1)};
  chars[3] = {"sign_rs", 1, chi(-1, -1)};
  chars[4].label = "two_dim";
  chars[4].dim = 2;
  chars[4].values.assign(8, Cyclo());
  chars[4].values[idx(0, 0)] = Cyclo(Rational(2));
  chars[4].values[idx(2, 0)] = Cyclo(Rational(-2));
  g.characters = std::move(chars);
  return g;
}

}  // namespace qsg
