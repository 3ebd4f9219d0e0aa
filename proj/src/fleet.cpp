#include <cmath>
#include <random>

#include "qsg/operator_matrix.hpp"

namespace qsg {

OperatorMatrix translation_magic_unitary(const FiniteGroupData& g) {
  OperatorMatrix u = OperatorMatrix::zero(g.order, g.order, false, 1e-9);
  for (int i = 0; i < g.order; ++i)
    for (int j = 0; j < g.order; ++j) {
      // alpha(e_j) = sum_i e_i (x) 1_{h : h pi_j = pi_i}; the indicator is a
      // diagonal projection supported at h = pi_i pi_j^-1.
      const int h = g.mult[i][g.inverse[j]];
      u.at(i, j)(h, h) = 1.0;
    }
  return u;
}

OperatorMatrix dinfty_unitary(double theta) {
  OperatorMatrix u = OperatorMatrix::zero(6, 2, false, 1e-9);
  OpEntry p(2, 2), q(2, 2);
  p << 1, 0, 0, 0;
  const double c = std::cos(theta), s = std::sin(theta);
  q << c * c, c * s, c * s, s * s;
  const OpEntry id = OpEntry::Identity(2, 2);
  const OpEntry pperp = id - p, qperp = id - q;
  u.at(0, 0) = p;
  u.at(0, 1) = pperp;
  u.at(1, 0) = pperp;
  u.at(1, 1) = p;
  u.at(2, 2) = id;
  u.at(3, 3) = q;
  u.at(3, 4) = qperp;
  u.at(4, 3) = qperp;
  u.at(4, 4) = q;
  u.at(5, 5) = id;
  return u;
}

namespace {

using Rng = std::mt19937_64;

OpEntry random_unitary(int m, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  OpEntry a(m, m);
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) a(r, c) = std::complex<double>(gauss(rng), gauss(rng));
  const Eigen::HouseholderQR<OpEntry> qr(a);
  OpEntry q = qr.householderQ();
  // fix the phases so the factorization is unambiguous
  const OpEntry r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < m; ++i) {
    const auto d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

OpEntry random_projection(int m, int rank, Rng& rng) {
  const OpEntry w = random_unitary(m, rng);
  OpEntry p = OpEntry::Zero(m, m);
  for (int i = 0; i < rank; ++i) p += w.col(i) * w.col(i).adjoint();
  return p;
}

OpEntry random_order4_unitary(int m, Rng& rng) {
  const OpEntry w = random_unitary(m, rng);
  Eigen::VectorXcd eig(m);
  std::uniform_int_distribution<int> quarter(0, 3);
  bool nontrivial = false;
  for (int i = 0; i < m; ++i) {
    const int e = quarter(rng);
    nontrivial = nontrivial || e != 0;
    eig(i) = std::polar(1.0, M_PI_2 * e);
  }
  if (!nontrivial) eig(0) = std::complex<double>(0, 1);
  return w * eig.asDiagonal() * w.adjoint();
}

OperatorMatrix signed_permutation_instance(int n, Rng& rng) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  OperatorMatrix u = OperatorMatrix::zero(2 * n, 1, true, 1e-9);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int kappa = 1; kappa <= n; ++kappa) {
    const int eps = coin(rng) ? +1 : -1;
    for (int j : {+1, -1})
      u.at(OperatorMatrix::label_index(j * eps, sigma[kappa - 1]), OperatorMatrix::label_index(j, kappa))(0, 0) =
          1.0;
  }
  return u;
}

OperatorMatrix dual_z_instance(int m, Rng& rng) {
  OperatorMatrix u = OperatorMatrix::zero(2, m, true, 1e-9);
  const OpEntry w = random_unitary(m, rng);
  u.at(0, 0) = w;
  u.at(1, 1) = w.adjoint();
  return u;
}

// gamma_1 -> gamma_{tau(1)} (x) u, gamma_2 -> gamma_{tau(2)} (x) v with u, v
// order-4 unitaries (a representation of Z4 * Z4 drives the two legs).
OperatorMatrix cyclic4_instance(int m, Rng& rng) {
  OperatorMatrix u = OperatorMatrix::zero(4, m, true, 1e-9);
  const OpEntry a = random_order4_unitary(m, rng);
  const OpEntry b = random_order4_unitary(m, rng);
  std::uniform_int_distribution<int> coin(0, 1);
  const bool swap = coin(rng);
  const int t1 = swap ? 2 : 1, t2 = swap ? 1 : 2;
  u.at(OperatorMatrix::label_index(+1, t1), OperatorMatrix::label_index(+1, 1)) = a;
  u.at(OperatorMatrix::label_index(-1, t1), OperatorMatrix::label_index(-1, 1)) = a.adjoint();
  u.at(OperatorMatrix::label_index(+1, t2), OperatorMatrix::label_index(+1, 2)) = b;
  u.at(OperatorMatrix::label_index(-1, t2), OperatorMatrix::label_index(-1, 2)) = b.adjoint();
  return u;
}

// U_{i sigma, j kappa} = delta_{sigma, tau(kappa)} B^(kappa)_{ij} with
// B = [[p, 1-p], [1-p, p]] built from noncommuting projections, the block
// pattern of a projection-valued wreath element over a Z2 * Z2 representation.
OperatorMatrix wreath_projection_instance(int m, Rng& rng) {
  OperatorMatrix u = OperatorMatrix::zero(4, m, true, 1e-9);
  std::uniform_int_distribution<int> coin(0, 1);
  const bool swap = coin(rng);
  for (int kappa = 1; kappa <= 2; ++kappa) {
    const OpEntry p = random_projection(m, 1, rng);
    const OpEntry pperp = OpEntry::Identity(m, m) - p;
    const int tau = swap ? 3 - kappa : kappa;
    u.at(OperatorMatrix::label_index(+1, tau), OperatorMatrix::label_index(+1, kappa)) = p;
    u.at(OperatorMatrix::label_index(-1, tau), OperatorMatrix::label_index(+1, kappa)) = pperp;
    u.at(OperatorMatrix::label_index(+1, tau), OperatorMatrix::label_index(-1, kappa)) = pperp;
    u.at(OperatorMatrix::label_index(-1, tau), OperatorMatrix::label_index(-1, kappa)) = p;
  }
  return u;
}

// The [[a, b], [b, a]] pattern with a = W1 P W2*, b = W1 (1-P) W2*: a unitary
// of partial isometries that is bar-symmetric but entrywise non-normal.
OperatorMatrix non_normal_instance(int m, Rng& rng) {
  std::uniform_int_distribution<int> rank_dist(1, m - 1);
  OpEntry a, b;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const OpEntry w1 = random_unitary(m, rng), w2 = random_unitary(m, rng);
    OpEntry p = OpEntry::Zero(m, m);
    const int rank = rank_dist(rng);
    for (int i = 0; i < rank; ++i) p(i, i) = 1.0;
    a = w1 * p * w2.adjoint();
    b = w1 * (OpEntry::Identity(m, m) - p) * w2.adjoint();
    if ((a * a.adjoint() - a.adjoint() * a).norm() > 0.1) break;
  }
  OperatorMatrix u = OperatorMatrix::zero(4, m, true, 1e-9);
  const int p1 = OperatorMatrix::label_index(+1, 1), m1 = OperatorMatrix::label_index(-1, 1);
  const int p2 = OperatorMatrix::label_index(+1, 2), m2 = OperatorMatrix::label_index(-1, 2);
  u.at(p1, p1) = a;
  u.at(p1, p2) = b;
  u.at(p2, p1) = b;
  u.at(p2, p2) = a;
  u.at(m1, m1) = a.adjoint();
  u.at(m1, m2) = b.adjoint();
  u.at(m2, m1) = b.adjoint();
  u.at(m2, m2) = a.adjoint();
  return u;
}

}  // namespace

std::vector<FleetInstance> make_fleet(std::uint64_t seed, int count_per_family) {
  Rng rng(seed);
  std::vector<FleetInstance> fleet;
  auto push = [&](std::string family, int index, OperatorMatrix u, bool kplus) {
    fleet.push_back({family + "#" + std::to_string(index), std::move(family), std::move(u), kplus});
  };
  for (int i = 0; i < count_per_family; ++i)
    push("signed_perm", i, signed_permutation_instance(1 + i % 3, rng), true);
  for (int i = 0; i < count_per_family; ++i) push("dual_z", i, dual_z_instance(2 + i % 2, rng), true);
  for (int i = 0; i < count_per_family; ++i) push("cyclic4", i, cyclic4_instance(2 + i % 2, rng), true);
  for (int i = 0; i < count_per_family; ++i)
    push("wreath_proj", i, wreath_projection_instance(2, rng), true);
  for (int i = 0; i < count_per_family; ++i)
    push("non_normal", i, non_normal_instance(2 + i % 3, rng), false);
  return fleet;
}

}  // namespace qsg
