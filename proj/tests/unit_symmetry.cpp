#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <numeric>
#include <random>

#include "qsg/perm_group.hpp"

using namespace qsg;

namespace {

ColoredMatrix hypercube_distance_matrix(int k) {
  const int n = 1 << k;
  ExactMat m(n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) m.at(s, t) = Cyclo(Rational(std::popcount(static_cast<unsigned>(s ^ t))));
  return ColoredMatrix::from(m);
}

ColoredMatrix diag_matrix(const std::vector<long>& d) {
  ExactMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = Cyclo(Rational(d[i]));
  return ColoredMatrix::from(m);
}

}  // namespace

TEST_CASE("is_color_automorphism basics") {
  const auto d12 = diag_matrix({1, 2});
  CHECK(is_color_automorphism(d12, {0, 1}));
  CHECK_FALSE(is_color_automorphism(d12, {1, 0}));

  // antipodal map on the k=3 hypercube coloring
  const auto h3 = hypercube_distance_matrix(3);
  Perm antipodal(8);
  for (int v = 0; v < 8; ++v) antipodal[v] = v ^ 7;
  CHECK(is_color_automorphism(h3, antipodal));
  CHECK_THROWS_AS(is_color_automorphism(h3, Perm{0, 1}), std::invalid_argument);
}

TEST_CASE("trivial and full symmetric groups") {
  CHECK(color_automorphisms(diag_matrix({1, 2, 3})).order == 1);

  ExactMat ones(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) ones.at(i, j) = Cyclo(Rational(5));
  CHECK(color_automorphisms(ColoredMatrix::from(ones)).order == 24);
}

TEST_CASE("hypercube color matrix automorphisms, cross-checked by brute force") {
  const auto h3 = hypercube_distance_matrix(3);
  const auto g = color_automorphisms(h3);
  CHECK(g.order == 48);  // Z2 wr S3 = 2^3 * 3!
  const auto all = brute_force_automorphisms(h3);
  CHECK(all.size() == 48);
  for (const auto& gen : g.generators) CHECK(is_color_automorphism(h3, gen));
}

TEST_CASE("backtracking equals brute force on small random colorings") {
  std::mt19937_64 rng(0x5EED);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);  // 3..6
    ExactMat m(n, n);
    std::uniform_int_distribution<long> colors(0, 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m.at(i, j) = Cyclo(Rational(colors(rng)));
    const auto cm = ColoredMatrix::from(m);
    const auto g = color_automorphisms(cm);
    const auto all = brute_force_automorphisms(cm);
    CHECK(g.order == all.size());
    for (const auto& gen : g.generators) CHECK(is_color_automorphism(cm, gen));
  }
}

TEST_CASE("order is conjugation-invariant") {
  const auto h3 = hypercube_distance_matrix(3);
  std::mt19937_64 rng(99);
  Perm tau(8);
  std::iota(tau.begin(), tau.end(), 0);
  std::shuffle(tau.begin(), tau.end(), rng);
  ExactMat conj(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) conj.at(tau[i], tau[j]) = h3.entries.at(i, j);
  CHECK(color_automorphisms(ColoredMatrix::from(conj)).order == 48);
}
