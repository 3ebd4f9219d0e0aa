#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "qsg/partitions.hpp"

using namespace qsg;

namespace {

// Brute-force crossing test on all point quadruples in circular order, used
// as the oracle for is_noncrossing.
bool crossing_oracle(const std::vector<int>& block_at_circ) {
  const int n = static_cast<int>(block_at_circ.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (block_at_circ[a] == block_at_circ[c] && block_at_circ[b] == block_at_circ[d] &&
              block_at_circ[a] != block_at_circ[b])
            return true;
  return false;
}

// Vertical composition rho . pi of colored pair partitions (pi: k -> mid,
// rho: mid -> l), with the loop factor computed by gluing.  Returns the
// composed partition and the number of closed middle loops with even color
// flips (odd-flip loops kill the composite; balanced colorings never produce
// them here, asserted by the caller).
struct Composite {
  ColoredNCPartition partition;
  int loops = 0;
  bool odd_loop = false;
};

Composite compose(const ColoredNCPartition& rho, const ColoredNCPartition& pi) {
  REQUIRE(pi.l == rho.k);
  const int mid = pi.l;
  // points: pi upper (0..pi.k-1), middle (pi.k..), rho lower
  const int total = pi.k + mid + rho.l;
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  // pi's points map: upper p -> p, lower j -> pi.k + j
  for (int p = 0; p < pi.points(); ++p)
    for (int q = p + 1; q < pi.points(); ++q)
      if (pi.block_of[p] == pi.block_of[q]) unite(p, q);
  // rho's points map: upper j -> pi.k + j (glued), lower j -> pi.k + mid + j
  auto rho_point = [&](int p) { return p < rho.k ? pi.k + p : pi.k + mid + (p - rho.k); };
  for (int p = 0; p < rho.points(); ++p)
    for (int q = p + 1; q < rho.points(); ++q)
      if (rho.block_of[p] == rho.block_of[q]) unite(rho_point(p), rho_point(q));
  // glue colors must match
  for (int j = 0; j < mid; ++j) REQUIRE(pi.colors[pi.k + j] == rho.colors[j]);

  Composite out;
  out.partition.k = pi.k;
  out.partition.l = rho.l;
  std::map<int, int> block_ids;
  auto surviving = [&](int point) {
    // outer points of the composite: pi upper and rho lower
    return point < pi.k ? point : (point >= pi.k + mid ? point : -1);
  };
  for (int point = 0; point < total; ++point) {
    if (surviving(point) < 0) continue;
    const int root = find(point);
    auto [it, inserted] = block_ids.emplace(root, static_cast<int>(block_ids.size()));
    out.partition.block_of.push_back(it->second);
    out.partition.colors.push_back(point < pi.k ? pi.colors[point] : rho.colors[rho.k + (point - pi.k - mid)]);
  }
  // loops: classes entirely inside the middle; color-flip parity by walking
  // the pair edges with brute force over the two labels of an edge
  std::map<int, std::vector<int>> middle_classes;
  for (int j = 0; j < mid; ++j) {
    const int point = pi.k + j;
    bool touches_outer = false;
    for (int other = 0; other < total; ++other)
      if (surviving(other) >= 0 && find(other) == find(point)) touches_outer = true;
    if (!touches_outer) middle_classes[find(point)].push_back(j);
  }
  for (const auto& [root, legs] : middle_classes) {
    ++out.loops;
    // parity: follow pair blocks of pi and rho alternately from legs[0]
    int flips = 0;
    std::set<int> visited;
    int current = legs[0];
    bool use_pi = true;
    while (!visited.count(current * 2 + use_pi)) {
      visited.insert(current * 2 + use_pi);
      int partner = -1;
      if (use_pi) {
        const int point = pi.k + current;
        for (int q = 0; q < pi.points(); ++q)
          if (q != point && pi.block_of[q] == pi.block_of[point]) partner = q - pi.k;
        if (pi.colors[pi.k + current] != pi.colors[pi.k + partner]) ++flips;
      } else {
        for (int q = 0; q < rho.points(); ++q)
          if (q != current && rho.block_of[q] == rho.block_of[current]) partner = q;
        if (rho.colors[current] != rho.colors[partner]) ++flips;
      }
      current = partner;
      use_pi = !use_pi;
    }
    if (flips % 2) out.odd_loop = true;
  }
  return out;
}

}  // namespace

TEST_CASE("noncrossing counts") {
  CHECK(count_noncrossing(0) == 1);
  CHECK(count_noncrossing(1) == 1);
  CHECK(count_noncrossing(2) == 2);
  CHECK(count_noncrossing(3) == 5);
  CHECK(count_noncrossing(4) == 14);  // Catalan
  CHECK(count_noncrossing(5) == 42);
  CHECK(count_noncrossing(6) == 132);
}

TEST_CASE("noncrossing test against the brute-force oracle") {
  // every set partition of 4 points, both split shapes
  for (int k = 0; k <= 4; ++k) {
    const int l = 4 - k;
    const auto all = enumerate_partitions(k, l, [](const ColoredNCPartition&) { return true; });
    // enumerate_partitions already filters; double-check each against the oracle
    for (const auto& p : all) {
      std::vector<int> circ(p.points());
      for (int t = 0; t < p.points(); ++t)
        circ[p.upper(t) ? t : p.k + (p.l - 1 - (t - p.k))] = p.block_of[t];
      CHECK_FALSE(crossing_oracle(circ));
    }
  }
  // the crossing pairing 13|24 of 4 upper points is excluded
  ColoredNCPartition crossing;
  crossing.k = 4;
  crossing.l = 0;
  crossing.block_of = {0, 1, 0, 1};
  crossing.colors.assign(4, LegColor::White);
  CHECK_FALSE(is_noncrossing(crossing));
  CHECK(crossing_oracle({0, 1, 0, 1}));
}

TEST_CASE("empty and through-string partitions") {
  const auto empty = enumerate_partitions(0, 0, nullptr);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].points() == 0);

  const auto through = enumerate_partitions(1, 1, [](const ColoredNCPartition& p) {
    return is_pair_partition(p) && balanced_colors(p);
  });
  // one partition, two same-color colorings
  REQUIRE(through.size() == 2);
  for (const auto& p : through) CHECK(p.colors[0] == p.colors[1]);
}

TEST_CASE("t_pi examples") {
  // identity through-string
  ColoredNCPartition through;
  through.k = through.l = 1;
  through.block_of = {0, 0};
  through.colors = {LegColor::White, LegColor::White};
  for (int n : {1, 2}) CHECK((t_pi(through, n) - Eigen::MatrixXcd::Identity(2 * n, 2 * n)).norm() == 0);

  // the lemma 5.2 partition reproduces the explicit operator exactly
  for (int n : {1, 2, 3}) CHECK((t_pi(lemma52_partition(), n) - lemma52_intertwiner(2 * n)).norm() == 0);

  // all-singletons partition: every entry 1 (no constraints)
  ColoredNCPartition singletons;
  singletons.k = 1;
  singletons.l = 1;
  singletons.block_of = {0, 1};
  singletons.colors = {LegColor::White, LegColor::Black};
  const auto t = t_pi(singletons, 1);
  CHECK((t - Eigen::MatrixXcd::Ones(2, 2)).norm() == 0);
}

TEST_CASE("pair partition composition: product equals (2n)^loops times the composite") {
  const int n = 2, d = 2 * n;
  const auto pair_balanced = [](const ColoredNCPartition& p) {
    return is_pair_partition(p) && balanced_colors(p);
  };
  // cap: 0 -> 2 and cup: 2 -> 0 with matching middle colors make one loop
  const auto caps = enumerate_partitions(0, 2, pair_balanced);
  const auto cups = enumerate_partitions(2, 0, pair_balanced);
  REQUIRE(!caps.empty());
  REQUIRE(!cups.empty());
  for (const auto& cap : caps)
    for (const auto& cup : cups) {
      if (cap.colors[0] != cup.colors[0] || cap.colors[1] != cup.colors[1]) continue;
      const auto comp = compose(cup, cap);
      CHECK_FALSE(comp.odd_loop);
      CHECK(comp.loops == 1);
      const Eigen::MatrixXcd prod = t_pi(cup, n) * t_pi(cap, n);
      const Eigen::MatrixXcd expected = std::pow(double(d), comp.loops) * t_pi(comp.partition, n);
      CHECK((prod - expected).norm() < 1e-12);
    }

  // generic 2 -> 2 composites, no loops
  const auto mids = enumerate_partitions(2, 2, pair_balanced);
  int checked = 0;
  for (const auto& pi : mids)
    for (const auto& rho : mids) {
      if (pi.colors[2] != rho.colors[0] || pi.colors[3] != rho.colors[1]) continue;
      const auto comp = compose(rho, pi);
      if (comp.odd_loop) continue;
      const Eigen::MatrixXcd prod = t_pi(rho, n) * t_pi(pi, n);
      const Eigen::MatrixXcd expected = std::pow(double(d), comp.loops) * t_pi(comp.partition, n);
      CHECK((prod - expected).norm() < 1e-12);
      ++checked;
    }
  CHECK(checked > 10);
}

TEST_CASE("span containment against K+-valid instances") {
  const auto fleet = make_fleet(0x5EED, 3);
  const auto pair_balanced = [](const ColoredNCPartition& p) {
    return is_pair_partition(p) && balanced_colors(p);
  };
  const auto partitions = enumerate_partitions(2, 2, pair_balanced);
  REQUIRE(!partitions.empty());
  for (const auto& inst : fleet) {
    if (!inst.expect_kplus || inst.u.dim != 4) continue;
    INFO(inst.name);
    const auto report = span_containment_check(partitions, inst.u, 2, 2);
    CHECK(report.all_intertwiners());
    CHECK(report.span_rank >= 1);
    CHECK(report.solution_dim >= report.span_rank);
  }
  // the lemma partition is not an intertwiner of the non-normal instance
  for (const auto& inst : fleet) {
    if (inst.expect_kplus) continue;
    CHECK_THROWS_AS(span_containment_check(partitions, inst.u, 2, 2), std::domain_error);
    const auto res = intertwiner_check(t_pi(lemma52_partition(), 2), inst.u, 2, 2);
    CHECK_FALSE(res.ok);
  }
}
