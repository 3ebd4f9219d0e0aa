#include <map>
#include "qsg/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace qsg {

bool is_color_automorphism(const ColoredMatrix& m, const Perm& sigma) {
  const int n = m.size();
  if (static_cast<int>(sigma.size()) != n) throw std::invalid_argument("permutation degree mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.entries.at(sigma[i], sigma[j]) != m.entries.at(i, j)) return false;
  return true;
}

namespace {

using Cells = std::vector<std::vector<int>>;

struct Searcher {
  int n;
  std::vector<std::vector<int>> color;  // palette index matrix

  explicit Searcher(const ColoredMatrix& m) : n(m.size()), color(n, std::vector<int>(n)) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) color[i][j] = m.color_index(i, j);
  }

  // Signature of v against a partition: per cell, the sorted list of
  // (color(v,w), color(w,v)) plus the diagonal color.
  std::vector<int> signature(int v, const Cells& cells) const {
    std::vector<int> sig{color[v][v]};
    for (const auto& cell : cells) {
      std::vector<std::pair<int, int>> pairs;
      pairs.reserve(cell.size());
      for (int w : cell)
        if (w != v) pairs.emplace_back(color[v][w], color[w][v]);
      std::sort(pairs.begin(), pairs.end());
      sig.push_back(static_cast<int>(pairs.size()));
      for (const auto& [a, b] : pairs) {
        sig.push_back(a);
        sig.push_back(b);
      }
    }
    return sig;
  }

  // One lockstep refinement round.  Returns false when the two partitions
  // become incompatible (no automorphism can map dom cells onto rng cells).
  bool refine_round(Cells& dom, Cells& rng, bool& changed) const {
    Cells new_dom, new_rng;
    changed = false;
    for (size_t c = 0; c < dom.size(); ++c) {
      std::map<std::vector<int>, std::vector<int>> dom_split, rng_split;
      for (int v : dom[c]) dom_split[signature(v, dom)].push_back(v);
      for (int w : rng[c]) rng_split[signature(w, rng)].push_back(w);
      if (dom_split.size() != rng_split.size()) return false;
      auto di = dom_split.begin();
      auto ri = rng_split.begin();
      for (; di != dom_split.end(); ++di, ++ri) {
        if (di->first != ri->first || di->second.size() != ri->second.size()) return false;
        new_dom.push_back(di->second);
        new_rng.push_back(ri->second);
      }
      if (dom_split.size() > 1) changed = true;
    }
    dom = std::move(new_dom);
    rng = std::move(new_rng);
    return true;
  }

  bool refine(Cells& dom, Cells& rng) const {
    bool changed = true;
    while (changed) {
      if (!refine_round(dom, rng, changed)) return false;
    }
    return true;
  }

  // Individualize v inside its cell (and w in the corresponding rng cell).
  static void individualize(Cells& cells, int cell_idx, int v) {
    auto rest = cells[cell_idx];
    rest.erase(std::find(rest.begin(), rest.end(), v));
    cells[cell_idx] = {v};
    cells.insert(cells.begin() + cell_idx + 1, std::move(rest));
  }

  std::optional<Perm> leaf_permutation(const Cells& dom, const Cells& rng) const {
    Perm sigma(n, -1);
    for (size_t c = 0; c < dom.size(); ++c) sigma[dom[c][0]] = rng[c][0];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (color[sigma[i]][sigma[j]] != color[i][j]) return std::nullopt;
    return sigma;
  }

  // Branch cell: largest non-singleton, ties broken towards the one holding
  // the lowest-index vertex.
  static int branch_cell(const Cells& cells) {
    int best = -1;
    for (size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() < 2) continue;
      if (best < 0 || cells[c].size() > cells[best].size() ||
          (cells[c].size() == cells[best].size() &&
           *std::min_element(cells[c].begin(), cells[c].end()) <
               *std::min_element(cells[best].begin(), cells[best].end())))
        best = static_cast<int>(c);
    }
    return best;
  }

  std::optional<Perm> search(Cells dom, Cells rng) const {
    if (!refine(dom, rng)) return std::nullopt;
    const int bc = branch_cell(dom);
    if (bc < 0) return leaf_permutation(dom, rng);
    const int v = *std::min_element(dom[bc].begin(), dom[bc].end());
    auto candidates = rng[bc];
    std::sort(candidates.begin(), candidates.end());
    for (int w : candidates) {
      Cells d = dom, r = rng;
      individualize(d, bc, v);
      individualize(r, bc, w);
      if (auto found = search(std::move(d), std::move(r))) return found;
    }
    return std::nullopt;
  }

  // Partition with 0..i-1 individualized in order, refined; dom == rng here.
  Cells refined_prefix_partition(int i) const {
    Cells dom{std::vector<int>(n)};
    std::iota(dom[0].begin(), dom[0].end(), 0);
    for (int p = 0; p < i; ++p) {
      for (size_t c = 0; c < dom.size(); ++c) {
        auto it = std::find(dom[c].begin(), dom[c].end(), p);
        if (it == dom[c].end()) continue;
        if (dom[c].size() > 1) individualize(dom, static_cast<int>(c), p);
        break;
      }
    }
    Cells rng = dom;
    if (!refine(dom, rng)) throw std::logic_error("self-refinement cannot fail");
    return dom;
  }

  // Automorphism fixing 0..i-1 pointwise and mapping i to j, starting from
  // the refined prefix partition.
  std::optional<Perm> stabilizer_map(const Cells& prefix, int i, int j) const {
    Cells dom = prefix, rng = prefix;
    for (size_t c = 0; c < dom.size(); ++c) {
      auto it = std::find(dom[c].begin(), dom[c].end(), i);
      if (it == dom[c].end()) continue;
      if (std::find(rng[c].begin(), rng[c].end(), j) == rng[c].end()) return std::nullopt;
      if (dom[c].size() > 1) {
        individualize(dom, static_cast<int>(c), i);
        auto rest = rng[c];
        rest.erase(std::find(rest.begin(), rest.end(), j));
        rng[c] = {j};
        rng.insert(rng.begin() + c + 1, std::move(rest));
      } else if (j != i) {
        return std::nullopt;
      }
      break;
    }
    return search(std::move(dom), std::move(rng));
  }
};

}  // namespace

PermGroup color_automorphisms(const ColoredMatrix& m) {
  Searcher s(m);
  PermGroup g;
  g.degree = s.n;
  g.order = 1;
  for (int i = 0; i < s.n; ++i) {
    const auto prefix = s.refined_prefix_partition(i);
    // Candidate images of i live in its refined cell.
    std::vector<int> cell;
    for (const auto& c : prefix)
      if (std::find(c.begin(), c.end(), i) != c.end()) {
        cell = c;
        break;
      }
    std::sort(cell.begin(), cell.end());
    // Orbit of i under the pointwise stabilizer of 0..i-1, grown by the
    // generators found so far before paying for a fresh search.
    std::set<int> orbit{i};
    std::vector<Perm> level_gens;
    auto close_orbit = [&] {
      bool grew = true;
      while (grew) {
        grew = false;
        for (const auto& gen : level_gens)
          for (int x : std::vector<int>(orbit.begin(), orbit.end()))
            if (orbit.insert(gen[x]).second) grew = true;
      }
    };
    for (int j : cell) {
      if (j == i || orbit.count(j)) continue;
      if (auto sigma = s.stabilizer_map(prefix, i, j)) {
        level_gens.push_back(*sigma);
        g.generators.push_back(*sigma);
        orbit.insert(j);
        close_orbit();
      }
    }
    g.order *= static_cast<long>(orbit.size());
  }
  return g;
}

std::vector<Perm> brute_force_automorphisms(const ColoredMatrix& m) {
  const int n = m.size();
  if (n > 8) throw std::invalid_argument("brute force capped at degree 8");
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    if (is_color_automorphism(m, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace qsg
