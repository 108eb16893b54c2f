// Test-only oracles, kept independent of the library code paths they check:
// trees by direct edge-subset search, set partitions by restricted growth
// strings, Gaussian binomials by the factorial quotient.
#pragma once

#include <functional>
#include <numeric>
#include <vector>

#include "treebij/qpoly.hpp"
#include "treebij/qseries.hpp"
#include "treebij/tree.hpp"

namespace oracles {

// Every tree on [n], found by trying all (n choose 2) choose (n-1) edge
// subsets and keeping the connected acyclic ones. Usable up to n ~ 7.
inline std::vector<treebij::LabeledTree> brute_force_trees(int n) {
  std::vector<std::pair<int, int>> all_edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) all_edges.emplace_back(u, v);
  std::vector<treebij::LabeledTree> out;
  if (n == 1) {
    out.push_back(treebij::LabeledTree::from_edges(1, {}));
    return out;
  }
  const int m = static_cast<int>(all_edges.size());
  std::vector<int> pick(n - 1);
  std::function<void(int, int)> rec = [&](int from, int depth) {
    if (depth == n - 1) {
      // spanning + acyclic check via union-find on the chosen edges
      std::vector<int> parent(n + 1);
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
      };
      int merges = 0;
      for (int idx : pick) {
        auto [u, v] = all_edges[idx];
        int ru = find(u), rv = find(v);
        if (ru == rv) return;
        parent[ru] = rv;
        ++merges;
      }
      if (merges == n - 1) {
        std::vector<std::pair<int, int>> edges;
        for (int idx : pick) edges.push_back(all_edges[idx]);
        out.push_back(treebij::LabeledTree::from_edges(n, std::move(edges)));
      }
      return;
    }
    for (int e = from; e < m; ++e) {
      pick[depth] = e;
      rec(e + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

// Set partitions of ground[0..k) via restricted growth: element i either
// joins an existing block or opens a new one.
inline void for_each_set_partition(
    const std::vector<int>& ground,
    const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::vector<int>> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t at) {
    if (at == ground.size()) {
      visit(blocks);
      return;
    }
    const std::size_t existing = blocks.size();
    for (std::size_t b = 0; b < existing; ++b) {
      blocks[b].push_back(ground[at]);
      rec(at + 1);
      blocks[b].pop_back();
    }
    blocks.push_back({ground[at]});
    rec(at + 1);
    blocks.pop_back();
  };
  rec(0);
}

// (q;q)_n / ((q;q)_k (q;q)_{n-k}) computed through q-factorials and exact
// polynomial division; an independent route to the Gaussian binomial.
inline treebij::QPolynomial q_binomial_product(int n, int k) {
  if (k < 0 || k > n) return {};
  return treebij::QPolynomial::div_exact(treebij::q_factorial(n),
                                         treebij::q_factorial(k) * treebij::q_factorial(n - k));
}

}  // namespace oracles
