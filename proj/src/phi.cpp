#include "treebij/phi.hpp"

#include <algorithm>
#include <numeric>

#include "treebij/errors.hpp"

namespace treebij {

void CutEdgeMatrix::canonicalize() {
  std::sort(columns.begin(), columns.end(), [](const Column& a, const Column& b) {
    return std::pair(a.top, a.bottom) < std::pair(b.top, b.bottom);
  });
}

Permutation::Permutation(int n) : map_(n + 1) { std::iota(map_.begin(), map_.end(), 0); }

Permutation Permutation::from_cycles(int n, const std::vector<CyclicWord>& cycles) {
  Permutation p(n);
  for (const auto& cycle : cycles) {
    const auto& w = cycle.elements;
    for (std::size_t t = 0; t < w.size(); ++t) {
      int v = w[t];
      if (v < 1 || v > n) throw InputError("cycle element out of range");
      if (p.map_[v] != v) throw InputError("cycles are not disjoint");
      p.map_[v] = w[(t + 1) % w.size()];
    }
  }
  return p;
}

int Permutation::operator()(int v) const {
  if (v < 1 || v >= static_cast<int>(map_.size())) throw InputError("vertex out of range");
  return map_[v];
}

Permutation Permutation::inverse() const {
  Permutation inv(size());
  for (int v = 1; v <= size(); ++v) inv.map_[map_[v]] = v;
  return inv;
}

std::vector<CyclicWord> Permutation::nontrivial_cycles() const {
  std::vector<CyclicWord> cycles;
  std::vector<bool> seen(map_.size(), false);
  for (int v = 1; v <= size(); ++v) {
    if (seen[v] || map_[v] == v) continue;
    std::vector<int> cycle;
    int u = v;
    do {
      seen[u] = true;
      cycle.push_back(u);
      u = map_[u];
    } while (u != v);
    // rotate so the minimum comes last; v is the minimum since scan is ascending
    std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
    cycles.push_back(CyclicWord{std::move(cycle)});
  }
  return cycles;
}

std::vector<bool> good_edge_flags(const RootedTree& tree) {
  std::vector<bool> good(tree.n + 1, false);
  for (int v = 1; v <= tree.n; ++v)
    if (v != tree.root && v < tree.parent[v]) good[v] = true;
  return good;
}

GoodEdgeCut cut_good_edges(const LabeledTree& tree, int root) {
  RootedTree hung = hang_up(tree, root);
  auto good = good_edge_flags(hung);

  GoodEdgeCut cut;
  for (int v = 1; v <= tree.n; ++v)
    if (good[v]) cut.matrix.columns.push_back({hung.parent[v], v});
  cut.matrix.canonicalize();

  // bad-edge components; component roots are the good-edge children plus root
  std::vector<int> component_root(tree.n + 1, 0);
  std::vector<int> order = postorder(hung);  // children before parents
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    component_root[v] = (v == root || good[v]) ? v : component_root[hung.parent[v]];
  }
  std::map<int, SubTree> components;
  for (int v = 1; v <= tree.n; ++v) {
    SubTree& part = components[component_root[v]];
    part.root = component_root[v];
    part.vertices.push_back(v);
    if (v != component_root[v]) part.parent[v] = hung.parent[v];
  }
  for (auto& [r, part] : components) {
    std::sort(part.vertices.begin(), part.vertices.end());
    cut.forest.trees.push_back(std::move(part));
  }
  return cut;
}

Linearization linearize(const IncreasingForest& forest) {
  Linearization lin;
  int n = 0;
  for (const auto& tree : forest.trees) {
    lin.chains.chains.push_back(CyclicWord{postorder(tree)});
    n += static_cast<int>(tree.vertices.size());
  }
  lin.sigma = Permutation::from_cycles(n, lin.chains.chains);
  return lin;
}

namespace {

int forest_size(const LinearForest& chains) {
  int n = 0;
  for (const auto& chain : chains.chains) n += static_cast<int>(chain.elements.size());
  return n;
}

}  // namespace

RootedTree assemble(const LinearForest& chains, const CutEdgeMatrix& matrix, int root) {
  const int n = forest_size(chains);
  Permutation sigma = Permutation::from_cycles(n, chains.chains);
  std::vector<int> parent(n + 1, 0);
  std::vector<bool> has_parent(n + 1, false);
  auto attach = [&](int child, int par, const char* what) {
    if (child < 1 || child > n || par < 1 || par > n)
      throw AssemblyError(std::string("assembly ") + what + " endpoint out of range");
    if (child == root || has_parent[child])
      throw AssemblyError(std::string("assembly gives two parents to vertex ") +
                          std::to_string(child));
    parent[child] = par;
    has_parent[child] = true;
  };
  for (const auto& chain : chains.chains)
    for (std::size_t t = 0; t + 1 < chain.elements.size(); ++t)
      attach(chain.elements[t], chain.elements[t + 1], "chain");
  for (const auto& col : matrix.columns) attach(col.bottom, sigma(col.top), "cut-edge");
  for (int v = 1; v <= n; ++v)
    if (v != root && !has_parent[v])
      throw AssemblyError("assembly leaves vertex " + std::to_string(v) + " disconnected");
  try {
    return RootedTree::from_parents(n, root, std::move(parent));
  } catch (const InputError& e) {
    throw AssemblyError(std::string("assembled graph is not a tree: ") + e.what());
  }
}

RootedTree phi(const LabeledTree& tree, int root) {
  auto [forest, matrix] = cut_good_edges(tree, root);
  Linearization lin = linearize(forest);
  return assemble(lin.chains, matrix, root);
}

RootedTree phi_traced(const LabeledTree& tree, int root, PhiTrace& trace) {
  auto [forest, matrix] = cut_good_edges(tree, root);
  Linearization lin = linearize(forest);
  trace.cut_matrix = matrix;
  trace.chains = lin.chains;
  trace.sigma = lin.sigma;
  trace.transported_matrix = matrix;
  for (auto& col : trace.transported_matrix.columns) col.top = lin.sigma(col.top);
  trace.transported_matrix.canonicalize();
  return assemble(lin.chains, matrix, root);
}

ProperEdgeClassification classify_proper_edges(const RootedTree& tree) {
  ProperEdgeClassification cls;
  cls.eldest.assign(tree.n + 1, false);
  cls.minimal.assign(tree.n + 1, false);
  auto children = tree.children();
  std::vector<int> eldest_child(tree.n + 1, 0);
  for (int v = 1; v <= tree.n; ++v) {
    if (children[v].empty()) continue;
    eldest_child[v] = children[v].back();
    cls.eldest[children[v].back()] = true;
  }
  // chains of eldest edges start at leaves of the original tree
  for (int start = 1; start <= tree.n; ++start) {
    if (!children[start].empty()) continue;
    std::vector<int> chain{start};
    int v = start;
    while (v != tree.root && cls.eldest[v]) {
      v = tree.parent[v];
      chain.push_back(v);
    }
    // edge chain[t] -> chain[t+1] is minimal iff chain[t] beats every later entry
    int suffix_min = chain.back();
    for (int t = static_cast<int>(chain.size()) - 2; t >= 0; --t) {
      if (chain[t] < suffix_min) {
        cls.minimal[chain[t]] = true;
        suffix_min = chain[t];
      }
    }
  }
  return cls;
}

ProperEdgeCut cut_proper_edges(const RootedTree& tree) {
  auto cls = classify_proper_edges(tree);
  ProperEdgeCut cut;
  for (int v = 1; v <= tree.n; ++v) {
    if (v == tree.root) continue;
    if (cls.proper(v)) cut.matrix.columns.push_back({tree.parent[v], v});
  }
  cut.matrix.canonicalize();

  // improper edges leave each vertex at most one child; walk the chains up
  // from their leaves
  std::vector<bool> has_improper_child(tree.n + 1, false);
  for (int v = 1; v <= tree.n; ++v)
    if (v != tree.root && !cls.proper(v)) has_improper_child[tree.parent[v]] = true;
  std::map<int, CyclicWord> chains;  // keyed by chain root for deterministic order
  for (int start = 1; start <= tree.n; ++start) {
    if (has_improper_child[start]) continue;
    std::vector<int> chain{start};
    int v = start;
    while (v != tree.root && !cls.proper(v)) {
      v = tree.parent[v];
      chain.push_back(v);
    }
    chains[v] = CyclicWord{std::move(chain)};
  }
  for (auto& [r, chain] : chains) cut.chains.chains.push_back(std::move(chain));
  return cut;
}

LabeledTree phi_inverse_traced(const RootedTree& tree, PhiTrace& trace) {
  auto [chains, matrix] = cut_proper_edges(tree);
  Permutation sigma = Permutation::from_cycles(tree.n, chains.chains);
  Permutation sigma_inv = sigma.inverse();
  CutEdgeMatrix pulled_back = matrix;
  for (auto& col : pulled_back.columns) {
    col.top = sigma_inv(col.top);
    if (col.bottom >= col.top)
      throw InvariantViolation("pulled-back cut edge is not increasing");
  }
  pulled_back.canonicalize();

  trace.cut_matrix = matrix;
  trace.chains = chains;
  trace.sigma = sigma;
  trace.transported_matrix = pulled_back;

  std::vector<std::pair<int, int>> edges;
  edges.reserve(tree.n - 1);
  for (const auto& chain : chains.chains) {
    SubTree increasing = inverse_postorder(chain);
    for (auto [v, p] : increasing.parent) edges.emplace_back(v, p);
  }
  for (const auto& col : pulled_back.columns) edges.emplace_back(col.bottom, col.top);
  return LabeledTree::from_edges(tree.n, std::move(edges));
}

LabeledTree phi_inverse(const RootedTree& tree) {
  PhiTrace trace;
  return phi_inverse_traced(tree, trace);
}

std::vector<int> sibship(const RootedTree& tree, int v, Orientation orientation) {
  if (v < 1 || v > tree.n) throw InputError("vertex out of range");
  std::vector<int> labels;
  if (orientation == Orientation::global) {
    labels = tree.children()[v];
  } else {
    for (int c = 1; c <= tree.n; ++c) {
      if (c == tree.root) continue;
      // edge c -> parent(c) carries label c and points locally at its larger end
      if (std::max(c, tree.parent[c]) == v) labels.push_back(c);
    }
    std::sort(labels.begin(), labels.end());
  }
  return labels;
}

SetPartition edge_label_partition(const LabeledTree& tree, int root, Orientation orientation) {
  if (tree.n < 2) throw InputError("edge-label partition needs n >= 2");
  RootedTree hung = hang_up(tree, root);
  std::vector<std::vector<int>> blocks;
  for (int v = 1; v <= tree.n; ++v) {
    auto labels = sibship(hung, v, orientation);
    if (!labels.empty()) blocks.push_back(std::move(labels));
  }
  return SetPartition::from_blocks(tree.n, root, std::move(blocks));
}

}  // namespace treebij
