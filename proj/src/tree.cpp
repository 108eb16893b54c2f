#include "treebij/tree.hpp"

#include <algorithm>
#include <numeric>

#include "treebij/errors.hpp"

namespace treebij {

namespace {

// Union-find over 1..n, path halving.
struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n + 1) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

LabeledTree LabeledTree::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) throw InputError("tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != n - 1)
    throw InputError("a tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                     " edges, got " + std::to_string(edges.size()));
  DisjointSets dsu(n);
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n || u == v) throw InputError("edge endpoint out of range");
    if (!dsu.unite(u, v)) throw InputError("edges contain a cycle or duplicate");
  }
  std::sort(edges.begin(), edges.end());
  LabeledTree t;
  t.n = n;
  t.edges = std::move(edges);
  return t;
}

std::vector<std::vector<int>> LabeledTree::adjacency() const {
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

RootedTree RootedTree::from_parents(int n, int root, std::vector<int> parent) {
  if (n < 1) throw InputError("tree needs at least one vertex");
  if (root < 1 || root > n) throw InputError("root out of range");
  if (static_cast<int>(parent.size()) != n + 1) throw InputError("parent vector has wrong size");
  if (parent[root] != 0) throw InputError("root must have no parent");
  std::vector<int> depth(n + 1, -1);
  depth[root] = 0;
  for (int v = 1; v <= n; ++v) {
    if (v != root && (parent[v] < 1 || parent[v] > n))
      throw InputError("vertex " + std::to_string(v) + " has no valid parent");
    if (depth[v] >= 0) continue;
    // walk up until a known depth, then stamp the path
    std::vector<int> path;
    int u = v;
    while (depth[u] < 0) {
      path.push_back(u);
      u = parent[u];
      if (static_cast<int>(path.size()) > n) throw InputError("parent links contain a cycle");
    }
    int d = depth[u];
    for (auto it = path.rbegin(); it != path.rend(); ++it) depth[*it] = ++d;
  }
  RootedTree t;
  t.n = n;
  t.root = root;
  t.parent = std::move(parent);
  return t;
}

std::vector<std::vector<int>> RootedTree::children() const {
  std::vector<std::vector<int>> ch(n + 1);
  for (int v = 1; v <= n; ++v)
    if (v != root) ch[parent[v]].push_back(v);
  // 1..n scan order keeps each list sorted already
  return ch;
}

LabeledTree RootedTree::underlying() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int v = 1; v <= n; ++v)
    if (v != root) edges.emplace_back(v, parent[v]);
  return LabeledTree::from_edges(n, std::move(edges));
}

RootedTree hang_up(const LabeledTree& tree, int root) {
  if (root < 1 || root > tree.n) throw InputError("root out of range");
  auto adj = tree.adjacency();
  std::vector<int> parent(tree.n + 1, 0);
  std::vector<int> queue{root};
  std::vector<bool> seen(tree.n + 1, false);
  seen[root] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    for (int w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  return RootedTree::from_parents(tree.n, root, std::move(parent));
}

std::vector<int> local_indegrees(const LabeledTree& tree) {
  std::vector<int> indeg(tree.n + 1, 0);
  for (auto [u, v] : tree.edges) ++indeg[std::max(u, v)];
  return indeg;
}

std::vector<int> global_indegrees(const RootedTree& tree) {
  std::vector<int> indeg(tree.n + 1, 0);
  for (int v = 1; v <= tree.n; ++v)
    if (v != tree.root) ++indeg[tree.parent[v]];
  return indeg;
}

namespace {

Partition type_of_indegrees(const std::vector<int>& indeg) {
  std::vector<int> parts;
  for (std::size_t v = 1; v < indeg.size(); ++v)
    if (indeg[v] > 0) parts.push_back(indeg[v]);
  return Partition::from_parts(std::move(parts));
}

// Iterative postorder over sorted children lists; subtrees in ascending root
// order, root last.
std::vector<int> postorder_from(const std::vector<std::vector<int>>& children, int root,
                                std::size_t count) {
  std::vector<int> out;
  out.reserve(count);
  std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < children[v].size()) {
      int child = children[v][next++];
      stack.emplace_back(child, 0);
    } else {
      out.push_back(v);
      stack.pop_back();
    }
  }
  return out;
}

}  // namespace

Partition local_type(const LabeledTree& tree) { return type_of_indegrees(local_indegrees(tree)); }

Partition global_type(const RootedTree& tree) { return type_of_indegrees(global_indegrees(tree)); }

std::vector<int> postorder(const RootedTree& tree) {
  return postorder_from(tree.children(), tree.root, tree.n);
}

std::vector<int> postorder(const SubTree& tree) {
  if (tree.vertices.empty()) throw InputError("empty subtree");
  int max_label = tree.vertices.back();
  std::vector<std::vector<int>> children(max_label + 1);
  for (auto [v, p] : tree.parent) children[p].push_back(v);  // map order keeps lists sorted
  return postorder_from(children, tree.root, tree.vertices.size());
}

SubTree inverse_postorder(const CyclicWord& word) {
  const auto& w = word.elements;
  if (w.empty()) throw InputError("empty word");
  for (int v : w)
    if (v < w.back()) throw InputError("last element of the word must be its minimum");
  SubTree tree;
  tree.root = w.back();
  tree.vertices = w;
  std::sort(tree.vertices.begin(), tree.vertices.end());
  if (std::adjacent_find(tree.vertices.begin(), tree.vertices.end()) != tree.vertices.end())
    throw InputError("word elements must be distinct");
  // parent(w[i]) = nearest later element smaller than w[i]; right-to-left
  // scan with a monotonic stack of later indices
  std::vector<int> stack;
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    while (!stack.empty() && w[stack.back()] > w[i]) stack.pop_back();
    if (!stack.empty()) tree.parent[w[i]] = w[stack.back()];
    stack.push_back(i);
  }
  if (tree.parent.size() != w.size() - 1)
    throw InvariantViolation("postorder inversion left unattached vertices");
  return tree;
}

}  // namespace treebij
