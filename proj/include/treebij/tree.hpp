#pragma once

#include <map>
#include <utility>
#include <vector>

#include "treebij/partition.hpp"

namespace treebij {

// Unrooted tree on vertex set {1..n}; edges stored with u < v, sorted
// lexicographically, so equal trees compare equal.
struct LabeledTree {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  static LabeledTree from_edges(int n, std::vector<std::pair<int, int>> edges);

  std::vector<std::vector<int>> adjacency() const;  // 1-based, neighbors sorted

  friend bool operator==(const LabeledTree&, const LabeledTree&) = default;
};

// Tree on {1..n} rooted at `root`; parent[v] = 0 exactly for v = root.
struct RootedTree {
  int n = 0;
  int root = 1;
  std::vector<int> parent;  // size n+1, index 0 unused

  static RootedTree from_parents(int n, int root, std::vector<int> parent);

  std::vector<std::vector<int>> children() const;  // sorted ascending
  LabeledTree underlying() const;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

// Sequence of distinct vertices (v_1, ..., v_l), read as the cyclic
// permutation v_1 -> v_2 -> ... -> v_l -> v_1.
struct CyclicWord {
  std::vector<int> elements;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
};

// Rooted tree on an explicit vertex subset; forest components live here.
struct SubTree {
  int root = 0;
  std::vector<int> vertices;  // sorted
  std::map<int, int> parent;  // v -> parent(v), for v != root

  friend bool operator==(const SubTree&, const SubTree&) = default;
};

RootedTree hang_up(const LabeledTree& tree, int root);

// indeg[v] = number of neighbors of v smaller than v (edges point from the
// smaller endpoint to the larger one). Entry 0 is unused.
std::vector<int> local_indegrees(const LabeledTree& tree);

// indeg[v] = number of children of v (edges point toward the root).
std::vector<int> global_indegrees(const RootedTree& tree);

Partition local_type(const LabeledTree& tree);
Partition global_type(const RootedTree& tree);

// Subtrees visited in ascending order of their root labels, root last.
std::vector<int> postorder(const RootedTree& tree);
std::vector<int> postorder(const SubTree& tree);

// Rebuild the increasing tree whose postorder is `word`; the parent of each
// element is the nearest later element smaller than it. Requires the last
// element to be the minimum of the word.
SubTree inverse_postorder(const CyclicWord& word);

}  // namespace treebij
