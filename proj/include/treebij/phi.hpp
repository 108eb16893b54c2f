#pragma once

#include <vector>

#include "treebij/set_partition.hpp"
#include "treebij/tree.hpp"

namespace treebij {

// Two-row matrix of cut edges; column (top; bottom) records the edge
// bottom -> top. Equality checks use the canonical column order.
struct CutEdgeMatrix {
  struct Column {
    int top = 0;
    int bottom = 0;
    friend bool operator==(const Column&, const Column&) = default;
  };
  std::vector<Column> columns;

  void canonicalize();  // sort columns by (top, bottom)

  friend bool operator==(const CutEdgeMatrix&, const CutEdgeMatrix&) = default;
};

// Forest of increasing trees (every child larger than its parent) that
// together span [n]; trees sorted by root.
struct IncreasingForest {
  std::vector<SubTree> trees;

  friend bool operator==(const IncreasingForest&, const IncreasingForest&) = default;
};

// Chains v_1 -> ... -> v_l rooted at v_l; the words partition [n] and each
// ends with its minimum. Sorted by that minimum.
struct LinearForest {
  std::vector<CyclicWord> chains;

  friend bool operator==(const LinearForest&, const LinearForest&) = default;
};

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n);  // identity on [n]

  static Permutation from_cycles(int n, const std::vector<CyclicWord>& cycles);

  int size() const { return static_cast<int>(map_.size()) - 1; }
  int operator()(int v) const;
  Permutation inverse() const;

  // Cycles of length >= 2, each rotated so its minimum comes last, sorted by
  // that minimum.
  std::vector<CyclicWord> nontrivial_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;  // 1-based; empty means uninitialized
};

// good[v] is true iff the edge from v to its parent points toward the root
// locally as well, i.e. v < parent(v). good[root] is false.
std::vector<bool> good_edge_flags(const RootedTree& tree);

struct GoodEdgeCut {
  IncreasingForest forest;
  CutEdgeMatrix matrix;  // one column (parent; child) per good edge
};

// Hang the tree at `root` and remove the good edges; the bad-edge components
// are increasing trees.
GoodEdgeCut cut_good_edges(const LabeledTree& tree, int root);

struct Linearization {
  LinearForest chains;   // postorder word of each increasing tree
  Permutation sigma;     // product of the corresponding cycles
};

Linearization linearize(const IncreasingForest& forest);

// Rebuild a rooted tree from chains plus a cut matrix: keep every chain edge
// and attach bottom -> sigma(top) for each column, where sigma is read off
// the chains. Throws AssemblyError when the result is not a tree rooted at
// `root`.
RootedTree assemble(const LinearForest& chains, const CutEdgeMatrix& matrix, int root);

// The composition cut_good_edges -> linearize -> assemble. Preserves the
// indegree type: local_type(tree) == global_type(result).
RootedTree phi(const LabeledTree& tree, int root);

// Per-child-edge classification in a rooted tree. An edge is eldest when its
// child is the largest child of its parent; deleting the non-eldest edges
// leaves chains, on which an edge is minimal when its tail is a
// right-to-left minimum. Proper = non-eldest or minimal.
struct ProperEdgeClassification {
  std::vector<bool> eldest;   // indexed by child vertex; false at the root
  std::vector<bool> minimal;

  bool proper(int v) const { return !eldest[v] || minimal[v]; }
};

ProperEdgeClassification classify_proper_edges(const RootedTree& tree);

struct ProperEdgeCut {
  LinearForest chains;   // maximal improper-edge paths
  CutEdgeMatrix matrix;  // one column (parent; child) per proper edge
};

ProperEdgeCut cut_proper_edges(const RootedTree& tree);

// Inverse of phi: cut proper edges, transport the matrix back through the
// chain cycles, rebuild the increasing trees from the chains, merge.
LabeledTree phi_inverse(const RootedTree& tree);

enum class Orientation { local, global };

// Each edge is labeled by its child endpoint. The global sibship of v
// collects labels of edges pointing at v toward the root (its children); the
// local sibship collects labels of edges whose larger endpoint is v.
std::vector<int> sibship(const RootedTree& tree, int v, Orientation orientation);

// Nonempty sibships form a partition of [n] \ {root}.
SetPartition edge_label_partition(const LabeledTree& tree, int root, Orientation orientation);

struct PhiTrace {
  CutEdgeMatrix cut_matrix;          // edges removed in the first step
  LinearForest chains;
  Permutation sigma;
  CutEdgeMatrix transported_matrix;  // cut matrix with sigma (or its inverse) applied to tops
};

RootedTree phi_traced(const LabeledTree& tree, int root, PhiTrace& trace);
LabeledTree phi_inverse_traced(const RootedTree& tree, PhiTrace& trace);

}  // namespace treebij
