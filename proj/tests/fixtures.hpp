// Shared golden fixtures for the bijection tests.
#pragma once

#include "treebij/tree.hpp"

namespace fixtures {

// 16-vertex reference tree whose pipeline data (cut matrices, chain words,
// indegree types) is pinned in the tests.
inline treebij::LabeledTree tstar() {
  return treebij::LabeledTree::from_edges(
      16, {{6, 9},
           {9, 11},
           {9, 13},
           {13, 14},
           {8, 12},
           {8, 15},
           {3, 16},
           {2, 6},
           {5, 6},
           {1, 7},
           {3, 8},
           {7, 9},
           {8, 9},
           {4, 12},
           {10, 12}});
}

// 14-vertex rooted tree exercising the leaf-group code.
inline treebij::RootedTree t14() {
  auto tree = treebij::LabeledTree::from_edges(
      14, {{4, 1},
           {4, 6},
           {4, 13},
           {4, 14},
           {6, 3},
           {6, 7},
           {14, 8},
           {8, 2},
           {8, 11},
           {13, 10},
           {10, 5},
           {10, 9},
           {10, 12}});
  return treebij::hang_up(tree, 4);
}

}  // namespace fixtures
