#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "treebij/enumeration.hpp"
#include "treebij/errors.hpp"
#include "treebij/phi.hpp"
#include "treebij/prufer_like.hpp"

using namespace treebij;

namespace {

CutEdgeMatrix matrix_of(std::vector<std::pair<int, int>> cols) {
  CutEdgeMatrix m;
  for (auto [top, bottom] : cols) m.columns.push_back({top, bottom});
  m.canonicalize();
  return m;
}

// the rooted tree the fixture maps to when hung-up work starts at 6
RootedTree tprime() {
  std::vector<int> parent(17, 0);
  auto set = [&](std::initializer_list<std::pair<int, int>> edges) {
    for (auto [child, par] : edges) parent[child] = par;
  };
  set({{11, 14}, {14, 13}, {13, 9}, {9, 6}, {12, 15}, {15, 8}, {16, 3},
       {2, 11}, {5, 11}, {1, 7}, {3, 12}, {7, 6}, {8, 6}, {4, 15}, {10, 15}});
  return RootedTree::from_parents(16, 6, parent);
}

}  // namespace

TEST_CASE("good edge classification") {
  RootedTree hung = hang_up(fixtures::tstar(), 6);
  auto good = good_edge_flags(hung);
  std::vector<int> good_children;
  for (int v = 1; v <= 16; ++v)
    if (good[v]) good_children.push_back(v);
  CHECK(good_children == std::vector<int>{1, 2, 3, 4, 5, 7, 8, 10});

  // increasing tree: all edges bad
  LabeledTree chain = LabeledTree::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
  auto chain_good = good_edge_flags(hang_up(chain, 1));
  CHECK(std::none_of(chain_good.begin(), chain_good.end(), [](bool b) { return b; }));

  // path rooted at its largest end: all edges good
  auto path_good = good_edge_flags(hang_up(chain, 4));
  for (int v = 1; v <= 3; ++v) CHECK(path_good[v]);
}

TEST_CASE("cutting good edges on the fixture") {
  auto [forest, matrix] = cut_good_edges(fixtures::tstar(), 6);
  CHECK(matrix == matrix_of({{6, 2}, {6, 5}, {7, 1}, {8, 3}, {9, 7}, {9, 8}, {12, 4}, {12, 10}}));

  REQUIRE(forest.trees.size() == 9);
  std::vector<int> roots;
  for (const auto& tree : forest.trees) roots.push_back(tree.root);
  CHECK(roots == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 10});
  // the three nontrivial components
  auto find_tree = [&](int root) -> const SubTree& {
    for (const auto& tree : forest.trees)
      if (tree.root == root) return tree;
    throw std::runtime_error("missing component");
  };
  CHECK(find_tree(6).vertices == std::vector<int>{6, 9, 11, 13, 14});
  CHECK(find_tree(6).parent == std::map<int, int>{{9, 6}, {11, 9}, {13, 9}, {14, 13}});
  CHECK(find_tree(8).vertices == std::vector<int>{8, 12, 15});
  CHECK(find_tree(8).parent == std::map<int, int>{{12, 8}, {15, 8}});
  CHECK(find_tree(3).vertices == std::vector<int>{3, 16});
  CHECK(find_tree(3).parent == std::map<int, int>{{16, 3}});

  // an increasing tree yields no cut columns and one component
  LabeledTree chain = LabeledTree::from_edges(3, {{1, 2}, {2, 3}});
  auto [chain_forest, chain_matrix] = cut_good_edges(chain, 1);
  CHECK(chain_matrix.columns.empty());
  CHECK(chain_forest.trees.size() == 1);
}

TEST_CASE("linearization of the fixture forest") {
  auto [forest, matrix] = cut_good_edges(fixtures::tstar(), 6);
  Linearization lin = linearize(forest);
  auto cycles = lin.sigma.nontrivial_cycles();
  REQUIRE(cycles.size() == 3);
  CHECK(cycles[0].elements == std::vector<int>{16, 3});
  CHECK(cycles[1].elements == std::vector<int>{11, 14, 13, 9, 6});
  CHECK(cycles[2].elements == std::vector<int>{12, 15, 8});

  // applying sigma to the cut matrix tops
  CutEdgeMatrix transported = matrix;
  for (auto& col : transported.columns) col.top = lin.sigma(col.top);
  transported.canonicalize();
  CHECK(transported ==
        matrix_of({{11, 2}, {11, 5}, {7, 1}, {12, 3}, {6, 7}, {6, 8}, {15, 4}, {15, 10}}));

  // all-singleton forest gives the identity
  IncreasingForest singletons;
  for (int v = 1; v <= 4; ++v) {
    SubTree s;
    s.root = v;
    s.vertices = {v};
    singletons.trees.push_back(s);
  }
  Linearization id = linearize(singletons);
  CHECK(id.sigma == Permutation(4));
  CHECK(id.sigma.nontrivial_cycles().empty());
}

TEST_CASE("assembly") {
  auto [forest, matrix] = cut_good_edges(fixtures::tstar(), 6);
  Linearization lin = linearize(forest);
  RootedTree image = assemble(lin.chains, matrix, 6);
  CHECK(image == tprime());
  CHECK(global_type(image) == Partition::parse("1^7 2^1 3^2"));

  // empty matrix, single chain: the chain is the tree
  LinearForest chain;
  chain.chains.push_back(CyclicWord{{3, 2, 1}});
  RootedTree from_chain = assemble(chain, {}, 1);
  CHECK(from_chain.parent[3] == 2);
  CHECK(from_chain.parent[2] == 1);

  LinearForest pair;
  pair.chains.push_back(CyclicWord{{2, 1}});
  RootedTree two = assemble(pair, {}, 1);
  CHECK(two.parent[2] == 1);

  // a matrix column that leaves the forest disconnected
  LinearForest split;
  split.chains.push_back(CyclicWord{{1}});
  split.chains.push_back(CyclicWord{{2}});
  split.chains.push_back(CyclicWord{{3}});
  CutEdgeMatrix bad;
  bad.columns.push_back({2, 3});
  CHECK_THROWS_AS(assemble(split, bad, 1), AssemblyError);
}

TEST_CASE("phi on the fixture and edges") {
  CHECK(phi(fixtures::tstar(), 6) == tprime());

  LabeledTree edge = LabeledTree::from_edges(2, {{1, 2}});
  RootedTree at1 = phi(edge, 1);
  CHECK(at1.root == 1);
  CHECK(at1.parent[2] == 1);
  RootedTree at2 = phi(edge, 2);
  CHECK(at2.root == 2);
  CHECK(at2.parent[1] == 2);
}

TEST_CASE("proper edge classification on the image tree") {
  RootedTree image = tprime();
  auto cls = classify_proper_edges(image);
  std::vector<int> non_eldest, minimal, proper;
  for (int v = 1; v <= 16; ++v) {
    if (v == image.root) continue;
    if (!cls.eldest[v]) non_eldest.push_back(v);
    if (cls.minimal[v]) minimal.push_back(v);
    if (cls.proper(v)) proper.push_back(v);
  }
  CHECK(non_eldest == std::vector<int>{2, 4, 7, 8, 10});  // edges 2->11, 4->15, 7->6, 8->6, 10->15
  CHECK(minimal == std::vector<int>{1, 3, 5});            // edges 1->7, 3->12, 5->11
  CHECK(proper == std::vector<int>{1, 2, 3, 4, 5, 7, 8, 10});

  // single increasing edge: minimal, hence proper
  RootedTree two = RootedTree::from_parents(2, 2, {0, 2, 0});
  auto two_cls = classify_proper_edges(two);
  CHECK(two_cls.minimal[1]);
  CHECK(two_cls.proper(1));

  // chain 5 -> 11 -> 14 -> 13 -> 9 -> 6: only 5 -> 11 is minimal
  std::vector<int> parent(15, 0);
  parent[5] = 11;
  parent[11] = 14;
  parent[14] = 13;
  parent[13] = 9;
  parent[9] = 6;
  std::vector<int> keep{5, 6, 9, 11, 13, 14};
  // relabel to a compact vertex set to build a valid tree
  std::map<int, int> compact;
  for (std::size_t i = 0; i < keep.size(); ++i) compact[keep[i]] = static_cast<int>(i) + 1;
  std::vector<int> cparent(keep.size() + 1, 0);
  for (int v : keep)
    if (parent[v]) cparent[compact[v]] = compact[parent[v]];
  // compact labels preserve relative order, so minimality is unchanged
  RootedTree chain = RootedTree::from_parents(6, compact[6], cparent);
  auto chain_cls = classify_proper_edges(chain);
  for (int v : keep) {
    if (v == 6) continue;
    CHECK(chain_cls.minimal[compact[v]] == (v == 5));
    CHECK(chain_cls.eldest[compact[v]]);
  }
}

TEST_CASE("cutting proper edges inverts the forward cut") {
  RootedTree image = tprime();
  auto [chains, matrix] = cut_proper_edges(image);
  CHECK(matrix ==
        matrix_of({{6, 7}, {6, 8}, {15, 4}, {15, 10}, {11, 2}, {12, 3}, {7, 1}, {11, 5}}));
  REQUIRE(chains.chains.size() == 9);
  CHECK(chains.chains[2].elements == std::vector<int>{16, 3});
  CHECK(chains.chains[5].elements == std::vector<int>{11, 14, 13, 9, 6});
  CHECK(chains.chains[7].elements == std::vector<int>{12, 15, 8});

  // a linear tree stays whole
  RootedTree line = RootedTree::from_parents(3, 1, {0, 0, 1, 2});
  auto [line_chains, line_matrix] = cut_proper_edges(line);
  CHECK(line_matrix.columns.empty());
  REQUIRE(line_chains.chains.size() == 1);
  CHECK(line_chains.chains[0].elements == std::vector<int>{3, 2, 1});

  // star rooted at the center: the largest child stays, others are cut
  RootedTree star = RootedTree::from_parents(5, 2, {0, 2, 0, 2, 2, 2});
  auto [star_chains, star_matrix] = cut_proper_edges(star);
  REQUIRE(star_chains.chains.size() == 4);
  CHECK(star_chains.chains[1].elements == std::vector<int>{5, 2});
  CHECK(star_matrix == matrix_of({{2, 1}, {2, 3}, {2, 4}}));
}

TEST_CASE("phi inverse on the fixture") {
  CHECK(phi_inverse(tprime()) == fixtures::tstar());

  PhiTrace trace;
  LabeledTree preimage = phi_inverse_traced(tprime(), trace);
  CHECK(preimage == fixtures::tstar());
  // the pulled-back matrix is the forward cut matrix
  CHECK(trace.transported_matrix ==
        matrix_of({{6, 2}, {6, 5}, {7, 1}, {8, 3}, {9, 7}, {9, 8}, {12, 4}, {12, 10}}));

  RootedTree two = RootedTree::from_parents(2, 2, {0, 2, 0});
  CHECK(phi_inverse(two) == LabeledTree::from_edges(2, {{1, 2}}));
}

TEST_CASE("phi round trip, type preservation and matrix transport, exhaustive small n") {
  for (int n = 1; n <= 6; ++n) {
    for_each_tree(n, [&](const LabeledTree& t) {
      for (int r = 1; r <= n; ++r) {
        PhiTrace trace;
        RootedTree image = phi_traced(t, r, trace);
        CHECK(local_type(t) == global_type(image));
        CHECK(phi_inverse(image) == t);
        auto cut = cut_proper_edges(image);
        CHECK(cut.matrix == trace.transported_matrix);
        CHECK(cut.chains == trace.chains);
      }
    });
  }
}

TEST_CASE("phi is onto rooted trees: inverse then forward, exhaustive n = 5") {
  for_each_tree(5, [&](const LabeledTree& t) {
    for (int r = 1; r <= 5; ++r) {
      RootedTree rooted = hang_up(t, r);
      LabeledTree preimage = phi_inverse(rooted);
      CHECK(phi(preimage, r) == rooted);
    }
  });
}

TEST_CASE("sibships") {
  RootedTree hung = hang_up(fixtures::tstar(), 6);
  CHECK(sibship(hung, 9, Orientation::local) == std::vector<int>{7, 8, 9});
  CHECK(sibship(hung, 12, Orientation::local) == std::vector<int>{4, 10, 12});
  CHECK(sibship(hung, 9, Orientation::global) == std::vector<int>{7, 8, 11, 13});

  // a leaf with only larger neighbors has an empty local sibship
  CHECK(sibship(hung, 2, Orientation::local).empty());

  PhiTrace trace;
  RootedTree image = phi_traced(fixtures::tstar(), 6, trace);
  for (int v = 1; v <= 16; ++v)
    CHECK(sibship(hung, v, Orientation::local) ==
          sibship(image, trace.sigma(v), Orientation::global));
}

TEST_CASE("edge label partitions") {
  RootedTree image = phi(fixtures::tstar(), 6);
  CHECK(edge_label_partition(fixtures::tstar(), 6, Orientation::local) == child_groups(image));

  // star with center 1 rooted at 1: all blocks are singletons
  LabeledTree star = LabeledTree::from_edges(4, {{1, 2}, {1, 3}, {1, 4}});
  SetPartition labels = edge_label_partition(star, 1, Orientation::local);
  CHECK(labels == SetPartition::from_blocks(4, 1, {{2}, {3}, {4}}));

  // block sizes match the local type over all trees on [6]
  for_each_tree(6, [&](const LabeledTree& t) {
    for (int r = 1; r <= 6; ++r)
      CHECK(edge_label_partition(t, r, Orientation::local).type() == local_type(t));
  });
}
