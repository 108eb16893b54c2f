#include "treebij/prufer_like.hpp"

#include <algorithm>
#include <queue>

#include "treebij/errors.hpp"

namespace treebij {

SetPartition child_groups(const RootedTree& tree) {
  if (tree.n < 2) throw InputError("child-groups need n >= 2");
  std::vector<std::vector<int>> blocks;
  for (const auto& group : tree.children())
    if (!group.empty()) blocks.push_back(group);
  return SetPartition::from_blocks(tree.n, tree.root, std::move(blocks));
}

KPermutation encode_parent_sequence(const RootedTree& tree) {
  if (tree.n < 2) throw InputError("encoding needs n >= 2");
  auto children = tree.children();
  // pending[v]: members of G_v whose own child-group has not been deleted yet.
  // G_v is a leaf-group exactly when pending[v] == 0.
  std::vector<int> pending(tree.n + 1, 0);
  std::vector<int> group_max(tree.n + 1, 0);
  for (int v = 1; v <= tree.n; ++v) {
    if (children[v].empty()) continue;
    group_max[v] = children[v].back();
    for (int w : children[v])
      if (!children[w].empty()) ++pending[v];
  }
  // largest leaf-group first, by maximal member
  std::priority_queue<std::pair<int, int>> ready;  // (max member, parent)
  for (int v = 1; v <= tree.n; ++v)
    if (!children[v].empty() && pending[v] == 0) ready.emplace(group_max[v], v);
  std::vector<int> parents;
  while (!ready.empty()) {
    auto [mx, v] = ready.top();
    ready.pop();
    parents.push_back(v);
    if (v == tree.root) continue;
    int up = tree.parent[v];
    if (--pending[up] == 0) ready.emplace(group_max[up], up);
  }
  if (parents.empty() || parents.back() != tree.root)
    throw InvariantViolation("leaf-group deletion did not end at the root");
  return KPermutation::from_entries(tree.n, std::move(parents));
}

LeafGroupCode encode(const RootedTree& tree) {
  return {child_groups(tree), encode_parent_sequence(tree)};
}

RootedTree decode(const SetPartition& partition, const KPermutation& perm, int root) {
  const int n = partition.n;
  const int k = static_cast<int>(perm.entries.size());
  if (root < 1 || root > n) throw InputError("root out of range");
  if (partition.excluded != root)
    throw InputError("partition ground set must be [n] minus the root");
  if (static_cast<int>(partition.blocks.size()) != k)
    throw InputError("block count must equal the permutation length");
  if (k < 1 || perm.entries.back() != root)
    throw InputError("permutation must end with the root");
  KPermutation::from_entries(n, perm.entries);  // range + distinctness

  // last_avoid[b]: latest step i <= k-1 with p_i inside block b (0 if none);
  // block b becomes usable at steps after that.
  std::vector<int> block_of(n + 1, -1);
  for (int b = 0; b < k; ++b)
    for (int v : partition.blocks[b]) block_of[v] = b;
  std::vector<int> last_avoid(k, 0);
  for (int i = 1; i <= k - 1; ++i) {
    int b = block_of[perm.entries[i - 1]];
    if (b >= 0) last_avoid[b] = std::max(last_avoid[b], i);
  }

  std::vector<int> parent(n + 1, 0);
  std::vector<bool> used(k, false);
  for (int i = 1; i <= k; ++i) {
    int best = -1;
    for (int b = 0; b < k; ++b) {  // blocks are sorted by max descending
      if (used[b] || last_avoid[b] >= i) continue;
      best = b;
      break;
    }
    if (best < 0)
      throw DecodeError(i, "no block avoids the remaining parent values at step " +
                               std::to_string(i));
    used[best] = true;
    for (int v : partition.blocks[best]) parent[v] = perm.entries[i - 1];
  }
  // parent chains always walk toward later blocks, so this cannot cycle;
  // from_parents still validates.
  return RootedTree::from_parents(n, root, std::move(parent));
}

}  // namespace treebij
