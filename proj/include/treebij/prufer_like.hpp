#pragma once

#include "treebij/set_partition.hpp"
#include "treebij/tree.hpp"

namespace treebij {

// The child-group of a vertex v is its set of children; the nonempty ones
// partition [n] \ {root}.
SetPartition child_groups(const RootedTree& tree);

// Repeatedly delete the largest leaf-group (a child-group whose members are
// all leaves, ordered by maximal element) and record its parent. The last
// recorded parent is the root.
KPermutation encode_parent_sequence(const RootedTree& tree);

struct LeafGroupCode {
  SetPartition partition;
  KPermutation perm;
};

// tree -> (child-groups, parent sequence); a bijection onto pairs whose
// partition has as many blocks as the sequence has entries.
LeafGroupCode encode(const RootedTree& tree);

// Inverse: at step i join the largest unused block avoiding the values
// p_i..p_{k-1} to p_i. Validates its inputs; throws InputError for malformed
// pairs and DecodeError if a step cannot be completed.
RootedTree decode(const SetPartition& partition, const KPermutation& perm, int root);

}  // namespace treebij
