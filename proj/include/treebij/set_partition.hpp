#pragma once

#include <string>
#include <vector>

#include "treebij/partition.hpp"

namespace treebij {

// Partition of the ground set [n] \ {excluded} into disjoint nonempty blocks.
// Blocks are stored with members ascending and ordered by maximal element
// descending, which is also the order of the slash-separated text form.
struct SetPartition {
  int n = 0;
  int excluded = 0;
  std::vector<std::vector<int>> blocks;

  static SetPartition from_blocks(int n, int excluded, std::vector<std::vector<int>> blocks);

  Partition type() const;  // block-size multiplicities

  std::string to_text() const;  // e.g. "5 9 12/2 11/10"
  static SetPartition parse_text(int n, int excluded, const std::string& text);

  friend bool operator==(const SetPartition&, const SetPartition&) = default;
};

// Order on disjoint nonempty vertex sets: compare maximal elements.
bool leaf_group_less(const std::vector<int>& a, const std::vector<int>& b);

// Ordered sequence of distinct vertices of [n].
struct KPermutation {
  std::vector<int> entries;

  static KPermutation from_entries(int n, std::vector<int> entries);

  friend bool operator==(const KPermutation&, const KPermutation&) = default;
};

}  // namespace treebij
