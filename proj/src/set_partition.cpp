#include "treebij/set_partition.hpp"

#include <algorithm>
#include <sstream>

#include "treebij/errors.hpp"

namespace treebij {

SetPartition SetPartition::from_blocks(int n, int excluded,
                                       std::vector<std::vector<int>> blocks) {
  if (n < 1 || excluded < 1 || excluded > n) throw InputError("bad ground set parameters");
  std::vector<bool> seen(n + 1, false);
  int covered = 0;
  for (auto& block : blocks) {
    if (block.empty()) throw InputError("set partition block is empty");
    std::sort(block.begin(), block.end());
    for (int v : block) {
      if (v < 1 || v > n || v == excluded) throw InputError("block member out of range");
      if (seen[v]) throw InputError("blocks are not disjoint");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n - 1) throw InputError("blocks do not cover the ground set");
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a.back() > b.back(); });
  SetPartition p;
  p.n = n;
  p.excluded = excluded;
  p.blocks = std::move(blocks);
  return p;
}

Partition SetPartition::type() const {
  std::vector<int> sizes;
  sizes.reserve(blocks.size());
  for (const auto& block : blocks) sizes.push_back(static_cast<int>(block.size()));
  return Partition::from_parts(std::move(sizes));
}

std::string SetPartition::to_text() const {
  std::ostringstream out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out << '/';
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out << ' ';
      out << blocks[b][i];
    }
  }
  return out.str();
}

SetPartition SetPartition::parse_text(int n, int excluded, const std::string& text) {
  std::vector<std::vector<int>> blocks;
  std::istringstream in(text);
  std::string chunk;
  while (std::getline(in, chunk, '/')) {
    std::istringstream members(chunk);
    std::vector<int> block;
    int v = 0;
    while (members >> v) block.push_back(v);
    if (!members.eof()) throw InputError("bad set partition block: " + chunk);
    if (block.empty()) throw InputError("empty set partition block");
    blocks.push_back(std::move(block));
  }
  return from_blocks(n, excluded, std::move(blocks));
}

bool leaf_group_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.empty() || b.empty()) throw InputError("leaf-group comparison needs nonempty sets");
  int ma = *std::max_element(a.begin(), a.end());
  int mb = *std::max_element(b.begin(), b.end());
  if (ma == mb) throw InputError("leaf-group comparison needs disjoint sets");
  return ma < mb;
}

KPermutation KPermutation::from_entries(int n, std::vector<int> entries) {
  std::vector<bool> seen(n + 1, false);
  for (int v : entries) {
    if (v < 1 || v > n) throw InputError("permutation entry out of range");
    if (seen[v]) throw InputError("permutation entries must be distinct");
    seen[v] = true;
  }
  KPermutation p;
  p.entries = std::move(entries);
  return p;
}

}  // namespace treebij
