#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "treebij/tree.hpp"

namespace treebij {

// Exhaustive enumeration is hard-limited to n <= 10 (10^8 trees). The env var
// TREEBIJ_MAX_N can lower the cap further; it cannot raise it.
inline constexpr int kHardEnumerationCap = 10;

int enumeration_cap();

// 1 for n = 1, n^(n-2) for n >= 2.
std::uint64_t tree_count(int n);

// Classical code: repeatedly attach the smallest remaining leaf to the next
// sequence entry. Every sequence in {1..n}^(n-2) decodes to a distinct tree.
LabeledTree decode_classic_prufer(const std::vector<int>& seq, int n);

// The sequence with digits of `index` in base n, most significant first.
std::vector<int> prufer_sequence_for_index(std::uint64_t index, int n);

// Visit every tree on [n] exactly once, in ascending sequence-index order.
void for_each_tree(int n, const std::function<void(const LabeledTree&)>& visit);

std::vector<LabeledTree> all_trees(int n);

// Uniform over trees on [n] via a uniform random sequence; deterministic for
// a fixed (n, seed).
LabeledTree random_tree(int n, std::uint64_t seed);

}  // namespace treebij
