#include "treebij/enumeration.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <random>

#include "treebij/errors.hpp"

namespace treebij {

int enumeration_cap() {
  static const int cap = [] {
    if (const char* env = std::getenv("TREEBIJ_MAX_N")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v >= 1)
        return static_cast<int>(std::min<long>(v, kHardEnumerationCap));
    }
    return kHardEnumerationCap;
  }();
  return cap;
}

std::uint64_t tree_count(int n) {
  if (n < 1) throw InputError("vertex count must be positive");
  if (n <= 2) return 1;
  std::uint64_t total = 1;
  for (int i = 0; i < n - 2; ++i) total *= static_cast<std::uint64_t>(n);
  return total;
}

LabeledTree decode_classic_prufer(const std::vector<int>& seq, int n) {
  if (n < 2) throw InputError("classic code needs n >= 2");
  if (static_cast<int>(seq.size()) != n - 2)
    throw InputError("sequence must have n-2 entries");
  std::vector<int> degree(n + 1, 1);
  for (int s : seq) {
    if (s < 1 || s > n) throw InputError("sequence entry out of range");
    ++degree[s];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int s : seq) {
    int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1) leaves.push(s);
  }
  int a = leaves.top();
  leaves.pop();
  int b = leaves.top();
  edges.emplace_back(a, b);
  return LabeledTree::from_edges(n, std::move(edges));
}

std::vector<int> prufer_sequence_for_index(std::uint64_t index, int n) {
  std::vector<int> seq(std::max(0, n - 2));
  for (int t = n - 3; t >= 0; --t) {
    seq[t] = 1 + static_cast<int>(index % n);
    index /= n;
  }
  return seq;
}

void for_each_tree(int n, const std::function<void(const LabeledTree&)>& visit) {
  if (n < 1) throw InputError("vertex count must be positive");
  if (n > enumeration_cap())
    throw CapacityError("n = " + std::to_string(n) + " exceeds the enumeration cap of " +
                        std::to_string(enumeration_cap()));
  if (n == 1) {
    visit(LabeledTree::from_edges(1, {}));
    return;
  }
  const std::uint64_t total = tree_count(n);
  for (std::uint64_t index = 0; index < total; ++index)
    visit(decode_classic_prufer(prufer_sequence_for_index(index, n), n));
}

std::vector<LabeledTree> all_trees(int n) {
  std::vector<LabeledTree> out;
  out.reserve(tree_count(n));
  for_each_tree(n, [&](const LabeledTree& t) { out.push_back(t); });
  return out;
}

LabeledTree random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("vertex count must be positive");
  if (n == 1) return LabeledTree::from_edges(1, {});
  std::mt19937_64 gen(seed);
  std::vector<int> seq(n - 2);
  // plain modulo keeps the draw reproducible across platforms; the bias is
  // negligible for 64-bit draws over n <= a few thousand
  for (int& s : seq) s = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(n));
  return decode_classic_prufer(seq, n);
}

}  // namespace treebij
