#pragma once

#include <optional>
#include <string>

#include "treebij/tree.hpp"

namespace treebij {

// Text form of a tree file:
//   n <n>
//   root <r>        (present only for rooted trees)
//   <u> <v>         (n-1 lines, u < v, sorted lexicographically, LF endings)
std::string to_text(const LabeledTree& tree);
std::string to_text(const RootedTree& tree);

struct ParsedTree {
  LabeledTree tree;
  std::optional<int> root;  // set iff the file carried a `root` line
};

ParsedTree parse_tree_text(const std::string& text);

LabeledTree parse_unrooted(const std::string& text);  // rejects rooted files
RootedTree parse_rooted(const std::string& text);     // rejects unrooted files

std::string read_file(const std::string& path);

}  // namespace treebij
