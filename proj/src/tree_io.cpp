#include "treebij/tree_io.hpp"

#include <fstream>
#include <sstream>

#include "treebij/errors.hpp"

namespace treebij {

namespace {

std::string edges_text(const LabeledTree& tree) {
  std::ostringstream out;
  for (auto [u, v] : tree.edges) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace

std::string to_text(const LabeledTree& tree) {
  return "n " + std::to_string(tree.n) + "\n" + edges_text(tree);
}

std::string to_text(const RootedTree& tree) {
  return "n " + std::to_string(tree.n) + "\nroot " + std::to_string(tree.root) + "\n" +
         edges_text(tree.underlying());
}

ParsedTree parse_tree_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  std::optional<int> root;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string head;
    fields >> head;
    auto want_int = [&](int& out) {
      std::string trailing;
      if (!(fields >> out) || (fields >> trailing))
        throw InputError("malformed tree file at line " + std::to_string(lineno) + ": " + line);
    };
    if (head == "n") {
      if (n >= 0) throw InputError("duplicate n line at line " + std::to_string(lineno));
      want_int(n);
      if (n < 1) throw InputError("vertex count must be positive");
    } else if (head == "root") {
      if (n < 0) throw InputError("root line before n line");
      if (root) throw InputError("duplicate root line at line " + std::to_string(lineno));
      int r = 0;
      want_int(r);
      root = r;
    } else {
      if (n < 0) throw InputError("edge line before n line");
      int u = 0, v = 0;
      try {
        u = std::stoi(head);
      } catch (const std::exception&) {
        throw InputError("malformed tree file at line " + std::to_string(lineno) + ": " + line);
      }
      want_int(v);
      edges.emplace_back(u, v);
    }
  }
  if (n < 0) throw InputError("tree file has no n line");
  ParsedTree parsed;
  parsed.tree = LabeledTree::from_edges(n, std::move(edges));
  parsed.root = root;
  if (root && (*root < 1 || *root > n)) throw InputError("root out of range");
  return parsed;
}

LabeledTree parse_unrooted(const std::string& text) {
  ParsedTree parsed = parse_tree_text(text);
  if (parsed.root) throw InputError("expected an unrooted tree file, found a root line");
  return parsed.tree;
}

RootedTree parse_rooted(const std::string& text) {
  ParsedTree parsed = parse_tree_text(text);
  if (!parsed.root) throw InputError("expected a rooted tree file (root line missing)");
  return hang_up(parsed.tree, *parsed.root);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace treebij
