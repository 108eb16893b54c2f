#include "treebij/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iostream>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "treebij/counting.hpp"
#include "treebij/enumeration.hpp"
#include "treebij/errors.hpp"
#include "treebij/genfun.hpp"
#include "treebij/phi.hpp"
#include "treebij/prufer_like.hpp"
#include "treebij/qseries.hpp"
#include "treebij/tree_io.hpp"

namespace treebij::cli {

using nlohmann::ordered_json;

namespace {

ordered_json tree_json(const LabeledTree& tree) {
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : tree.edges) edges.push_back({u, v});
  return {{"n", tree.n}, {"edges", std::move(edges)}};
}

ordered_json rooted_json(const RootedTree& tree) {
  ordered_json edges = ordered_json::array();
  for (int v = 1; v <= tree.n; ++v)
    if (v != tree.root) edges.push_back({v, tree.parent[v]});  // [child, parent]
  return {{"n", tree.n}, {"root", tree.root}, {"edges", std::move(edges)}};
}

ordered_json matrix_json(const CutEdgeMatrix& matrix) {
  ordered_json cols = ordered_json::array();
  for (const auto& col : matrix.columns) cols.push_back({col.top, col.bottom});
  return cols;
}

ordered_json words_json(const std::vector<CyclicWord>& words) {
  ordered_json out = ordered_json::array();
  for (const auto& word : words) out.push_back(word.elements);
  return out;
}

ordered_json trace_json(const PhiTrace& trace, bool forward) {
  // forward: d_matrix is the cut matrix and sigma transports it; backward:
  // the cut matrix is the proper-edge matrix and d_matrix is the pullback
  ordered_json out;
  if (forward) {
    out["d_matrix"] = matrix_json(trace.cut_matrix);
    out["sigma"] = words_json(trace.sigma.nontrivial_cycles());
    out["chains"] = words_json(trace.chains.chains);
    out["sigma_d_matrix"] = matrix_json(trace.transported_matrix);
  } else {
    out["p_matrix"] = matrix_json(trace.cut_matrix);
    out["sigma"] = words_json(trace.sigma.nontrivial_cycles());
    out["chains"] = words_json(trace.chains.chains);
    out["d_matrix"] = matrix_json(trace.transported_matrix);
  }
  return out;
}

ordered_json census_json(const Census& c) {
  ordered_json counts = ordered_json::array();
  for (const auto& [type, count] : c.counts)
    counts.push_back({{"type", type.to_string()}, {"count", count.str()}});
  ordered_json out;
  out["n"] = c.n;
  out["variant"] = c.variant == CensusVariant::local_unrooted ? "local" : "global";
  if (c.variant == CensusVariant::global_rooted) out["root"] = c.root;
  out["counts"] = std::move(counts);
  out["total"] = c.total.str();
  return out;
}

ordered_json coeff_json(const QPolynomial& poly) {
  ordered_json out = ordered_json::array();
  for (const BigInt& c : poly.coeffs()) out.push_back(c.str());
  return out;
}

// ---- verification sweeps ----------------------------------------------

struct CheckReport {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
};

// Split the sequence-index space across workers; every index is visited
// exactly once. The visitor must be thread-safe.
void parallel_tree_sweep(int n, int jobs,
                         const std::function<void(const LabeledTree&)>& visit) {
  if (n > enumeration_cap())
    throw CapacityError("n = " + std::to_string(n) + " exceeds the enumeration cap");
  if (n == 1) {
    visit(LabeledTree::from_edges(1, {}));
    return;
  }
  const std::uint64_t total = tree_count(n);
  jobs = std::max(1, jobs);
  if (jobs == 1 || total < 1000) {
    for_each_tree(n, visit);
    return;
  }
  std::vector<std::thread> workers;
  std::atomic<std::uint64_t> next{0};
  constexpr std::uint64_t chunk = 1024;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (;;) {
        std::uint64_t begin = next.fetch_add(chunk);
        if (begin >= total) return;
        std::uint64_t end = std::min(begin + chunk, total);
        for (std::uint64_t index = begin; index < end; ++index)
          visit(decode_classic_prufer(prufer_sequence_for_index(index, n), n));
      }
    });
  }
  for (auto& worker : workers) worker.join();
}

CheckReport check_code_roundtrip(int max_n, int jobs) {
  CheckReport report{"leaf-group code: decode(encode(t)) == t", 0, 0};
  std::atomic<std::uint64_t> cases{0}, failures{0};
  for (int n = 2; n <= max_n; ++n) {
    parallel_tree_sweep(n, jobs, [&](const LabeledTree& t) {
      for (int r = 1; r <= n; ++r) {
        RootedTree rooted = hang_up(t, r);
        LeafGroupCode code = encode(rooted);
        bool ok = decode(code.partition, code.perm, r) == rooted &&
                  code.partition.type() == global_type(rooted) &&
                  static_cast<int>(code.perm.entries.size()) == code.partition.type().length();
        ++cases;
        if (!ok) ++failures;
      }
    });
  }
  report.cases = cases;
  report.failures = failures;
  return report;
}

// Enumerate set partitions of [n] \ {excluded} by restricted growth; for
// each, pair it with every permutation of distinct non-root values plus the
// root, and require encode(decode(pair)) to reproduce the pair.
void visit_set_partitions(const std::vector<int>& ground, std::size_t at,
                          std::vector<std::vector<int>>& blocks,
                          const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  if (at == ground.size()) {
    visit(blocks);
    return;
  }
  const std::size_t existing = blocks.size();  // recursion grows the vector
  for (std::size_t b = 0; b < existing; ++b) {
    blocks[b].push_back(ground[at]);
    visit_set_partitions(ground, at + 1, blocks, visit);
    blocks[b].pop_back();
  }
  blocks.push_back({ground[at]});
  visit_set_partitions(ground, at + 1, blocks, visit);
  blocks.pop_back();
}

void visit_k_permutations(int n, int k, int last, std::vector<int>& prefix,
                          std::vector<bool>& used,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(prefix.size()) == k - 1) {
    prefix.push_back(last);
    visit(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = 1; v <= n; ++v) {
    if (used[v] || v == last) continue;
    used[v] = true;
    prefix.push_back(v);
    visit_k_permutations(n, k, last, prefix, used, visit);
    prefix.pop_back();
    used[v] = false;
  }
}

CheckReport check_code_pairs(int max_n) {
  CheckReport report{"leaf-group code: encode(decode(pi, p)) == (pi, p)", 0, 0};
  for (int n = 2; n <= max_n; ++n) {
    for (int r = 1; r <= n; ++r) {
      std::vector<int> ground;
      for (int v = 1; v <= n; ++v)
        if (v != r) ground.push_back(v);
      std::vector<std::vector<int>> blocks;
      visit_set_partitions(ground, 0, blocks, [&](const std::vector<std::vector<int>>& raw) {
        SetPartition pi = SetPartition::from_blocks(n, r, raw);
        int k = static_cast<int>(raw.size());
        std::vector<int> prefix;
        std::vector<bool> used(n + 1, false);
        visit_k_permutations(n, k, r, prefix, used, [&](const std::vector<int>& entries) {
          KPermutation p = KPermutation::from_entries(n, entries);
          RootedTree t = decode(pi, p, r);
          LeafGroupCode code = encode(t);
          ++report.cases;
          if (!(code.partition == pi && code.perm == p)) ++report.failures;
        });
      });
    }
  }
  return report;
}

CheckReport check_phi_roundtrip(int max_n, int jobs) {
  CheckReport report{"phi: inverse(phi(t, r)) == t and type preserved", 0, 0};
  std::atomic<std::uint64_t> cases{0}, failures{0};
  for (int n = 1; n <= max_n; ++n) {
    parallel_tree_sweep(n, jobs, [&](const LabeledTree& t) {
      for (int r = 1; r <= n; ++r) {
        RootedTree image = phi(t, r);
        bool ok = image.root == r && local_type(t) == global_type(image) &&
                  phi_inverse(image) == t;
        ++cases;
        if (!ok) ++failures;
      }
    });
  }
  report.cases = cases;
  report.failures = failures;
  return report;
}

CheckReport check_cut_matrix_transport(int max_n, int jobs) {
  CheckReport report{"phi: proper-edge matrix equals transported good-edge matrix", 0, 0};
  std::atomic<std::uint64_t> cases{0}, failures{0};
  for (int n = 1; n <= max_n; ++n) {
    parallel_tree_sweep(n, jobs, [&](const LabeledTree& t) {
      for (int r = 1; r <= n; ++r) {
        PhiTrace trace;
        RootedTree image = phi_traced(t, r, trace);
        ProperEdgeCut cut = cut_proper_edges(image);
        ++cases;
        if (!(cut.matrix == trace.transported_matrix && cut.chains == trace.chains))
          ++failures;
      }
    });
  }
  report.cases = cases;
  report.failures = failures;
  return report;
}

CheckReport check_census(int max_n) {
  CheckReport report{"census matches the product formula and is root-independent", 0, 0};
  for (int n = 2; n <= max_n; ++n) {
    Census local = census(n, CensusVariant::local_unrooted);
    for (const Partition& lambda : partitions_of(n - 1)) {
      BigInt formula = count_trees_by_type(n, lambda);
      BigInt factored =
          count_set_partitions_by_type(n, lambda) * count_k_permutations(n, lambda.length());
      auto it = local.counts.find(lambda);
      BigInt counted = it == local.counts.end() ? BigInt(0) : it->second;
      ++report.cases;
      if (!(counted == formula && formula == factored)) ++report.failures;
    }
    for (int r = 1; r <= n; ++r) {
      Census global = census(n, CensusVariant::global_rooted, r);
      ++report.cases;
      if (!(global.counts == local.counts && global.total == local.total)) ++report.failures;
    }
  }
  return report;
}

CheckReport check_sibship(int max_n, int jobs) {
  CheckReport report{"sibship partition preserved by phi", 0, 0};
  std::atomic<std::uint64_t> cases{0}, failures{0};
  for (int n = 2; n <= max_n; ++n) {
    parallel_tree_sweep(n, jobs, [&](const LabeledTree& t) {
      for (int r = 1; r <= n; ++r) {
        PhiTrace trace;
        RootedTree image = phi_traced(t, r, trace);
        RootedTree hung = hang_up(t, r);
        bool ok = edge_label_partition(t, r, Orientation::local) == child_groups(image);
        for (int v = 1; ok && v <= n; ++v)
          ok = sibship(hung, v, Orientation::local) ==
               sibship(image, trace.sigma(v), Orientation::global);
        ++cases;
        if (!ok) ++failures;
      }
    });
  }
  report.cases = cases;
  report.failures = failures;
  return report;
}

CheckReport check_duyin(int max_n) {
  CheckReport report{"phi at root 1 composed with the code is a bijection", 0, 0};
  for (int n = 2; n <= max_n; ++n) {
    std::map<Partition, BigInt, PartitionDescLex> per_type;
    std::set<std::string> seen;
    bool ok = true;
    std::uint64_t trees = 0;
    for_each_tree(n, [&](const LabeledTree& t) {
      ++trees;
      RootedTree image = phi(t, 1);
      LeafGroupCode code = encode(image);
      if (!(code.partition.type() == local_type(t))) ok = false;
      std::string key = code.partition.to_text() + "|";
      for (int v : code.perm.entries) key += std::to_string(v) + ",";
      if (!seen.insert(std::move(key)).second) ok = false;  // injectivity
      ++per_type[code.partition.type()];
    });
    for (const auto& [lambda, count] : per_type) {
      BigInt expected =
          count_set_partitions_by_type(n, lambda) * count_k_permutations(n, lambda.length());
      if (count != expected) ok = false;
    }
    if (seen.size() != trees) ok = false;
    ++report.cases;
    if (!ok) ++report.failures;
  }
  return report;
}

ordered_json report_json(const CheckReport& r) {
  return {{"name", r.name},
          {"cases", r.cases},
          {"failures", r.failures},
          {"passed", r.failures == 0}};
}

// ---- command handlers ---------------------------------------------------

struct Outcome {
  Status status = Status::ok;
  ordered_json payload;
};

Outcome run_enumerate(int n, const std::string& format, std::string& text_out) {
  ordered_json trees = ordered_json::array();
  std::uint64_t count = 0;
  if (format == "text") {
    std::string lines;
    for_each_tree(n, [&](const LabeledTree& t) {
      ++count;
      for (std::size_t i = 0; i < t.edges.size(); ++i) {
        if (i) lines += ' ';
        lines += std::to_string(t.edges[i].first) + "-" + std::to_string(t.edges[i].second);
      }
      lines += '\n';
    });
    text_out = std::move(lines);
    return {Status::ok, {{"n", n}, {"count", count}, {"format", "text"}}};
  }
  for_each_tree(n, [&](const LabeledTree& t) {
    ++count;
    trees.push_back(tree_json(t)["edges"]);
  });
  return {Status::ok, {{"n", n}, {"count", count}, {"trees", std::move(trees)}}};
}

Outcome run_census(int n, const std::string& variant, int root) {
  if (variant != "local" && variant != "global")
    throw InputError("variant must be local or global");
  Census c = variant == "local" ? census(n, CensusVariant::local_unrooted)
                                : census(n, CensusVariant::global_rooted, root);
  return {Status::ok, census_json(c)};
}

Outcome run_phi(const std::string& input, int root, bool with_trace) {
  LabeledTree tree = parse_unrooted(read_file(input));
  PhiTrace trace;
  RootedTree image = phi_traced(tree, root, trace);
  ordered_json payload;
  payload["input"] = tree_json(tree);
  payload["result_tree"] = rooted_json(image);
  payload["type"] = global_type(image).to_string();
  if (with_trace) payload["trace"] = trace_json(trace, /*forward=*/true);
  return {Status::ok, std::move(payload)};
}

Outcome run_phi_inverse(const std::string& input, bool with_trace) {
  RootedTree tree = parse_rooted(read_file(input));
  PhiTrace trace;
  LabeledTree preimage = phi_inverse_traced(tree, trace);
  ordered_json payload;
  payload["input"] = rooted_json(tree);
  payload["result_tree"] = tree_json(preimage);
  payload["type"] = local_type(preimage).to_string();
  if (with_trace) payload["trace"] = trace_json(trace, /*forward=*/false);
  return {Status::ok, std::move(payload)};
}

Outcome run_prufer_encode(const std::string& input) {
  RootedTree tree = parse_rooted(read_file(input));
  LeafGroupCode code = encode(tree);
  return {Status::ok,
          {{"n", tree.n},
           {"root", tree.root},
           {"partition", code.partition.to_text()},
           {"perm", code.perm.entries},
           {"type", code.partition.type().to_string()}}};
}

Outcome run_prufer_decode(int n, int root, const std::string& partition_text,
                          const std::string& perm_text) {
  SetPartition pi = SetPartition::parse_text(n, root, partition_text);
  std::vector<int> entries;
  std::string token;
  for (char ch : perm_text + ",") {
    if (ch == ',' || ch == ' ') {
      if (!token.empty()) {
        try {
          entries.push_back(std::stoi(token));
        } catch (const std::exception&) {
          throw InputError("bad permutation entry: " + token);
        }
        token.clear();
      }
    } else {
      token += ch;
    }
  }
  KPermutation perm = KPermutation::from_entries(n, entries);
  RootedTree tree = decode(pi, perm, root);
  ordered_json payload;
  payload["result_tree"] = rooted_json(tree);
  payload["tree_file"] = to_text(tree);
  return {Status::ok, std::move(payload)};
}

Outcome run_verify(const std::string& suite, int max_n, int jobs) {
  if (max_n < 1) throw InputError("--max-n must be positive");
  std::vector<CheckReport> reports;
  bool roundtrip = suite == "roundtrip" || suite == "all";
  bool census_suite = suite == "census" || suite == "all";
  bool sibship_suite = suite == "sibship" || suite == "all";
  bool duyin = suite == "duyin" || suite == "all";
  if (!roundtrip && !census_suite && !sibship_suite && !duyin)
    throw InputError("unknown suite: " + suite);
  if (roundtrip) {
    reports.push_back(check_code_roundtrip(max_n, jobs));
    reports.push_back(check_code_pairs(std::min(max_n, 6)));
    reports.push_back(check_phi_roundtrip(max_n, jobs));
    reports.push_back(check_cut_matrix_transport(std::min(max_n, 6), jobs));
  }
  if (census_suite) reports.push_back(check_census(max_n));
  if (sibship_suite) reports.push_back(check_sibship(max_n, jobs));
  if (duyin) reports.push_back(check_duyin(std::min(max_n, 6)));
  ordered_json checks = ordered_json::array();
  bool all_passed = true;
  for (const auto& r : reports) {
    checks.push_back(report_json(r));
    all_passed = all_passed && r.failures == 0;
  }
  ordered_json payload{{"suite", suite},
                       {"max_n", max_n},
                       {"jobs", jobs},
                       {"checks", std::move(checks)},
                       {"all_passed", all_passed}};
  return {all_passed ? Status::ok : Status::mismatch, std::move(payload)};
}

Outcome run_qcheck(const std::string& identity, int m, int n, int p, int l) {
  ordered_json params{{"m", m}, {"n", n}, {"p", p}, {"l", l}};
  QPolynomial lhs, rhs;
  bool equal = true;
  if (identity == "thm4") {
    QCheckResult r = thm4_check(m, n, p, l);
    lhs = r.lhs;
    rhs = r.rhs;
    equal = r.equal();
  } else if (identity == "lemma") {
    // k is supplied through --m
    QCheckResult r = eq_lemma_check(n, m);
    params = {{"n", n}, {"k", m}};
    lhs = r.lhs;
    rhs = r.rhs;
    equal = r.equal();
  } else if (identity == "simple") {
    QCheckResult r = eq_simple_check(n, m, p, l);
    lhs = r.lhs;
    rhs = r.rhs;
    equal = r.equal();
  } else if (identity == "bridge") {
    // aggregate both sides over all partitions of m-1 with at most n parts
    for_each_partition(m - 1, m - 1, n, [&](const Partition& lambda) {
      std::vector<int> e = multiplicities_with_e0(lambda, n);
      for (int i = 0; i < static_cast<int>(e.size()); ++i) {
        if (e[i] == 0) continue;
        QCheckResult r = bridge_check(n, e, i);
        equal = equal && r.equal();
        lhs += r.lhs;
        rhs += r.rhs;
      }
    });
  } else {
    throw InputError("unknown identity: " + identity);
  }
  ordered_json payload{{"identity", identity},
                       {"params", std::move(params)},
                       {"equal", equal},
                       {"lhs", coeff_json(lhs)},
                       {"rhs", coeff_json(rhs)}};
  return {equal ? Status::ok : Status::mismatch, std::move(payload)};
}

Outcome run_idcheck(const std::string& identity, int n, int m, int p, int l) {
  std::pair<BigInt, BigInt> sides;
  ordered_json params;
  if (identity == "second") {
    sides = check_identity_second(n);
    params = {{"n", n}};
  } else if (identity == "general") {
    sides = check_identity_general(m, n, p, l);
    params = {{"m", m}, {"n", n}, {"p", p}, {"l", l}};
  } else {
    throw InputError("unknown identity: " + identity);
  }
  bool equal = sides.first == sides.second;
  ordered_json payload{{"identity", identity},
                       {"params", std::move(params)},
                       {"equal", equal},
                       {"lhs", sides.first.str()},
                       {"rhs", sides.second.str()}};
  return {equal ? Status::ok : Status::mismatch, std::move(payload)};
}

Outcome run_genfun(int n, bool group_by_type) {
  MultiPoly poly = expand_product(n);
  ordered_json payload;
  payload["n"] = n;
  ordered_json terms = ordered_json::array();
  for (const auto& [exp, coeff] : poly.terms)
    terms.push_back({{"exponents", exp}, {"coefficient", coeff.str()}});
  payload["terms"] = std::move(terms);
  payload["total"] = poly.total_mass().str();
  if (group_by_type) {
    std::map<Partition, BigInt, PartitionDescLex> groups;
    for (const auto& [exp, coeff] : poly.terms) groups[monomial_type(exp)] += coeff;
    ordered_json grouped = ordered_json::array();
    for (const auto& [type, sum] : groups)
      grouped.push_back({{"type", type.to_string()}, {"sum", sum.str()}});
    payload["groups"] = std::move(grouped);
  }
  return {Status::ok, std::move(payload)};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  auto started = std::chrono::steady_clock::now();
  CommandResult result;
  std::string text_out;

  CLI::App app{"exact tree bijections, censuses and identity checks"};
  app.require_subcommand(1);

  int n = 0, m = 1, p = 0, l = 0, root = 1, max_n = 6, jobs = 1;
  std::string format = "json", variant, input, suite, identity, partition_text, perm_text;
  bool with_trace = false, group_by_type = false;

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list every tree on [n]");
  enumerate_cmd->add_option("--n", n)->required();
  enumerate_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* census_cmd = app.add_subcommand("census", "tabulate indegree types over all trees");
  census_cmd->add_option("--n", n)->required();
  census_cmd->add_option("--variant", variant)->required()->check(CLI::IsMember({"local", "global"}));
  census_cmd->add_option("--root", root);

  auto* phi_cmd = app.add_subcommand("phi", "map an unrooted tree to a rooted tree");
  phi_cmd->add_option("--root", root)->required();
  phi_cmd->add_option("--input", input)->required();
  phi_cmd->add_flag("--trace", with_trace);

  auto* phi_inv_cmd = app.add_subcommand("phi-inverse", "map a rooted tree back");
  phi_inv_cmd->add_option("--input", input)->required();
  phi_inv_cmd->add_flag("--trace", with_trace);

  auto* prufer_cmd = app.add_subcommand("prufer", "leaf-group code of a rooted tree");
  prufer_cmd->require_subcommand(1);
  auto* encode_cmd = prufer_cmd->add_subcommand("encode", "tree -> (partition, permutation)");
  encode_cmd->add_option("--input", input)->required();
  auto* decode_cmd = prufer_cmd->add_subcommand("decode", "(partition, permutation) -> tree");
  decode_cmd->add_option("--partition", partition_text)->required();
  decode_cmd->add_option("--perm", perm_text)->required();
  decode_cmd->add_option("--root", root)->required();
  decode_cmd->add_option("--n", n)->required();

  auto* verify_cmd = app.add_subcommand("verify", "exhaustive verification sweeps");
  verify_cmd->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"roundtrip", "census", "sibship", "duyin", "all"}));
  verify_cmd->add_option("--max-n", max_n)->required();
  verify_cmd->add_option("--jobs", jobs);

  auto* qcheck_cmd = app.add_subcommand("qcheck", "polynomial identity checks");
  qcheck_cmd->add_option("--identity", identity)
      ->required()
      ->check(CLI::IsMember({"thm4", "lemma", "simple", "bridge"}));
  qcheck_cmd->add_option("--m", m);
  qcheck_cmd->add_option("--n", n)->required();
  qcheck_cmd->add_option("--p", p);
  qcheck_cmd->add_option("--l", l);

  auto* idcheck_cmd = app.add_subcommand("idcheck", "integer identity checks");
  idcheck_cmd->add_option("--identity", identity)
      ->required()
      ->check(CLI::IsMember({"second", "general"}));
  idcheck_cmd->add_option("--n", n)->required();
  idcheck_cmd->add_option("--m", m);
  idcheck_cmd->add_option("--p", p);
  idcheck_cmd->add_option("--l", l);

  auto* genfun_cmd = app.add_subcommand("genfun", "indegree generating function");
  genfun_cmd->add_option("--n", n)->required();
  genfun_cmd->add_flag("--group-by-type", group_by_type);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    Outcome outcome;
    if (*enumerate_cmd) {
      outcome = run_enumerate(n, format, text_out);
    } else if (*census_cmd) {
      outcome = run_census(n, variant, root);
    } else if (*phi_cmd) {
      outcome = run_phi(input, root, with_trace);
    } else if (*phi_inv_cmd) {
      outcome = run_phi_inverse(input, with_trace);
    } else if (*encode_cmd) {
      outcome = run_prufer_encode(input);
    } else if (*decode_cmd) {
      outcome = run_prufer_decode(n, root, partition_text, perm_text);
    } else if (*verify_cmd) {
      outcome = run_verify(suite, max_n, jobs);
    } else if (*qcheck_cmd) {
      outcome = run_qcheck(identity, m, n, p, l);
    } else if (*idcheck_cmd) {
      outcome = run_idcheck(identity, n, m, p, l);
    } else if (*genfun_cmd) {
      outcome = run_genfun(n, group_by_type);
    }
    result.status = outcome.status;
    result.payload = std::move(outcome.payload);
  } catch (const CLI::ParseError& e) {
    result.status = Status::error;
    result.payload = {{"message", std::string("argument error: ") + e.what()}};
  } catch (const DecodeError& e) {
    result.status = Status::error;
    result.payload = {{"message", e.what()}, {"failed_step", e.step}};
  } catch (const Error& e) {
    result.status = Status::error;
    result.payload = {{"message", e.what()}};
  }

  if (!text_out.empty() && result.status == Status::ok)
    result.payload["text"] = std::move(text_out);
  auto elapsed = std::chrono::steady_clock::now() - started;
  result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  return result;
}

int run_main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CommandResult result = run(args);
  if (result.status == Status::ok && result.payload.contains("format") &&
      result.payload["format"] == "text") {
    std::cout << result.payload["text"].get<std::string>();
  } else {
    ordered_json envelope;
    envelope["status"] = result.status == Status::ok       ? "ok"
                         : result.status == Status::mismatch ? "mismatch"
                                                             : "error";
    envelope["elapsed_ms"] = result.elapsed_ms;
    envelope["payload"] = result.payload;
    std::cout << envelope.dump() << '\n';
  }
  return result.exit_code();
}

}  // namespace treebij::cli
